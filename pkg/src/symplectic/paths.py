import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import DomainError, InputError
from ..numkern import DEFAULT_POLICY, Subspace, TolerancePolicy, as_finite_array, max_angle
from .space import Lagrangian, SymplecticSpace

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEP = 0.2

# no step of a built path is longer than 1/MIN_STEPS of the whole interval
MIN_STEPS = 8

Sampler = Callable[[float], Subspace]


@dataclass(frozen=True, eq=False)
class LagrangianPath:
    """
    A sampled continuous path of Lagrangians. Consecutive samples differ by a
    largest principal angle of at most `max_step`; `sampler`, when present,
    gives the path at any time and is used to refine the mesh.
    """
    space: SymplecticSpace
    mesh: Tuple[float, ...]
    samples: Tuple[Lagrangian, ...]
    max_step: float = DEFAULT_MAX_STEP
    sampler: Optional[Sampler] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        mesh = tuple(float(t) for t in as_finite_array(self.mesh, ndim=1))
        if len(mesh) < 2:
            raise InputError("A Lagrangian path needs at least two mesh points")
        if len(mesh) != len(self.samples):
            raise InputError(f"Mesh has {len(mesh)} points but {len(self.samples)} samples were given")
        if any(b <= a for a, b in zip(mesh, mesh[1:])):
            raise InputError("Mesh must be strictly increasing")
        for i, (s0, s1) in enumerate(zip(self.samples, self.samples[1:])):
            step = max_angle(s0.sub, s1.sub)
            if step > self.max_step:
                raise DomainError(
                    f"Samples {i} and {i + 1} are {step:.3f} rad apart, above the continuity bound {self.max_step}")
        object.__setattr__(self, 'mesh', mesh)
        object.__setattr__(self, 'samples', tuple(self.samples))

    @classmethod
    def build(cls, space: SymplecticSpace, mesh: Sequence[float], sampler: Sampler,
              policy: TolerancePolicy = DEFAULT_POLICY, max_step: float = DEFAULT_MAX_STEP) -> "LagrangianPath":
        """
        Sample `sampler` on `mesh` and bisect steps until each one is short.

        A step is accepted when it spans at most 1/MIN_STEPS of the interval
        and its end samples and midpoint sample are pairwise within `max_step`.
        Steps whose ends coincide while the path turns in between (a half-turn
        of a line, or any loop) are therefore split. Each original step is
        bisected at most refine_limit times.
        """
        times: List[float] = [float(t) for t in mesh]
        subs: List[Lagrangian] = [Lagrangian.checked(space, sampler(t), policy) for t in times]
        depths = [0] * (len(times) - 1)
        midpoints: Dict[float, Lagrangian] = {}

        def midpoint(t_mid: float) -> Lagrangian:
            if t_mid not in midpoints:
                midpoints[t_mid] = Lagrangian.checked(space, sampler(t_mid), policy)
            return midpoints[t_mid]

        longest = (times[-1] - times[0]) / MIN_STEPS
        i = 0
        while i < len(times) - 1:
            t_mid = 0.5 * (times[i] + times[i + 1])
            if times[i + 1] - times[i] <= longest and max_angle(subs[i].sub, subs[i + 1].sub) <= max_step:
                mid = midpoint(t_mid)
                if max(max_angle(subs[i].sub, mid.sub), max_angle(mid.sub, subs[i + 1].sub)) <= max_step:
                    i += 1
                    continue
            if depths[i] >= policy.refine_limit or not times[i] < t_mid < times[i + 1]:
                raise DomainError(f"Path is not continuous near t = {times[i]}: refinement limit reached")
            times.insert(i + 1, t_mid)
            subs.insert(i + 1, midpoint(t_mid))
            depths[i] += 1
            depths.insert(i + 1, depths[i])
        if len(times) > len(mesh):
            logger.debug(f"lagrangian path: refined {len(mesh)} -> {len(times)} samples")
        return cls(space, tuple(times), tuple(subs), max_step, sampler)

    @property
    def a(self) -> float:
        return self.mesh[0]

    @property
    def b(self) -> float:
        return self.mesh[-1]

    @property
    def n(self) -> int:
        return self.space.n

    def __len__(self) -> int:
        return len(self.samples)

    def sample_at(self, t: float, policy: TolerancePolicy = DEFAULT_POLICY) -> Lagrangian:
        if t in self.mesh:
            return self.samples[self.mesh.index(t)]
        if self.sampler is None:
            raise DomainError(f"Time {t} is not a mesh point and the path has no sampler")
        return Lagrangian.checked(self.space, self.sampler(t), policy)

    def refine_step(self, index: int, policy: TolerancePolicy = DEFAULT_POLICY) -> "LagrangianPath":
        """Insert the midpoint of step `index` (needs a sampler)."""
        if self.sampler is None:
            raise DomainError("Cannot refine a Lagrangian path without a sampler")
        t_mid = 0.5 * (self.mesh[index] + self.mesh[index + 1])
        mid = Lagrangian.checked(self.space, self.sampler(t_mid), policy)
        return LagrangianPath(
            self.space,
            self.mesh[:index + 1] + (t_mid,) + self.mesh[index + 1:],
            self.samples[:index + 1] + (mid,) + self.samples[index + 1:],
            self.max_step,
            self.sampler,
        )

    def split(self, index: int) -> Tuple["LagrangianPath", "LagrangianPath"]:
        if not 0 < index < len(self.mesh) - 1:
            raise DomainError(f"Split index {index} is not an interior mesh point")
        left = LagrangianPath(self.space, self.mesh[:index + 1], self.samples[:index + 1],
                              self.max_step, self.sampler)
        right = LagrangianPath(self.space, self.mesh[index:], self.samples[index:],
                               self.max_step, self.sampler)
        return left, right

    def reversed(self) -> "LagrangianPath":
        a, b = self.a, self.b
        sampler = None
        if self.sampler is not None:
            forward = self.sampler

            def sampler(t: float) -> Subspace:
                return forward(a + b - t)
        mesh = tuple(a + b - t for t in reversed(self.mesh))
        return LagrangianPath(self.space, mesh, tuple(reversed(self.samples)), self.max_step, sampler)

    def __repr__(self) -> str:
        return f"LagrangianPath(dim={self.space.dim}, interval=[{self.a}, {self.b}], samples={len(self)})"


def constant_lagrangian_path(l: Lagrangian, a: float = 0.0, b: float = 1.0) -> LagrangianPath:
    return LagrangianPath(l.space, (a, b), (l, l), sampler=lambda t: l.sub)

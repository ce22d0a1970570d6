import bisect
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..errors import DomainError, InputError
from ..numkern import DEFAULT_POLICY, Subspace, SymMatrix, TolerancePolicy, as_finite_array
from ..quadform import BilinForm, Symmetry, restrict

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FormPath:
    """
    A path of symmetric forms on R^n, linear in the matrix entries between
    consecutive mesh points.

    `reference_norm` is the scale for every zero/nonzero decision on the path.
    It defaults to the largest sample norm; restricted paths keep their parent's.
    """
    mesh: Tuple[float, ...]
    samples: Tuple[SymMatrix, ...]
    reference_norm: Optional[float] = None

    def __post_init__(self) -> None:
        mesh = tuple(float(t) for t in as_finite_array(self.mesh, ndim=1))
        samples = tuple(s if isinstance(s, SymMatrix) else SymMatrix(s) for s in self.samples)
        if len(mesh) < 2:
            raise InputError("A form path needs at least two mesh points")
        if len(samples) != len(mesh):
            raise InputError(f"Mesh has {len(mesh)} points but {len(samples)} samples were given")
        if any(b <= a for a, b in zip(mesh, mesh[1:])):
            raise InputError("Mesh must be strictly increasing")
        if len({s.dim for s in samples}) != 1:
            raise InputError("All samples of a form path must have the same dimension")
        object.__setattr__(self, 'mesh', mesh)
        object.__setattr__(self, 'samples', samples)
        if self.reference_norm is None:
            object.__setattr__(self, 'reference_norm', max(s.norm for s in samples))

    @property
    def dim(self) -> int:
        return self.samples[0].dim

    @property
    def a(self) -> float:
        return self.mesh[0]

    @property
    def b(self) -> float:
        return self.mesh[-1]

    @property
    def segments(self) -> int:
        return len(self.mesh) - 1

    @property
    def start(self) -> SymMatrix:
        return self.samples[0]

    @property
    def end(self) -> SymMatrix:
        return self.samples[-1]

    def at(self, t: float) -> SymMatrix:
        """The form at time t, by linear interpolation inside the containing segment."""
        if not self.a <= t <= self.b:
            raise DomainError(f"Time {t} lies outside [{self.a}, {self.b}]")
        i = bisect.bisect_left(self.mesh, t)
        if i < len(self.mesh) and self.mesh[i] == t:
            return self.samples[i]
        t0, t1 = self.mesh[i - 1], self.mesh[i]
        s = (t - t0) / (t1 - t0)
        return SymMatrix((1.0 - s) * self.samples[i - 1].entries + s * self.samples[i].entries)

    def endpoint_form(self, which: str) -> BilinForm:
        """Q_a or Q_b as a form on R^n, sharing the path's reference norm."""
        sample = self.start if which == 'a' else self.end
        return BilinForm(sample.entries, Symmetry.SYMMETRIC, Subspace.full(self.dim), self.reference_norm)

    def is_closed(self, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
        gap = float(np.linalg.norm(self.start.entries - self.end.entries, 2)) if self.dim else 0.0
        return gap <= policy.threshold(self.reference_norm)

    def split(self, index: int) -> Tuple["FormPath", "FormPath"]:
        """Cut at an interior mesh point."""
        if not 0 < index < len(self.mesh) - 1:
            raise DomainError(f"Split index {index} is not an interior mesh point")
        left = FormPath(self.mesh[:index + 1], self.samples[:index + 1], self.reference_norm)
        right = FormPath(self.mesh[index:], self.samples[index:], self.reference_norm)
        return left, right

    def reversed(self) -> "FormPath":
        """Same interval, traversed backwards: t -> a + b - t."""
        mesh = tuple(self.a + self.b - t for t in reversed(self.mesh))
        return FormPath(mesh, tuple(reversed(self.samples)), self.reference_norm)

    def shifted(self, offset: float) -> "FormPath":
        return FormPath(tuple(t + offset for t in self.mesh), self.samples, self.reference_norm)

    def resampled(self, mesh: Sequence[float]) -> "FormPath":
        """The same piecewise-linear path evaluated on a finer mesh over the same interval."""
        mesh = tuple(float(t) for t in mesh)
        if mesh[0] != self.a or mesh[-1] != self.b:
            raise DomainError("Resampling mesh must span the same interval")
        return FormPath(mesh, tuple(self.at(t) for t in mesh), self.reference_norm)

    def __repr__(self) -> str:
        return f"FormPath(dim={self.dim}, interval=[{self.a}, {self.b}], segments={self.segments})"


def constant_path(matrix, a: float = 0.0, b: float = 1.0) -> FormPath:
    m = SymMatrix(matrix)
    return FormPath((a, b), (m, m))


def zero_path(n: int, mesh: Sequence[float] = (0.0, 1.0)) -> FormPath:
    """The zero form on R^n (n may be 0) over the given mesh."""
    zero = SymMatrix.zeros(n)
    return FormPath(tuple(mesh), tuple(zero for _ in mesh))


def linear_path(start, end, a: float = 0.0, b: float = 1.0) -> FormPath:
    return FormPath((a, b), (SymMatrix(start), SymMatrix(end)))


def _union_mesh(p1: FormPath, p2: FormPath) -> Tuple[FormPath, FormPath]:
    if p1.mesh == p2.mesh:
        return p1, p2
    if p1.a != p2.a or p1.b != p2.b:
        raise DomainError(f"Paths live on different intervals [{p1.a}, {p1.b}] and [{p2.a}, {p2.b}]")
    mesh = tuple(np.union1d(p1.mesh, p2.mesh).tolist())
    return p1.resampled(mesh), p2.resampled(mesh)


def restrict_path(p: FormPath, v: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> FormPath:
    """Samplewise Q_t|_V in the coordinates of V's frame; same mesh."""
    samples = []
    for sample in p.samples:
        form = BilinForm(sample.entries, Symmetry.SYMMETRIC, Subspace.full(p.dim), p.reference_norm)
        samples.append(SymMatrix(restrict(form, v, policy).matrix))
    return FormPath(p.mesh, tuple(samples), p.reference_norm)


def concatenate(p1: FormPath, p2: FormPath, policy: TolerancePolicy = DEFAULT_POLICY) -> FormPath:
    """p1 followed by p2, with p2 shifted to start where p1 ends."""
    if p1.dim != p2.dim:
        raise DomainError(f"Cannot concatenate paths of dimension {p1.dim} and {p2.dim}")
    scale = max(p1.reference_norm, p2.reference_norm)
    gap = float(np.linalg.norm(p1.end.entries - p2.start.entries, 2)) if p1.dim else 0.0
    if gap > policy.threshold(scale):
        raise DomainError(f"End of the first path differs from start of the second by {gap:.3e}")
    shifted = p2.shifted(p1.b - p2.a)
    return FormPath(p1.mesh + shifted.mesh[1:], p1.samples + shifted.samples[1:], scale)


def direct_sum(p1: FormPath, p2: FormPath) -> FormPath:
    """Block-diagonal path; meshes are merged by linear resampling when they differ."""
    p1, p2 = _union_mesh(p1, p2)
    samples = tuple(SymMatrix(scipy.linalg.block_diag(s1.entries, s2.entries))
                    for s1, s2 in zip(p1.samples, p2.samples))
    return FormPath(p1.mesh, samples, max(p1.reference_norm, p2.reference_norm))


def add_paths(p: FormPath, k: FormPath) -> FormPath:
    """Samplewise sum L_t + K_t."""
    if p.dim != k.dim:
        raise DomainError(f"Cannot add paths of dimension {p.dim} and {k.dim}")
    p, k = _union_mesh(p, k)
    samples = tuple(SymMatrix(s1.entries + s2.entries) for s1, s2 in zip(p.samples, k.samples))
    return FormPath(p.mesh, samples)


def conjugate(p: FormPath, mpath: Sequence[np.ndarray], policy: TolerancePolicy = DEFAULT_POLICY) -> FormPath:
    """
    Samplewise M_t^T Q_t M_t for M_t given on the mesh of p. Each M_t needs a
    smallest singular value above rank_tol.
    """
    if len(mpath) != len(p.mesh):
        raise DomainError(f"Need {len(p.mesh)} conjugating matrices, got {len(mpath)}")
    samples = []
    for i, (sample, m) in enumerate(zip(p.samples, mpath)):
        m = as_finite_array(m)
        if m.shape != (p.dim, p.dim):
            raise DomainError(f"Conjugating matrix {i} has shape {m.shape}")
        if p.dim:
            sv = scipy.linalg.svdvals(m)
            if sv[-1] <= policy.rank_tol:
                raise DomainError(f"Conjugating matrix {i} is singular (smallest singular value {sv[-1]:.3e})")
        samples.append(SymMatrix(m.T @ sample.entries @ m))
    return FormPath(p.mesh, tuple(samples))

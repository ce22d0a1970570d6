import logging
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..numkern import (
    DEFAULT_POLICY,
    Subspace,
    TolerancePolicy,
    column_space,
    intersect,
    kernel,
    spectral_norm,
    subspaces_equal,
)
from ..quadform import perp, restrict
from ..symplectic import Lagrangian, LagrangianPath, SymplecticSpace, chart

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ReductionSetup:
    """
    A coisotropic subspace W of a symplectic space and its reduction W / W^omega.

    Reduced coordinates come from `r`, an orthonormal complement of w_perp
    inside w: the quotient map is x -> r^T x on w and omega_bar = r^T J r.
    """
    space: SymplecticSpace
    w: Subspace
    w_perp: Subspace
    r: Subspace
    reduced: SymplecticSpace

    @property
    def k(self) -> int:
        return self.w_perp.dim

    @property
    def q_map(self) -> np.ndarray:
        """The quotient map in w-coordinates: w-coordinates to reduced coordinates."""
        return self.r.frame.T @ self.w.frame

    def quotient(self, x: np.ndarray) -> np.ndarray:
        """Reduced coordinates of vectors (or frames) x lying in w."""
        return self.r.frame.T @ x

    def lift(self, y: np.ndarray) -> np.ndarray:
        """A representative in w of reduced coordinates y."""
        return self.r.frame @ y

    def quotient_residual(self) -> float:
        """max |omega_bar(qu, qv) - omega(u, v)| over frame pairs of w, relative to ||omega||."""
        j = self.space.matrix
        qf = self.quotient(self.w.frame)
        diff = qf.T @ self.reduced.matrix @ qf - self.w.frame.T @ j @ self.w.frame
        return spectral_norm(diff) / self.space.omega.reference_norm

    def __repr__(self) -> str:
        return f"ReductionSetup(dim={self.space.dim}, k={self.k})"


def make_reduction(space: SymplecticSpace, w: Subspace, policy: TolerancePolicy = DEFAULT_POLICY) -> ReductionSetup:
    """Reduce by a coisotropic w, i.e. one containing its omega-orthogonal."""
    if w.ambient_dim != space.dim:
        raise DomainError(f"Subspace lives in R^{w.ambient_dim}, space is R^{space.dim}")
    w_perp = perp(space.omega, w, policy)
    if not w.contains(w_perp, policy):
        raise DomainError("Subspace is not coisotropic: it does not contain its omega-orthogonal")
    if w_perp.dim >= space.n:
        raise DomainError(f"Reduction by a Lagrangian leaves nothing (k = {w_perp.dim})")
    if w_perp.dim == 0:
        r = w
    else:
        r = intersect(w, w_perp.orthogonal_complement(policy), policy)
    reduced = SymplecticSpace.from_matrix(r.frame.T @ space.matrix @ r.frame, policy)
    logger.debug(f"reduction: dim {space.dim} -> {reduced.dim}, k = {w_perp.dim}")
    return ReductionSetup(space, w, w_perp, r, reduced)


def reduce_subspace(setup: ReductionSetup, l: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY) -> Lagrangian:
    """q(l ∩ W) for any Lagrangian l, including those that meet W^omega."""
    image = column_space(setup.quotient(intersect(l.sub, setup.w, policy).frame), policy)
    return Lagrangian.checked(setup.reduced, image, policy)


def in_admissible_set(setup: ReductionSetup, l: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """l ∩ W^omega = {0}."""
    return intersect(l.sub, setup.w_perp, policy).dim == 0


def reduce_lagrangian(setup: ReductionSetup, l: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY) -> Lagrangian:
    """lambda(l) = q(l ∩ W) for l transverse to W^omega."""
    if not in_admissible_set(setup, l, policy):
        raise DomainError("Lagrangian meets W^omega, so it lies outside the domain of the reduction map")
    return reduce_subspace(setup, l, policy)


def reduce_path(setup: ReductionSetup, path: LagrangianPath,
                policy: TolerancePolicy = DEFAULT_POLICY) -> LagrangianPath:
    """
    Samplewise lambda. With a sampler the reduced path is rebuilt through it,
    so steps that break the continuity bound get refined.
    """
    samples = []
    for i, sample in enumerate(path.samples):
        if not in_admissible_set(setup, sample, policy):
            raise DomainError(f"Sample {i} (t = {path.mesh[i]:.6g}) meets W^omega",
                              details={'sample': i, 't': path.mesh[i]})
        samples.append(reduce_subspace(setup, sample, policy))

    if path.sampler is None:
        return LagrangianPath(setup.reduced, path.mesh, tuple(samples), path.max_step)

    forward = path.sampler
    space = path.space

    def reduced_sampler(t: float) -> Subspace:
        return reduce_lagrangian(setup, Lagrangian.checked(space, forward(t), policy), policy).sub

    return LagrangianPath.build(setup.reduced, path.mesh, reduced_sampler, policy, path.max_step)


def reduce_chart_form(setup: ReductionSetup, l0: Lagrangian, l1: Lagrangian, l: Lagrangian,
                      policy: TolerancePolicy = DEFAULT_POLICY) -> float:
    """
    For a chart complement l1 containing W^omega: the distance between the
    reduced chart form of lambda(l) and the restriction of l's chart form to
    V = l0 ∩ W, with both written on the frame of lambda(l0). Zero up to
    rounding.
    """
    if not l1.sub.contains(setup.w_perp, policy):
        raise DomainError("Chart complement does not contain W^omega")
    l0_bar = reduce_lagrangian(setup, l0, policy)
    l1_bar = reduce_subspace(setup, l1, policy)
    l_bar = reduce_lagrangian(setup, l, policy)
    reduced_form = chart(l0_bar, l1_bar, l_bar, policy).matrix

    v = intersect(l0.sub, setup.w, policy)
    restricted = restrict(chart(l0, l1, l, policy), v, policy).matrix
    coords = l0_bar.frame.T @ setup.quotient(v.frame)
    inv = np.linalg.inv(coords)
    aligned = inv.T @ restricted @ inv
    return spectral_norm(aligned - reduced_form)


def q_map_kernel_matches(setup: ReductionSetup, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """The quotient map vanishes exactly on W^omega."""
    ker = kernel(setup.q_map, policy)
    return subspaces_equal(Subspace(setup.w.frame @ ker.frame), setup.w_perp, policy)


def identity_reduction(space: SymplecticSpace) -> ReductionSetup:
    """Reduction by the whole space (k = 0)."""
    return ReductionSetup(space, Subspace.full(space.dim), Subspace.zero(space.dim),
                          Subspace.full(space.dim), space)

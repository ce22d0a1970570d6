"""
Graph charts of the Lagrangian Grassmannian.

Fix complementary Lagrangians l0, l1. Every Lagrangian l transverse to l1 is
the graph {u + Tu : u in l0} of a unique T: l0 -> l1, and the chart sends l
to the symmetric form Q[u, v] = omega(Tu, v) on l0.
"""
import numpy as np
import scipy.linalg

from ..errors import ChartDomainError, DomainError
from ..numkern import DEFAULT_POLICY, Subspace, TolerancePolicy, column_space, intersect, min_angle, spectral_norm
from ..quadform import BilinForm, Symmetry, restrict
from .space import Lagrangian


def transversality_margin(s1: Subspace, s2: Subspace) -> float:
    """Smallest principal angle; zero when the subspaces meet."""
    return min_angle(s1, s2)


def _check_pair(l0: Lagrangian, l1: Lagrangian, policy: TolerancePolicy) -> None:
    if l0.space is not l1.space and not np.array_equal(l0.space.matrix, l1.space.matrix):
        raise DomainError("Chart Lagrangians live in different symplectic spaces")
    if intersect(l0.sub, l1.sub, policy).dim:
        raise DomainError("Chart Lagrangians l0 and l1 are not complementary")


def chart(l0: Lagrangian, l1: Lagrangian, l: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY) -> BilinForm:
    """The symmetric form omega(T., .) on l0, in the coordinates of l0's frame."""
    _check_pair(l0, l1, policy)
    if intersect(l.sub, l1.sub, policy).dim:
        raise ChartDomainError("Lagrangian meets the chart complement l1")

    a0, a1 = l0.frame, l1.frame
    n = a0.shape[1]
    coeffs = np.linalg.solve(np.hstack([a0, a1]), l.frame)
    x, y = coeffs[:n], coeffs[n:]
    sv = scipy.linalg.svdvals(x)
    if sv[-1] <= policy.threshold(sv[0]):
        raise ChartDomainError(f"Lagrangian is numerically not transverse to l1 (sigma_min {sv[-1]:.3e})")
    z = np.linalg.solve(x.T, y.T).T
    q = (a1 @ z).T @ l0.space.matrix @ a0

    asymmetry = spectral_norm(q - q.T)
    tol = policy.angle_tol * max(1.0, spectral_norm(q)) * max(1.0, 1.0 / sv[-1])
    if asymmetry > tol:
        raise DomainError(f"Chart form is not symmetric (asymmetry {asymmetry:.3e}); is l Lagrangian?")
    return BilinForm(q, Symmetry.SYMMETRIC, l0.sub)


def unchart(l0: Lagrangian, l1: Lagrangian, q, policy: TolerancePolicy = DEFAULT_POLICY) -> Lagrangian:
    """
    The Lagrangian graph of the form q on l0. `q` is a BilinForm whose ambient
    subspace is l0, or a symmetric matrix in the coordinates of l0's frame.
    """
    _check_pair(l0, l1, policy)
    if isinstance(q, BilinForm):
        if not q.is_symmetric:
            raise DomainError("unchart needs a symmetric form")
        matrix = restrict(q, l0.sub, policy).matrix
    else:
        matrix = np.asarray(q, dtype=float)
        if matrix.shape != (l0.space.n, l0.space.n):
            raise DomainError(f"Chart form has shape {matrix.shape}, expected n x n with n = {l0.space.n}")
        matrix = 0.5 * (matrix + matrix.T)

    a0, a1 = l0.frame, l1.frame
    p = a1.T @ l0.space.matrix @ a0
    z = np.linalg.solve(p.T, matrix)
    return Lagrangian.checked(l0.space, column_space(a0 + a1 @ z, policy), policy)

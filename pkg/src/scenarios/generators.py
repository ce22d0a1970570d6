"""
Seeded instance generators.

Every generator is a pure function of its random source and parameters, and
every promised property (signature, closedness, constant kernel, meeting L0)
holds by construction rather than by rejection.
"""
import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np
import scipy.linalg

from ..errors import DomainError, InternalError
from ..numkern import DEFAULT_POLICY, Subspace, SymMatrix, TolerancePolicy, kernel
from ..reduction import ReductionSetup, make_reduction
from ..specflow import FormPath
from ..symplectic import (
    DEFAULT_MAX_STEP,
    Lagrangian,
    LagrangianPath,
    SymplecticSpace,
    horizontal,
    standard_space,
    symplectic_image,
    unchart,
    vertical,
)
from .seeds import RandomSource, as_generator

logger = logging.getLogger(__name__)

PATTERN_SYMBOLS = ('+', '-', '0')
MAX_CONDITION = 10.0
PERTURBATION = 0.25
GL_DELTA = 0.02


def random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)


def well_conditioned(rng: np.random.Generator, n: int, condition: float = MAX_CONDITION) -> np.ndarray:
    """U diag(s) V^T with singular values in [1, condition]."""
    s = rng.uniform(1.0, condition, size=n)
    return random_orthogonal(rng, n) @ np.diag(s) @ random_orthogonal(rng, n).T


def _random_symmetric(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n))
    return 0.5 * (g + g.T)


def _small_symmetric(rng: np.random.Generator, n: int, size: float) -> np.ndarray:
    e = _random_symmetric(rng, n)
    norm = np.linalg.norm(e, 2) if n else 0.0
    return e * (size / norm) if norm > 0 else e


def _check_pattern(pattern: Sequence[str], n: int) -> List[str]:
    pattern = list(pattern)
    if len(pattern) != n:
        raise DomainError(f"Signature pattern has length {len(pattern)}, expected {n}")
    bad = [s for s in pattern if s not in PATTERN_SYMBOLS]
    if bad:
        raise DomainError(f"Signature pattern symbols must be '+', '-' or '0', got {bad}")
    return pattern


def _pattern_diagonal(rng: np.random.Generator, pattern: Sequence[str]) -> np.ndarray:
    signs = np.array([{'+': 1.0, '-': -1.0, '0': 0.0}[s] for s in pattern])
    return signs * rng.uniform(1.0, 2.0, size=len(signs))


def gen_symmetric(seed: RandomSource, n: int, signature_pattern: Optional[Sequence[str]] = None) -> SymMatrix:
    """
    A random symmetric matrix. With a pattern the result is M^T diag(d) M for a
    well-conditioned M and |d_i| in [1, 2] signed by the pattern, so the index
    is the number of '-' and the nullity the number of '0'.
    """
    rng = as_generator(seed)
    if signature_pattern is None:
        return SymMatrix(_random_symmetric(rng, n))
    d = _pattern_diagonal(rng, _check_pattern(signature_pattern, n))
    m = well_conditioned(rng, n)
    return SymMatrix(m.T @ np.diag(d) @ m)


def random_pattern(seed: RandomSource, n: int, zeros: int = 0) -> List[str]:
    """A signature pattern with exactly `zeros` zero entries and random signs elsewhere."""
    rng = as_generator(seed)
    if not 0 <= zeros <= n:
        raise DomainError(f"Cannot place {zeros} zeros in a pattern of length {n}")
    pattern = ['+' if rng.random() < 0.5 else '-' for _ in range(n)]
    for i in rng.choice(n, size=zeros, replace=False):
        pattern[int(i)] = '0'
    return pattern


def engineered_pattern(seed: RandomSource, n: int, zeros: int = 0, indefinite: bool = False) -> List[str]:
    """Like random_pattern, with at least one '+' and one '-' when `indefinite`."""
    rng = as_generator(seed)
    if indefinite and n - zeros < 2:
        raise DomainError(f"An indefinite pattern of length {n} cannot hold {zeros} zeros")
    pattern = random_pattern(rng, n, zeros)
    if indefinite:
        nonzero = [i for i, s in enumerate(pattern) if s != '0']
        pattern[nonzero[0]], pattern[nonzero[1]] = '+', '-'
    return pattern


def _isotropic_vector(q: np.ndarray, policy: TolerancePolicy) -> Optional[np.ndarray]:
    """A vector x outside ker Q with Q[x, x] = 0, when Q is indefinite."""
    values, vectors = np.linalg.eigh(q)
    thr = policy.threshold(max(np.max(np.abs(values), initial=0.0), 1.0))
    neg = np.flatnonzero(values < -thr)
    pos = np.flatnonzero(values > thr)
    if not len(neg) or not len(pos):
        return None
    lam_neg, lam_pos = values[neg[0]], values[pos[-1]]
    return np.sqrt(lam_pos) * vectors[:, neg[0]] + np.sqrt(-lam_neg) * vectors[:, pos[-1]]


def gen_test_subspace(seed: RandomSource, q: SymMatrix, dim: int, meet_kernel: bool = False,
                      meet_perp: bool = False, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """
    A random subspace W of dimension `dim`, optionally engineered so that
    W ∩ ker Q != 0 (`meet_kernel`) or W ∩ W^Q contains a vector outside ker Q
    (`meet_perp`).
    """
    rng = as_generator(seed)
    n = q.dim
    if not 0 <= dim <= n:
        raise DomainError(f"Subspace dimension {dim} is outside [0, {n}]")
    forced: List[np.ndarray] = []
    if meet_kernel:
        ker = kernel(q.entries, policy)
        if ker.dim == 0:
            raise DomainError("meet_kernel needs a degenerate form")
        forced.append(ker.frame @ rng.standard_normal(ker.dim))

    pool = np.eye(n)
    if meet_perp:
        x = _isotropic_vector(q.entries, policy)
        if x is None:
            raise DomainError("meet_perp needs an indefinite form")
        forced.append(x)
        pool = scipy.linalg.null_space((q.entries @ x)[None, :])
    if len(forced) > dim:
        raise DomainError(f"Cannot fit {len(forced)} engineered vectors into a subspace of dimension {dim}")

    if dim == 0:
        return Subspace.zero(n)
    extra = [pool @ rng.standard_normal(pool.shape[1]) for _ in range(dim - len(forced))]
    w = Subspace.span(forced + extra, policy)
    if w.dim != dim:
        raise InternalError(f"Generated subspace has dimension {w.dim}, expected {dim}")
    return w


def gen_mesh(seed: RandomSource, mesh_size: int, a: float = 0.0, b: float = 1.0) -> np.ndarray:
    """a, b and mesh_size - 2 random interior points."""
    rng = as_generator(seed)
    if mesh_size < 2:
        raise DomainError(f"A mesh needs at least two points, got {mesh_size}")
    mesh = np.concatenate([[a], np.sort(rng.uniform(a, b, size=mesh_size - 2)), [b]])
    if np.any(np.diff(mesh) <= 1e-6 * (b - a)):
        return np.linspace(a, b, mesh_size)
    return mesh


def gen_gl_path(seed: RandomSource, n: int, mesh_size: int, spread: float = 0.5) -> List[np.ndarray]:
    """Invertible matrices N (I + E_k) with ||E_k|| = spread < 1 and N well-conditioned."""
    if not 0.0 <= spread < 1.0:
        raise DomainError(f"spread must lie in [0, 1), got {spread}")
    rng = as_generator(seed)
    base = well_conditioned(rng, n)
    path = []
    for _ in range(mesh_size):
        g = rng.standard_normal((n, n))
        norm = np.linalg.norm(g, 2) if n else 1.0
        path.append(base @ (np.eye(n) + spread * g / norm))
    return path


def _block_upper(rng: np.random.Generator, n: int, r: int, delta: float) -> np.ndarray:
    """I + E with ||E|| = delta and E zero below the leading r x r block column."""
    g = rng.standard_normal((n, n))
    g[r:, :r] = 0.0
    norm = np.linalg.norm(g, 2)
    return np.eye(n) + (delta * g / norm if norm > 0 else g)


def _invertible_samples(rng: np.random.Generator, n: int, count: int, closed: bool) -> List[np.ndarray]:
    """O (D + E_k) O^T: fixed signature, ||E_k|| <= 1/4 < min |d|, invertible along every chord."""
    if n == 0:
        return [np.zeros((0, 0)) for _ in range(count)]
    o = random_orthogonal(rng, n)
    d = np.diag(_pattern_diagonal(rng, random_pattern(rng, n)))
    samples = [o @ (d + _small_symmetric(rng, n, PERTURBATION * rng.random())) @ o.T for _ in range(count)]
    if closed:
        samples[-1] = samples[0]
    return samples


def _check_path_options(n: int, closed: bool, invertible: bool, constant_kernel_dim: int,
                        endpoint_pattern) -> None:
    if not 0 <= constant_kernel_dim <= n:
        raise DomainError(f"constant_kernel_dim must lie in [0, {n}], got {constant_kernel_dim}")
    if invertible and constant_kernel_dim:
        raise DomainError("A path cannot be invertible and have a nonzero constant kernel")
    if endpoint_pattern is not None:
        if invertible or constant_kernel_dim:
            raise DomainError("endpoint_pattern cannot be combined with invertible or constant_kernel_dim")
        pattern_a, pattern_b = endpoint_pattern
        _check_pattern(pattern_a, n)
        _check_pattern(pattern_b, n)
        if closed and list(pattern_a) != list(pattern_b):
            raise DomainError("A closed path needs equal endpoint patterns")


def gen_form_path(seed: RandomSource, n: int, mesh_size: int, closed: bool = False, invertible: bool = False,
                  constant_kernel_dim: int = 0, endpoint_pattern=None,
                  a: float = 0.0, b: float = 1.0) -> FormPath:
    """
    A piecewise-linear path of symmetric n x n forms on [a, b].

    closed: first and last samples coincide.
    invertible: every form on the path is invertible (flow 0).
    constant_kernel_dim: r > 0 gives a kernel of dimension exactly r throughout,
        built as the conjugate of 0_r ⊕ (invertible path).
    endpoint_pattern: (pattern_a, pattern_b) signature patterns at the endpoints.
    """
    _check_path_options(n, closed, invertible, constant_kernel_dim, endpoint_pattern)
    rng = as_generator(seed)
    mesh = gen_mesh(rng, mesh_size, a, b)

    if invertible:
        samples = _invertible_samples(rng, n, mesh_size, closed)
    elif constant_kernel_dim:
        r = constant_kernel_dim
        inner = _invertible_samples(rng, n - r, mesh_size, closed)
        conjugator = well_conditioned(rng, n)
        blocks = [_block_upper(rng, n, r, GL_DELTA) for _ in range(mesh_size)]
        if closed:
            blocks[-1] = blocks[0]
        samples = []
        for p, blk in zip(inner, blocks):
            padded = scipy.linalg.block_diag(np.zeros((r, r)), p) if r < n else np.zeros((n, n))
            m = blk @ conjugator
            samples.append(m.T @ padded @ m)
    else:
        samples = [_random_symmetric(rng, n) for _ in range(mesh_size)]
        if endpoint_pattern is not None:
            samples[0] = gen_symmetric(rng, n, endpoint_pattern[0]).entries
            samples[-1] = gen_symmetric(rng, n, endpoint_pattern[1]).entries
        if closed:
            samples[-1] = samples[0]

    return FormPath(tuple(mesh), tuple(SymMatrix(s) for s in samples))


def standard_j(n: int) -> np.ndarray:
    return np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])


def gen_symplectic_matrix(seed: RandomSource, n: int, spread: float = 0.5) -> np.ndarray:
    """
    expm(J S) diag(A, A^{-T}) for a random symmetric S with ||S|| = spread and a
    well-conditioned A; symplectic for the standard form.
    """
    rng = as_generator(seed)
    s = _small_symmetric(rng, 2 * n, spread)
    a = well_conditioned(rng, n, condition=3.0)
    return scipy.linalg.expm(standard_j(n) @ s) @ scipy.linalg.block_diag(a, np.linalg.inv(a).T)


def random_lagrangian(seed: RandomSource, space: SymplecticSpace,
                      policy: TolerancePolicy = DEFAULT_POLICY) -> Lagrangian:
    """The image of span(e_1..e_n) under a random symplectic matrix of the standard space."""
    return symplectic_image(horizontal(space), gen_symplectic_matrix(seed, space.n), policy)


def gen_lagrangian_path(seed: RandomSource, space: SymplecticSpace, mesh_size: int = 8,
                        a: float = 0.0, b: float = 1.0, speed: float = 3.0,
                        policy: TolerancePolicy = DEFAULT_POLICY,
                        max_step: float = DEFAULT_MAX_STEP) -> LagrangianPath:
    """
    The orbit t -> expm((t - a) J S) L of a random Lagrangian L under a random
    Hamiltonian S with ||S|| = speed; refined until the continuity bound holds.
    """
    rng = as_generator(seed)
    start = random_lagrangian(rng, space, policy)
    generator = standard_j(space.n) @ _small_symmetric(rng, space.dim, speed)
    frame = start.frame

    def sampler(t: float) -> Subspace:
        return Subspace(np.linalg.qr(scipy.linalg.expm((t - a) * generator) @ frame)[0])

    return LagrangianPath.build(space, np.linspace(a, b, mesh_size), sampler, policy, max_step)


class LagrangianScenario(NamedTuple):
    space: SymplecticSpace
    setup: ReductionSetup
    l0: Lagrangian
    path: LagrangianPath
    chart_path: FormPath


def gen_lagrangian_scenario(seed: RandomSource, n: int, k: int, hit_L0: bool = False,
                            degenerate_endpoints: bool = False, mesh_size: int = 6,
                            policy: TolerancePolicy = DEFAULT_POLICY,
                            max_step: float = DEFAULT_MAX_STEP) -> LagrangianScenario:
    """
    A reduction instance in the standard space R^{2n}.

    In model coordinates L0 = span(e_1..e_n), L1 = span(e_{n+1}..e_{2n}) and
    W^omega is spanned by the last k vectors of L1. The path is the graph over
    L0 of a piecewise-linear chart form path, so it never meets L1 ⊇ W^omega.
    Everything is then moved by a random symplectic matrix. `hit_L0` makes
    an interior chart form singular, `degenerate_endpoints` both end forms.
    """
    if not 0 <= k < n:
        raise DomainError(f"Need 0 <= k < n, got k = {k}, n = {n}")
    if hit_L0 and mesh_size < 3:
        raise DomainError("hit_L0 needs an interior mesh point")
    rng = as_generator(seed)
    space = standard_space(n)
    model_l0, model_l1 = horizontal(space), vertical(space)
    excluded = set(range(n - k, n))
    model_w = Subspace.coordinate(space.dim, [i for i in range(space.dim) if i not in excluded])

    mesh = gen_mesh(rng, mesh_size)
    samples = [_random_symmetric(rng, n) for _ in range(mesh_size)]
    if degenerate_endpoints:
        for i in (0, -1):
            zeros = int(rng.integers(1, min(2, n) + 1))
            samples[i] = gen_symmetric(rng, n, random_pattern(rng, n, zeros)).entries
    if hit_L0:
        i = int(rng.integers(1, mesh_size - 1))
        samples[i] = gen_symmetric(rng, n, random_pattern(rng, n, 1)).entries
    chart_path = FormPath(tuple(mesh), tuple(SymMatrix(s) for s in samples))

    phi = gen_symplectic_matrix(rng, n)
    l0 = symplectic_image(model_l0, phi, policy)
    setup = make_reduction(space, model_w.image(phi, policy), policy)

    def sampler(t: float) -> Subspace:
        graph = unchart(model_l0, model_l1, chart_path.at(t).entries, policy)
        return graph.sub.image(phi, policy)

    path = LagrangianPath.build(space, mesh, sampler, policy, max_step)
    logger.debug(f"lagrangian scenario: n={n}, k={k}, samples={len(path)}")
    return LagrangianScenario(space, setup, l0, path, chart_path)


def worked_reduction_instance(policy: TolerancePolicy = DEFAULT_POLICY) -> LagrangianScenario:
    """
    R^4 with W^omega = span(e_4), W = span(e_1, e_3, e_4), L0 = span(e_1, e_2)
    and l(s) = span(e_1 - s e_3, e_2 - e_4) for s in [-1, 1]: mu = 1, reduced mu = 1.
    """
    space = standard_space(2)
    l0, l1 = horizontal(space), vertical(space)
    setup = make_reduction(space, Subspace.coordinate(4, [0, 2, 3]), policy)
    chart_path = FormPath((-1.0, 1.0), (SymMatrix(np.diag([-1.0, 1.0])), SymMatrix(np.diag([1.0, 1.0]))))

    def sampler(t: float) -> Subspace:
        return unchart(l0, l1, chart_path.at(t).entries, policy).sub

    path = LagrangianPath.build(space, (-1.0, 0.0, 1.0), sampler, policy)
    return LagrangianScenario(space, setup, l0, path, chart_path)

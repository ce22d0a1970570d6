import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..errors import CertificationError, DomainError, OracleInconclusiveError
from ..numkern import DEFAULT_POLICY, SymMatrix, TolerancePolicy, eigvalsh
from .paths import FormPath

logger = logging.getLogger(__name__)

MIN_ORACLE_SAMPLES = 100
ORACLE_SUBDIVISIONS = 20


@dataclass(frozen=True)
class SfCertificate:
    """
    Certified spectral flow: on each subinterval [t_{i-1}, t_i] no eigenvalue
    of the path meets the barrier eps_i, with `margins[i]` the certified gap.
    """
    partition: Tuple[float, ...]
    barriers: Tuple[float, ...]
    margins: Tuple[float, ...]
    flow: int
    contributions: Tuple[int, ...] = field(default=())

    @property
    def subintervals(self) -> int:
        return len(self.barriers)

    @property
    def min_margin(self) -> float:
        return min(self.margins) if self.margins else float('inf')

    def as_dict(self) -> Dict:
        return {
            'flow': self.flow,
            'subintervals': self.subintervals,
            'partition': list(self.partition),
            'barriers': list(self.barriers),
            'margins': list(self.margins),
        }


class _SpectrumCache:
    """Eigenvalues of the path at each visited time, computed once."""

    def __init__(self, path: FormPath) -> None:
        self.path = path
        self._values: Dict[float, np.ndarray] = {}

    def matrix(self, t: float) -> SymMatrix:
        return self.path.at(t)

    def values(self, t: float) -> np.ndarray:
        if t not in self._values:
            self._values[t] = eigvalsh(self.path.at(t))
        return self._values[t]


def _barrier(mid_values: np.ndarray, radius: float, cap: float, min_margin: float) -> Optional[Tuple[float, float]]:
    """
    Widest gap of the spectrum at the segment midpoint, shrunk by the Weyl
    radius and clipped to (0, cap]. Returns (eps, margin) or None.
    """
    edges = np.concatenate(([-np.inf], mid_values, [np.inf]))
    best: Optional[Tuple[float, float, float]] = None
    for lower, upper in zip(edges[:-1], edges[1:]):
        lo = max(lower + radius, 0.0)
        hi = min(upper - radius, cap)
        if hi <= lo:
            continue
        eps = 0.5 * (lo + hi)
        margin = min(eps - (lower + radius), (upper - radius) - eps)
        if best is None or hi - lo > best[0]:
            best = (hi - lo, eps, margin)
    if best is None or best[2] <= min_margin:
        return None
    return best[1], best[2]


def spectral_flow(p: FormPath, policy: TolerancePolicy = DEFAULT_POLICY) -> SfCertificate:
    """
    Net number of eigenvalues crossing zero upwards, certified per subinterval.

    On [t0, t1] the form stays within r = ||L_t1 - L_t0|| / 2 of the midpoint
    form, so by Weyl's inequality a barrier eps placed more than r away from
    every midpoint eigenvalue is never met. The subinterval then contributes
    #eig(L_t1) in [0, eps) - #eig(L_t0) in [0, eps). Eigenvalues within
    rank_tol * reference_norm of zero count as zero, i.e. nonnegative, so the
    total equals ind L_a - ind L_b.
    """
    if p.dim == 0:
        return SfCertificate((p.a, p.b), (), (), 0)

    thr = policy.threshold(p.reference_norm)
    cap = max(p.reference_norm, policy.rank_tol)
    cache = _SpectrumCache(p)

    partition: List[float] = [p.a]
    barriers: List[float] = []
    margins: List[float] = []
    contributions: List[int] = []

    def nonneg_below(t: float, eps: float) -> int:
        values = cache.values(t)
        return int(np.sum((values >= -thr) & (values < eps)))

    def certify(t0: float, t1: float, depth: int) -> None:
        radius = 0.5 * float(np.linalg.norm(cache.matrix(t1).entries - cache.matrix(t0).entries, 2))
        t_mid = 0.5 * (t0 + t1)
        found = _barrier(cache.values(t_mid), radius, cap, thr)
        if found is None:
            if depth >= policy.refine_limit or not t0 < t_mid < t1:
                raise CertificationError(
                    f"No certifiable spectral gap on [{t0}, {t1}] after {depth} refinements",
                    (t0, t1),
                    details={'radius': radius, 'midpoint_eigenvalues': cache.values(t_mid).tolist()},
                )
            logger.debug(f"sf: refining [{t0:.6g}, {t1:.6g}] at depth {depth}, radius {radius:.3e}")
            certify(t0, t_mid, depth + 1)
            certify(t_mid, t1, depth + 1)
            return
        eps, margin = found
        partition.append(t1)
        barriers.append(eps)
        margins.append(margin)
        contributions.append(nonneg_below(t1, eps) - nonneg_below(t0, eps))

    for t0, t1 in zip(p.mesh, p.mesh[1:]):
        certify(t0, t1, 0)

    flow = int(sum(contributions))
    logger.debug(f"sf: flow {flow} over {len(barriers)} certified subintervals")
    return SfCertificate(tuple(partition), tuple(barriers), tuple(margins), flow, tuple(contributions))


def _greedy_pairing(prev: np.ndarray, nxt: np.ndarray) -> np.ndarray:
    """For each previous eigenvalue (ascending), the index of its nearest unused successor."""
    free = list(range(len(nxt)))
    pairing = np.empty(len(prev), dtype=int)
    for i, value in enumerate(prev):
        j = min(free, key=lambda k: abs(nxt[k] - value))
        pairing[i] = j
        free.remove(j)
    return pairing


def spectral_flow_oracle(p: FormPath, samples_per_segment: int = MIN_ORACLE_SAMPLES,
                         policy: TolerancePolicy = DEFAULT_POLICY) -> int:
    """
    Heuristic cross-check of spectral_flow by dense sampling.

    Eigenvalue tracks are paired greedily by nearness between consecutive
    samples; a pairing is accepted when no track moves further than the Weyl
    bound ||L_s - L_t|| + theta, otherwise the step is subdivided. Each track
    going from below -theta to at least -theta adds one, the reverse subtracts one.
    """
    if samples_per_segment < MIN_ORACLE_SAMPLES:
        raise DomainError(f"The oracle needs at least {MIN_ORACLE_SAMPLES} samples per segment")
    if p.dim == 0:
        return 0

    theta = policy.threshold(p.reference_norm)
    cache = _SpectrumCache(p)

    def crossings(prev: np.ndarray, nxt: np.ndarray, pairing: np.ndarray) -> int:
        before = prev < -theta
        after = nxt[pairing] < -theta
        return int(np.sum(before & ~after)) - int(np.sum(~before & after))

    def step(t0: float, t1: float, depth: int) -> int:
        prev, nxt = cache.values(t0), cache.values(t1)
        pairing = _greedy_pairing(prev, nxt)
        bound = float(np.linalg.norm(cache.matrix(t1).entries - cache.matrix(t0).entries, 2)) + theta
        if float(np.max(np.abs(nxt[pairing] - prev))) <= bound:
            return crossings(prev, nxt, pairing)
        if depth >= ORACLE_SUBDIVISIONS:
            raise OracleInconclusiveError(
                f"Ambiguous eigenvalue pairing on [{t0}, {t1}]",
                details={'interval': [t0, t1], 'bound': bound},
            )
        t_mid = 0.5 * (t0 + t1)
        return step(t0, t_mid, depth + 1) + step(t_mid, t1, depth + 1)

    flow = 0
    for t0, t1 in zip(p.mesh, p.mesh[1:]):
        times = np.linspace(t0, t1, samples_per_segment + 1)
        times[-1] = t1
        for s0, s1 in zip(times[:-1], times[1:]):
            flow += step(float(s0), float(s1), 0)
    return flow


def eigenvalue_tracks(p: FormPath, samples_per_segment: int = 10) -> Tuple[np.ndarray, np.ndarray]:
    """Sample times and the ascending eigenvalues at each time (one row per time)."""
    times: List[float] = [p.a]
    for t0, t1 in zip(p.mesh, p.mesh[1:]):
        times.extend(np.linspace(t0, t1, samples_per_segment + 1)[1:-1].tolist())
        times.append(t1)
    values = np.array([eigvalsh(p.at(t)) for t in times]).reshape(len(times), p.dim)
    return np.array(times), values

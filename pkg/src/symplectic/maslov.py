import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..errors import ChartCoverError
from ..numkern import DEFAULT_POLICY, Subspace, SymMatrix, TolerancePolicy, max_angle
from ..specflow import FormPath, spectral_flow
from .charts import chart, transversality_margin
from .lagrangian import lagrangian_complement
from .paths import LagrangianPath
from .space import Lagrangian

logger = logging.getLogger(__name__)

# complements tried per segment before the mesh is refined
CANDIDATES_PER_SEGMENT = 8


@dataclass(frozen=True, eq=False)
class ChartSegment:
    """
    One chart of a cover: the samples first..last of a path are all transverse
    to l1 and `form_path` holds their chart forms on l0.
    """
    interval: Tuple[float, float]
    first: int
    last: int
    l0: Lagrangian
    l1: Lagrangian
    form_path: FormPath

    def __repr__(self) -> str:
        return f"ChartSegment([{self.interval[0]:.6g}, {self.interval[1]:.6g}], samples {self.first}..{self.last})"


@dataclass(frozen=True)
class MaslovResult:
    index: int
    segments: Tuple[ChartSegment, ...]
    flows: Tuple[int, ...]
    path: LagrangianPath


class ChartCover:
    """
    Greedy cover of a sampled Lagrangian path by graph charts over l0.

    A step between samples j and j+1 stays inside the chart of l1 when their
    transversality margins to l1 add up to more than the step size, since any
    Lagrangian on a shortest arc between them then keeps a positive margin.
    """

    def __init__(self, l0: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY,
                 must_contain: Optional[Subspace] = None,
                 rng: Optional[np.random.Generator] = None,
                 randomize_cuts: bool = False) -> None:
        self.l0 = l0
        self.policy = policy
        self.must_contain = must_contain
        self.rng = rng
        self.randomize_cuts = randomize_cuts
        self.logger = logging.getLogger(__name__)

    def _candidates(self) -> Iterator[Lagrangian]:
        if self.rng is None:
            yield lagrangian_complement(self.l0, self.must_contain, self.policy)
            spread_rng = np.random.default_rng(0)
        else:
            spread_rng = self.rng
        for k in range(CANDIDATES_PER_SEGMENT - (1 if self.rng is None else 0)):
            spread = 0.25 * (k + 1)
            yield lagrangian_complement(self.l0, self.must_contain, self.policy, rng=spread_rng, spread=spread)

    def _reach(self, path: LagrangianPath, start: int, l1: Lagrangian) -> int:
        """Last sample index reachable from `start` inside the chart of l1."""
        tol = self.policy.angle_tol
        margin = transversality_margin(path.samples[start].sub, l1.sub)
        if margin <= tol:
            return start
        j = start
        while j < len(path) - 1:
            nxt = transversality_margin(path.samples[j + 1].sub, l1.sub)
            step = max_angle(path.samples[j].sub, path.samples[j + 1].sub)
            if nxt <= tol or margin + nxt <= step + tol:
                break
            j += 1
            margin = nxt
        return j

    def _segment(self, path: LagrangianPath, first: int, last: int, l1: Lagrangian) -> ChartSegment:
        forms = [SymMatrix(chart(self.l0, l1, path.samples[j], self.policy).matrix)
                 for j in range(first, last + 1)]
        form_path = FormPath(path.mesh[first:last + 1], tuple(forms))
        return ChartSegment((path.mesh[first], path.mesh[last]), first, last, self.l0, l1, form_path)

    def cover(self, path: LagrangianPath) -> Tuple[LagrangianPath, List[ChartSegment]]:
        """
        Charts covering the whole path. The returned path is the input with any
        refinements the cover needed.
        """
        segments: List[ChartSegment] = []
        refinements = 0
        i = 0
        while i < len(path) - 1:
            best_reach, best_l1 = i, None
            for l1 in self._candidates():
                reach = self._reach(path, i, l1)
                if reach > best_reach:
                    best_reach, best_l1 = reach, l1
                if best_reach == len(path) - 1:
                    break
            if best_l1 is None:
                if path.sampler is None or refinements >= self.policy.refine_limit:
                    raise ChartCoverError(
                        f"No chart covers the step at t = {path.mesh[i]:.6g}",
                        details={'sample': i, 'refinements': refinements},
                    )
                refinements += 1
                self.logger.debug(f"chart cover: refining step {i} at t = {path.mesh[i]:.6g}")
                path = path.refine_step(i, self.policy)
                continue
            last = best_reach
            if self.randomize_cuts and self.rng is not None and best_reach > i + 1:
                last = int(self.rng.integers(i + 1, best_reach + 1))
            segments.append(self._segment(path, i, last, best_l1))
            i = last
        self.logger.debug(f"chart cover: {len(segments)} charts over {len(path)} samples")
        return path, segments


def chart_cover(path: LagrangianPath, l0: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY,
                must_contain: Optional[Subspace] = None) -> List[ChartSegment]:
    return ChartCover(l0, policy, must_contain).cover(path)[1]


def _sum_flows(path: LagrangianPath, segments: List[ChartSegment], policy: TolerancePolicy) -> MaslovResult:
    flows = tuple(spectral_flow(seg.form_path, policy).flow for seg in segments)
    return MaslovResult(int(sum(flows)), tuple(segments), flows, path)


def maslov_cover(path: LagrangianPath, l0: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY,
                 must_contain: Optional[Subspace] = None) -> MaslovResult:
    refined, segments = ChartCover(l0, policy, must_contain).cover(path)
    return _sum_flows(refined, segments, policy)


def maslov_index(path: LagrangianPath, l0: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY) -> int:
    """
    mu_{l0} of the path: the sum over a chart cover of the spectral flows of
    the chart form paths on l0.
    """
    return maslov_cover(path, l0, policy).index


def maslov_oracle(path: LagrangianPath, l0: Lagrangian, policy: TolerancePolicy = DEFAULT_POLICY,
                  rng: Optional[np.random.Generator] = None) -> int:
    """The same index over a randomized cover: random complements and random cuts."""
    rng = rng if rng is not None else np.random.default_rng(0x5EED)
    refined, segments = ChartCover(l0, policy, rng=rng, randomize_cuts=True).cover(path)
    return _sum_flows(refined, segments, policy).index

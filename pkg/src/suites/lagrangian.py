from typing import Any, Dict

import numpy as np

from ..numkern import intersect, spectral_norm
from ..quadform import index_nullity
from ..reduction import ReductionSetup, chart_identities, reduce_chart_form, theorem2_report
from ..scenarios import (
    Seed,
    gen_lagrangian_path,
    gen_lagrangian_scenario,
    maslov_instance,
    random_lagrangian,
    reduction_instance,
)
from ..symplectic import ChartCover, Lagrangian, LagrangianPath, maslov_index, maslov_oracle, standard_space
from .base import SuiteParameters, TrialOutcome, VerificationSuite, digest


def _lagrangian_digest(path: LagrangianPath, *extra) -> str:
    return digest(path.mesh, *(s.frame for s in path.samples), *extra)


class MaslovSuite(VerificationSuite):
    """
    Chart independence (deterministic against randomized covers), additivity
    under splitting and sign change under reversal.
    """
    default_dims = (1, 6)

    def get_name(self) -> str:
        return "maslov"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims)
        space = standard_space(n)
        l0 = random_lagrangian(rng, space, self.policy)
        mesh_size = int(rng.integers(3, int(params.option('max_mesh', 8)) + 1))
        path = gen_lagrangian_path(rng, space, mesh_size, speed=float(params.option('speed', 3.0)),
                                   policy=self.policy, max_step=params.max_step_angle)
        return self._check(path, l0, seed.child(1).generator())

    def run_instance(self, data: Dict[str, Any], params: SuiteParameters) -> TrialOutcome:
        instance = maslov_instance(data, policy=self.policy, max_step=params.max_step_angle)
        return self._check(instance.path, instance.l0, Seed(0).generator())

    def _check(self, path: LagrangianPath, l0: Lagrangian, rng: np.random.Generator) -> TrialOutcome:
        mu = maslov_index(path, l0, self.policy)
        outcome = TrialOutcome(digest=_lagrangian_digest(path, l0.frame), summary={'n': path.n, 'mu': mu})
        outcome.add('chart_independence', maslov_oracle(path, l0, self.policy, rng=rng), mu)

        if len(path) >= 3:
            left, right = path.split(len(path) // 2)
            outcome.add('additivity', maslov_index(left, l0, self.policy) + maslov_index(right, l0, self.policy), mu)

        transverse = all(intersect(s.sub, l0.sub, self.policy).dim == 0 for s in (path.samples[0], path.samples[-1]))
        if transverse:
            outcome.add('reversal', maslov_index(path.reversed(), l0, self.policy), -mu)
        return outcome


class Theorem2Suite(VerificationSuite):
    """mu - reduced mu against the endpoint correction terms."""
    default_dims = (2, 8)

    def get_name(self) -> str:
        return "thm2"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims, floor=2)
        k = int(rng.integers(0, min(3, n - 1) + 1))
        variant = seed.trial_index % 3
        scenario = gen_lagrangian_scenario(rng, n, k, hit_L0=variant == 1, degenerate_endpoints=variant == 2,
                                           mesh_size=int(rng.integers(3, 7)), policy=self.policy,
                                           max_step=params.max_step_angle)

        outcome = self._check(scenario.setup, scenario.path, scenario.l0)
        outcome.summary['k'] = k
        chart_path = scenario.chart_path
        ind_a = index_nullity(chart_path.endpoint_form('a'), self.policy).index
        ind_b = index_nullity(chart_path.endpoint_form('b'), self.policy).index
        outcome.add('single_chart', outcome.summary['mu'], ind_a - ind_b)
        return outcome

    def run_instance(self, data: Dict[str, Any], params: SuiteParameters) -> TrialOutcome:
        instance = reduction_instance(data, policy=self.policy, max_step=params.max_step_angle)
        return self._check(instance.setup, instance.path, instance.l0)

    def _check(self, setup: ReductionSetup, path: LagrangianPath, l0: Lagrangian) -> TrialOutcome:
        report = theorem2_report(setup, path, l0, self.policy)
        outcome = TrialOutcome(
            digest=_lagrangian_digest(path, l0.frame, setup.w),
            summary={'n': path.n, **report.as_dict()},
        )
        outcome.add('theorem2', report.lhs, report.rhs)
        return outcome


class IdentitiesSuite(VerificationSuite):
    """
    The kernel, perp and reduced-form identities on every sample of a chart
    cover whose complements contain W^omega, plus chart compatibility of the
    reduction.
    """
    default_dims = (2, 6)

    def get_name(self) -> str:
        return "identities"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims, floor=2)
        k = int(rng.integers(1, min(3, n - 1) + 1))
        scenario = gen_lagrangian_scenario(rng, n, k, hit_L0=seed.trial_index % 2 == 1,
                                           mesh_size=int(rng.integers(3, 7)), policy=self.policy,
                                           max_step=params.max_step_angle)
        setup, l0 = scenario.setup, scenario.l0

        refined, segments = ChartCover(l0, self.policy, must_contain=setup.w_perp).cover(scenario.path)
        reports = [chart_identities(setup, refined, l0, segment, self.policy) for segment in segments]

        compatible = True
        for segment in segments:
            residual = reduce_chart_form(setup, l0, segment.l1, refined.samples[segment.first], self.policy)
            scale = max(1.0, spectral_norm(segment.form_path.samples[0].entries))
            compatible = compatible and residual <= self.policy.angle_tol * scale

        outcome = TrialOutcome(
            digest=_lagrangian_digest(scenario.path, l0.frame, setup.w),
            summary={'n': n, 'k': k, 'charts': len(segments), 'samples': sum(r.samples for r in reports)},
        )
        outcome.holds('kernel', all(r.kernel for r in reports))
        outcome.holds('perp', all(r.perp for r in reports))
        outcome.holds('form', all(r.form for r in reports))
        outcome.holds('chart_compatibility', compatible)
        return outcome

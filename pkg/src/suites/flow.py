from typing import Any, Dict

from ..numkern import Subspace
from ..quadform import index_nullity, is_nondegenerate_on
from ..scenarios import (
    Seed,
    engineered_pattern,
    form_instance,
    gen_form_path,
    gen_gl_path,
    gen_test_subspace,
    random_pattern,
)
from ..specflow import (
    FormPath,
    add_paths,
    concatenate,
    conjugate,
    direct_sum,
    restrict_path,
    spectral_flow,
    spectral_flow_oracle,
    theorem1_nondegenerate_sides,
    theorem1_sides,
)
from .base import SuiteParameters, TrialOutcome, VerificationSuite, digest


def _path_digest(p: FormPath, *extra) -> str:
    return digest(p.mesh, *p.samples, *extra)


class SpectralFlowSuite(VerificationSuite):
    """Certified flow against the sampling oracle and against ind Q_a - ind Q_b."""
    default_dims = (1, 8)

    def get_name(self) -> str:
        return "sf"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims)
        mesh_size = int(rng.integers(2, int(params.option('max_mesh', 20)) + 1))
        endpoint_pattern = None
        if self.engineered(seed):
            endpoint_pattern = tuple(random_pattern(rng, n, int(rng.integers(0, n + 1))) for _ in range(2))
        p = gen_form_path(rng, n, mesh_size, endpoint_pattern=endpoint_pattern)
        return self._check(p, params)

    def run_instance(self, data: Dict[str, Any], params: SuiteParameters) -> TrialOutcome:
        return self._check(form_instance(data, 'sf', policy=self.policy)['path'], params)

    def _check(self, p: FormPath, params: SuiteParameters) -> TrialOutcome:
        cert = spectral_flow(p, self.policy)
        oracle = spectral_flow_oracle(p, params.oracle_samples, self.policy)
        ind_a = index_nullity(p.endpoint_form('a'), self.policy).index
        ind_b = index_nullity(p.endpoint_form('b'), self.policy).index

        outcome = TrialOutcome(digest=_path_digest(p), summary={
            'n': p.dim,
            'segments': p.segments,
            'flow': cert.flow,
            'subintervals': cert.subintervals,
        })
        outcome.add('endpoint_indices', cert.flow, ind_a - ind_b)
        outcome.add('oracle', oracle, cert.flow)
        return outcome


class FlowPropertiesSuite(VerificationSuite):
    """
    Normalization, concatenation, direct sum, cogredience and closed
    perturbation, plus the constant-kernel lemma.
    """
    default_dims = (1, 6)

    def get_name(self) -> str:
        return "sfprops"

    def _sf(self, p: FormPath) -> int:
        return spectral_flow(p, self.policy).flow

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims)
        max_mesh = int(params.option('max_mesh', 8))

        def mesh_size() -> int:
            return int(rng.integers(2, max_mesh + 1))

        outcome = TrialOutcome(summary={'n': n})

        invertible = gen_form_path(rng, n, mesh_size(), invertible=True)
        outcome.add('invertible', self._sf(invertible), 0)

        p = gen_form_path(rng, n, mesh_size())
        q = gen_form_path(rng, n, mesh_size())
        q = FormPath(q.mesh, (p.end,) + q.samples[1:])
        sf_p, sf_q = self._sf(p), self._sf(q)
        outcome.add('concatenation', self._sf(concatenate(p, q, self.policy)), sf_p + sf_q)
        if p.segments >= 2:
            left, right = p.split(int(rng.integers(1, p.segments)))
            outcome.add('split', self._sf(left) + self._sf(right), sf_p)
        outcome.add('reversal', self._sf(p.reversed()), -sf_p)
        outcome.add('direct_sum', self._sf(direct_sum(p, q)), sf_p + sf_q)
        outcome.add('cogredience', self._sf(conjugate(p, gen_gl_path(rng, n, len(p.mesh)), self.policy)), sf_p)

        closed = gen_form_path(rng, n, mesh_size(), closed=True)
        perturbation = gen_form_path(rng, n, mesh_size(), closed=True)
        outcome.add('closed_perturbation', self._sf(add_paths(closed, perturbation)), self._sf(closed))

        r = int(rng.integers(1, n + 1))
        constant = gen_form_path(rng, n, mesh_size(), constant_kernel_dim=r)
        outcome.add('constant_kernel', self._sf(constant), 0)

        outcome.digest = _path_digest(p, *q.samples, *closed.samples, *constant.samples)
        return outcome


class Theorem1Suite(VerificationSuite):
    """
    sf(Q) - sf(Q|_V) against the endpoint terms, with degenerate endpoints
    both on the whole space and on V.
    """
    default_dims = (2, 10)

    def get_name(self) -> str:
        return "thm1"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims, floor=2)
        codim = int(rng.integers(1, min(3, n - 1) + 1))
        dim_v = n - codim
        mesh_size = int(rng.integers(2, int(params.option('max_mesh', 8)) + 1))

        variant = 'generic'
        meet_kernel = meet_perp = False
        endpoint_pattern = None
        if self.engineered(seed):
            variant = ('endpoints', 'subspace', 'both')[seed.trial_index % 3]
            if variant == 'endpoints':
                endpoint_pattern = tuple(random_pattern(rng, n, int(rng.integers(1, n + 1))) for _ in range(2))
            elif variant == 'subspace':
                meet_perp = True
                endpoint_pattern = (engineered_pattern(rng, n, 0, indefinite=True), random_pattern(rng, n))
            else:
                meet_kernel = True
                endpoint_pattern = (random_pattern(rng, n, 1), random_pattern(rng, n, int(rng.integers(0, n + 1))))
        p = gen_form_path(rng, n, mesh_size, endpoint_pattern=endpoint_pattern)
        v = gen_test_subspace(rng, p.start, dim_v, meet_kernel, meet_perp, self.policy)
        return self._check(p, v, variant)

    def run_instance(self, data: Dict[str, Any], params: SuiteParameters) -> TrialOutcome:
        parsed = form_instance(data, 'thm1', policy=self.policy)
        return self._check(parsed['path'], parsed['v'], 'explicit')

    def _check(self, p: FormPath, v: Subspace, variant: str) -> TrialOutcome:
        lhs, rhs = theorem1_sides(p, v, self.policy)
        outcome = TrialOutcome(digest=_path_digest(p, v), summary={'n': p.dim, 'dim_v': v.dim, 'variant': variant})
        outcome.add('eq2', lhs, rhs)
        if all(is_nondegenerate_on(p.endpoint_form(which), v, self.policy) for which in ('a', 'b')):
            outcome.add('eq2_nondegenerate', *theorem1_nondegenerate_sides(p, v, self.policy))
        return outcome


class ClosedPathSuite(VerificationSuite):
    """For closed paths the flow and the flow of any restriction agree."""
    default_dims = (2, 8)

    def get_name(self) -> str:
        return "closed"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims, floor=2)
        p = gen_form_path(rng, n, int(rng.integers(3, int(params.option('max_mesh', 10)) + 1)), closed=True)
        dim_v = n - int(rng.integers(1, min(3, n - 1) + 1))
        v = gen_test_subspace(rng, p.start, dim_v, policy=self.policy)

        flow = spectral_flow(p, self.policy).flow
        restricted = spectral_flow(restrict_path(p, v, self.policy), self.policy).flow
        outcome = TrialOutcome(digest=_path_digest(p, v), summary={'n': n, 'dim_v': dim_v})
        outcome.add('closed_restriction', flow, restricted)
        outcome.add('closed_flow', flow, 0)
        return outcome

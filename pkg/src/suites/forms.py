from typing import Any, Dict

import numpy as np

from ..numkern import Subspace, subspace_sum, subspaces_equal
from ..quadform import (
    BilinForm,
    Symmetry,
    algebraic_lemma_sides,
    eq1_sides,
    is_nondegenerate_on,
    perp,
    radical,
)
from ..scenarios import (
    Seed,
    engineered_pattern,
    find_nondegenerate_subspace,
    form_instance,
    gen_symmetric,
    gen_test_subspace,
    random_pattern,
)
from .base import SuiteParameters, TrialOutcome, VerificationSuite, digest

ENGINEERED_MODES = ('kernel', 'perp', 'both')


class Eq1Suite(VerificationSuite):
    """
    ind Q - ind Q|_W against the complement terms, on random forms with
    engineered kernels and isotropic vectors in W ∩ W^Q.
    """
    default_dims = (2, 12)

    def get_name(self) -> str:
        return "eq1"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims, floor=2)
        mode = 'generic'
        if self.engineered(seed):
            mode = ENGINEERED_MODES[seed.trial_index % len(ENGINEERED_MODES)]
            if mode == 'both' and n < 3:
                mode = 'kernel'

        meet_kernel = mode in ('kernel', 'both')
        meet_perp = mode in ('perp', 'both')
        if mode == 'generic':
            pattern = None
        else:
            zeros = int(rng.integers(1, max(1, n // 3) + 1)) if meet_kernel else 0
            pattern = engineered_pattern(rng, n, min(zeros, n - 2) if meet_perp else zeros, indefinite=meet_perp)
        q = gen_symmetric(rng, n, pattern)

        forced = int(meet_kernel) + int(meet_perp)
        ceiling = n - 1 if meet_perp else n
        dim_w = int(rng.integers(forced, ceiling + 1))
        w = gen_test_subspace(rng, q, dim_w, meet_kernel, meet_perp, self.policy)

        lhs, rhs = eq1_sides(BilinForm.symmetric(q.entries), w, self.policy)
        outcome = TrialOutcome(digest=digest(q, w), summary={'n': n, 'dim_w': dim_w, 'mode': mode})
        outcome.add('eq1', lhs, rhs)
        return outcome

    def run_instance(self, data: Dict[str, Any], params: SuiteParameters) -> TrialOutcome:
        parsed = form_instance(data, 'eq1', policy=self.policy)
        q, w = parsed['matrix'], parsed['w']
        outcome = TrialOutcome(digest=digest(q, w), summary={'n': q.dim, 'dim_w': w.dim, 'mode': 'explicit'})
        outcome.add('eq1', *eq1_sides(BilinForm.symmetric(q.entries), w, self.policy))
        return outcome


class PerpSuite(VerificationSuite):
    """The perp-perp law for symmetric and skew forms, and the algebraic lemma for chains W ⊂ V."""
    default_dims = (1, 10)

    def get_name(self) -> str:
        return "perp"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims)
        if seed.trial_index % 3 == 2:
            g = rng.standard_normal((n, n))
            q = BilinForm(g - g.T, Symmetry.SKEW, Subspace.full(n))
            zeros = 0
        else:
            zeros = int(rng.integers(0, n // 2 + 1))
            q = BilinForm.symmetric(gen_symmetric(rng, n, random_pattern(rng, n, zeros)).entries)

        dim_u = int(rng.integers(0, n + 1))
        u = Subspace(np.linalg.qr(rng.standard_normal((n, n)))[0][:, :dim_u])
        double = perp(q, perp(q, u, self.policy), self.policy)
        outcome = TrialOutcome(summary={'n': n, 'dim_u': dim_u, 'symmetry': q.symmetry.value})
        outcome.holds('perp_perp', subspaces_equal(double, subspace_sum(u, radical(q, self.policy), self.policy),
                                                   self.policy))

        if q.is_symmetric:
            v = Subspace(np.linalg.qr(rng.standard_normal((n, n)))[0][:, :int(rng.integers(1, n + 1))])
            floor = max(0, v.dim - (n - zeros))
            codim = int(rng.integers(floor, v.dim + 1))
            w = find_nondegenerate_subspace(q, q, v, codim, seed.child(1), self.policy, params.search_budget)
            sides = algebraic_lemma_sides(q, w, v, self.policy)
            outcome.holds('algebraic_lemma', subspaces_equal(sides.lhs, sides.rhs, self.policy))
            outcome.holds('direct_sum', sides.direct)
            outcome.summary.update({'dim_v': v.dim, 'dim_w': w.dim})
            outcome.digest = digest(q.matrix, u, v)
        else:
            outcome.digest = digest(q.matrix, u)
        return outcome


class LemmaWSuite(VerificationSuite):
    """
    Density of subspaces nondegenerate for two forms at once: the search must
    succeed inside a random V for every trial.
    """
    default_dims = (2, 10)

    def get_name(self) -> str:
        return "lemmaw"

    def run_trial(self, seed: Seed, params: SuiteParameters) -> TrialOutcome:
        rng = seed.generator()
        n = self.draw_dim(rng, params.dims, floor=2)
        v_dim = n - int(rng.integers(0, min(2, n - 1) + 1))
        codim = int(rng.integers(1, min(3, v_dim) + 1))
        target = v_dim - codim
        forms = []
        for _ in range(2):
            zeros = int(rng.integers(0, min(2, n - target) + 1))
            forms.append(BilinForm.symmetric(gen_symmetric(rng, n, random_pattern(rng, n, zeros)).entries))
        inside = Subspace(np.linalg.qr(rng.standard_normal((n, n)))[0][:, :v_dim])

        w = find_nondegenerate_subspace(forms[0], forms[1], inside, codim, seed.child(1),
                                        self.policy, params.search_budget)
        outcome = TrialOutcome(digest=digest(forms[0].matrix, forms[1].matrix, inside),
                               summary={'n': n, 'dim_v': v_dim, 'codim': codim})
        outcome.add('dimension', w.dim, target)
        outcome.holds('contained', inside.contains(w, self.policy))
        outcome.holds('nondegenerate', all(is_nondegenerate_on(q, w, self.policy) for q in forms))
        return outcome

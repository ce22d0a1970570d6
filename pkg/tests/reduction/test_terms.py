import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError, NumericError
from src.numkern import Subspace
from src.reduction import (
    CorrectionTerms,
    Projection,
    correction_terms,
    identity_reduction,
    make_reduction,
    reduced_form,
    terms_at,
)
from src.scenarios import Seed, gen_lagrangian_path, random_lagrangian, worked_reduction_instance
from src.symplectic import Lagrangian, horizontal, standard_space
from tests.test_utils import NumericTestCase


class TestCorrectionTerms(NumericTestCase):

    def test_worked_instance_ends(self):
        scenario = worked_reduction_instance()
        expected = {'ind_q': 0, 'dim_pi_V': 0, 'dim_lV': 0, 'e_dim': 1}
        for t_end in ('a', 'b'):
            terms = correction_terms(scenario.setup, scenario.path, scenario.l0, t_end)
            self.assertEqual(terms.as_dict(), expected, t_end)
            self.assertEqual(terms.value, 0)

    def test_worked_reduced_form(self):
        scenario = worked_reduction_instance()
        proj = Projection(scenario.setup, scenario.l0)
        for sample in (scenario.path.samples[0], scenario.path.samples[-1]):
            rf = reduced_form(scenario.setup, sample, proj)
            self.assertSubspaceEqual(rf.e, Subspace.coordinate(4, [1]))
            np.testing.assert_allclose(rf.form.matrix, [[1.0]], atol=1e-12)

    def test_terms_at_valid_lagrangian(self):
        scenario = worked_reduction_instance()
        terms = terms_at(scenario.setup, scenario.path.samples[0], scenario.l0)
        self.assertEqual((terms.ind_q, terms.dim_pi_V, terms.dim_lV, terms.e_dim), (0, 0, 0, 1))

        # l0 itself: E = L0, q vanishes, V = span(e1) lies in l0
        terms = terms_at(scenario.setup, scenario.l0, scenario.l0)
        self.assertEqual(terms.as_dict(), {'ind_q': 0, 'dim_pi_V': 1, 'dim_lV': 1, 'e_dim': 2})
        self.assertEqual(terms.value, 0)

    def test_unknown_end(self):
        scenario = worked_reduction_instance()
        with self.assertRaises(DomainError):
            correction_terms(scenario.setup, scenario.path, scenario.l0, 'c')

    def test_no_reduction_terms_vanish(self):
        rng = Seed(610).generator()
        space = standard_space(2)
        setup = identity_reduction(space)
        for trial in range(5):
            l0 = random_lagrangian(rng, space)
            path = gen_lagrangian_path(rng, space)
            for t_end in ('a', 'b'):
                terms = correction_terms(setup, path, l0, t_end)
                self.assertEqual(terms.as_dict(), {'ind_q': 0, 'dim_pi_V': 0, 'dim_lV': 0, 'e_dim': 0},
                                 f"trial {trial}, end {t_end}")

    def test_no_reduction_meeting_l0(self):
        space = standard_space(2)
        l0 = horizontal(space)
        l = Lagrangian.checked(space, Subspace.coordinate(4, [0, 3]))
        terms = terms_at(identity_reduction(space), l, l0)
        self.assertEqual(terms.as_dict(), {'ind_q': 0, 'dim_pi_V': 1, 'dim_lV': 1, 'e_dim': 1})
        self.assertEqual(terms.value, 0)

    def test_projection_rejects_l0_meeting_w_perp(self):
        space = standard_space(2)
        setup = make_reduction(space, Subspace.coordinate(4, [0, 2, 3]))
        with self.assertRaises(DomainError):
            Projection(setup, Lagrangian.checked(space, Subspace.coordinate(4, [0, 3])))

    def test_inconsistent_terms(self):
        with self.assertRaises(NumericError):
            CorrectionTerms(ind_q=2, dim_pi_V=0, dim_lV=0, e_dim=1)

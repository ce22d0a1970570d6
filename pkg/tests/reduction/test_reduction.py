import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError
from src.numkern import Subspace
from src.reduction import (
    chart_identities,
    identity_reduction,
    in_admissible_set,
    make_reduction,
    q_map_kernel_matches,
    reduce_chart_form,
    reduce_lagrangian,
    terms_at,
    theorem2_report,
    theorem2_sides,
)
from src.scenarios import Seed, gen_lagrangian_path, gen_lagrangian_scenario, random_lagrangian, worked_reduction_instance
from src.symplectic import Lagrangian, horizontal, maslov_cover, standard_space, vertical
from tests.test_utils import NumericTestCase


class TestMakeReduction(NumericTestCase):

    def test_worked_setup(self):
        setup = make_reduction(standard_space(2), Subspace.coordinate(4, [0, 2, 3]))
        self.assertEqual(setup.k, 1)
        self.assertSubspaceEqual(setup.w_perp, Subspace.coordinate(4, [3]))
        self.assertEqual(setup.reduced.dim, 2)
        self.assertLess(setup.quotient_residual(), 1e-12)
        self.assertTrue(q_map_kernel_matches(setup))

    def test_random_coisotropic(self):
        rng = Seed(600).generator()
        for trial in range(10):
            n = int(rng.integers(2, 5))
            scenario = gen_lagrangian_scenario(rng, n, int(rng.integers(0, n)))
            setup = scenario.setup
            self.assertEqual(setup.w.dim, 2 * n - setup.k, f"trial {trial}")
            self.assertEqual(setup.reduced.dim, 2 * (n - setup.k))
            self.assertLess(setup.quotient_residual(), 1e-8)
            self.assertTrue(q_map_kernel_matches(setup))

    def test_rejects_non_coisotropic(self):
        space = standard_space(2)
        with self.assertRaises(DomainError):
            make_reduction(space, Subspace.coordinate(4, [0]))
        with self.assertRaises(DomainError):
            make_reduction(space, Subspace.coordinate(4, [0, 1]))
        with self.assertRaises(DomainError):
            make_reduction(space, Subspace.coordinate(3, [0, 1]))

    def test_reduce_lagrangian_domain(self):
        space = standard_space(2)
        setup = make_reduction(space, Subspace.coordinate(4, [0, 2, 3]))
        meets = Lagrangian.checked(space, Subspace.coordinate(4, [0, 3]))
        self.assertFalse(in_admissible_set(setup, meets))
        with self.assertRaises(DomainError):
            reduce_lagrangian(setup, meets)
        reduced = reduce_lagrangian(setup, horizontal(space))
        self.assertEqual(reduced.sub.dim, 1)


class TestTheorem2(NumericTestCase):

    def test_worked_instance(self):
        scenario = worked_reduction_instance()
        report = theorem2_report(scenario.setup, scenario.path, scenario.l0)
        self.assertEqual((report.mu, report.mu_reduced), (1, 1))
        self.assertEqual(report.lhs, 0)
        self.assertEqual(report.rhs, 0)
        self.assertEqual(report.as_dict()['mu'], 1)

    def test_identity_reduction(self):
        rng = Seed(601).generator()
        space = standard_space(2)
        l0 = random_lagrangian(rng, space)
        path = gen_lagrangian_path(rng, space)
        report = theorem2_report(identity_reduction(space), path, l0)
        self.assertEqual(report.mu, report.mu_reduced)
        self.assertEqual(report.rhs, 0)

    def test_random_scenarios(self):
        rng = Seed(602).generator()
        for trial in range(12):
            n = int(rng.integers(1, 4))
            scenario = gen_lagrangian_scenario(rng, n, int(rng.integers(0, n)),
                                               hit_L0=trial % 2 == 0, degenerate_endpoints=trial % 3 == 0)
            lhs, rhs = theorem2_sides(scenario.setup, scenario.path, scenario.l0)
            self.assertEqual(lhs, rhs, f"trial {trial}")

    def test_terms_reject_meeting_endpoint(self):
        space = standard_space(2)
        setup = make_reduction(space, Subspace.coordinate(4, [0, 2, 3]))
        with self.assertRaises(DomainError):
            terms_at(setup, Lagrangian.checked(space, Subspace.coordinate(4, [0, 3])), horizontal(space))


class TestChartIdentities(NumericTestCase):

    def test_worked_instance(self):
        scenario = worked_reduction_instance()
        result = maslov_cover(scenario.path, scenario.l0, must_contain=scenario.setup.w_perp)
        for segment in result.segments:
            report = chart_identities(scenario.setup, result.path, scenario.l0, segment)
            self.assertTrue(report.holds, report.failures)
            self.assertEqual(report.samples, segment.last - segment.first + 1)

    def test_random_scenarios(self):
        rng = Seed(603).generator()
        for trial in range(6):
            n = int(rng.integers(2, 4))
            scenario = gen_lagrangian_scenario(rng, n, int(rng.integers(1, n)))
            result = maslov_cover(scenario.path, scenario.l0, must_contain=scenario.setup.w_perp)
            for segment in result.segments:
                report = chart_identities(scenario.setup, result.path, scenario.l0, segment)
                self.assertTrue(report.holds, f"trial {trial}: {report.failures}")

    def test_reduced_chart_form(self):
        scenario = worked_reduction_instance()
        space = scenario.space
        for sample in scenario.path.samples:
            residual = reduce_chart_form(scenario.setup, horizontal(space), vertical(space), sample)
            self.assertLess(residual, 1e-10)
        np.testing.assert_allclose(scenario.chart_path.start.entries, np.diag([-1.0, 1.0]))

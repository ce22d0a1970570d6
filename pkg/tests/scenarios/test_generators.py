import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError
from src.numkern import intersect, kernel
from src.quadform import BilinForm, index_nullity, perp
from src.scenarios import (
    Seed,
    engineered_pattern,
    gen_form_path,
    gen_lagrangian_scenario,
    gen_mesh,
    gen_symmetric,
    gen_symplectic_matrix,
    gen_test_subspace,
    random_pattern,
)
from src.specflow import spectral_flow
from src.symplectic import is_lagrangian, standard_space
from tests.test_utils import NumericTestCase


class TestSymmetricGenerators(NumericTestCase):

    def test_signature_pattern(self):
        rng = Seed(700).generator()
        for trial in range(20):
            n = int(rng.integers(1, 9))
            pattern = random_pattern(rng, n, int(rng.integers(0, n + 1)))
            report = index_nullity(BilinForm.symmetric(gen_symmetric(rng, n, pattern).entries))
            self.assertEqual(report.index, pattern.count('-'), f"trial {trial}")
            self.assertEqual(report.nullity, pattern.count('0'), f"trial {trial}")

    def test_invalid_patterns(self):
        with self.assertRaises(DomainError):
            gen_symmetric(Seed(0), 2, ['+'])
        with self.assertRaises(DomainError):
            gen_symmetric(Seed(0), 2, ['+', 'x'])
        with self.assertRaises(DomainError):
            random_pattern(Seed(0), 2, 3)
        with self.assertRaises(DomainError):
            engineered_pattern(Seed(0), 3, 2, indefinite=True)

    def test_engineered_pattern_is_indefinite(self):
        pattern = engineered_pattern(Seed(701), 5, 2, indefinite=True)
        self.assertIn('+', pattern)
        self.assertIn('-', pattern)
        self.assertEqual(pattern.count('0'), 2)

    def test_test_subspace_meets_kernel_and_perp(self):
        rng = Seed(702).generator()
        q = gen_symmetric(rng, 6, ['0', '+', '-', '+', '-', '+'])
        form = BilinForm.symmetric(q.entries)
        w = gen_test_subspace(rng, q, 3, meet_kernel=True, meet_perp=True)
        self.assertEqual(w.dim, 3)
        self.assertGreaterEqual(intersect(w, kernel(q.entries)).dim, 1)
        self.assertGreaterEqual(intersect(w, perp(form, w)).dim, 2)

    def test_test_subspace_preconditions(self):
        with self.assertRaises(DomainError):
            gen_test_subspace(Seed(0), gen_symmetric(Seed(0), 3, ['+', '+', '-']), 2, meet_kernel=True)
        with self.assertRaises(DomainError):
            gen_test_subspace(Seed(0), gen_symmetric(Seed(0), 3, ['+', '+', '0']), 2, meet_perp=True)
        with self.assertRaises(DomainError):
            gen_test_subspace(Seed(0), gen_symmetric(Seed(0), 3), 4)


class TestPathGenerators(NumericTestCase):

    def test_mesh(self):
        mesh = gen_mesh(Seed(703), 6, -1.0, 2.0)
        self.assertEqual(len(mesh), 6)
        self.assertEqual((mesh[0], mesh[-1]), (-1.0, 2.0))
        self.assertTrue(np.all(np.diff(mesh) > 0))
        with self.assertRaises(DomainError):
            gen_mesh(Seed(0), 1)

    def test_same_seed_same_path(self):
        p1 = gen_form_path(Seed(704), 4, 5)
        p2 = gen_form_path(Seed(704), 4, 5)
        for s1, s2 in zip(p1.samples, p2.samples):
            np.testing.assert_array_equal(s1.entries, s2.entries)

    def test_invertible_path_has_no_flow(self):
        rng = Seed(705).generator()
        for trial in range(10):
            p = gen_form_path(rng, int(rng.integers(1, 7)), 5, invertible=True)
            self.assertEqual(spectral_flow(p).flow, 0, f"trial {trial}")
            for t in np.linspace(p.a, p.b, 11):
                self.assertEqual(index_nullity(BilinForm.symmetric(p.at(float(t)).entries)).nullity, 0)

    def test_closed_path(self):
        p = gen_form_path(Seed(706), 3, 4, closed=True)
        np.testing.assert_array_equal(p.start.entries, p.end.entries)
        self.assertEqual(spectral_flow(p).flow, 0)

    def test_constant_kernel(self):
        rng = Seed(707).generator()
        p = gen_form_path(rng, 5, 4, constant_kernel_dim=2)
        for t in np.linspace(p.a, p.b, 7):
            report = index_nullity(BilinForm.symmetric(p.at(float(t)).entries))
            self.assertEqual(report.nullity, 2)

    def test_endpoint_pattern(self):
        p = gen_form_path(Seed(708), 3, 4, endpoint_pattern=(['-', '-', '+'], ['0', '+', '+']))
        self.assertEqual(index_nullity(p.endpoint_form('a')).index, 2)
        self.assertEqual(index_nullity(p.endpoint_form('b')).nullity, 1)
        self.assertEqual(spectral_flow(p).flow, 2)

    def test_option_conflicts(self):
        with self.assertRaises(DomainError):
            gen_form_path(Seed(0), 3, 4, invertible=True, constant_kernel_dim=1)
        with self.assertRaises(DomainError):
            gen_form_path(Seed(0), 3, 4, constant_kernel_dim=4)
        with self.assertRaises(DomainError):
            gen_form_path(Seed(0), 2, 4, closed=True, endpoint_pattern=(['+', '+'], ['-', '+']))


class TestSymplecticGenerators(NumericTestCase):

    def test_symplectic_matrix(self):
        rng = Seed(709).generator()
        for n in (1, 2, 4):
            self.assertTrue(standard_space(n).is_symplectic_matrix(gen_symplectic_matrix(rng, n)))

    def test_lagrangian_scenario(self):
        rng = Seed(710).generator()
        for trial in range(6):
            n = int(rng.integers(1, 4))
            k = int(rng.integers(0, n))
            scenario = gen_lagrangian_scenario(rng, n, k, hit_L0=True)
            self.assertEqual(scenario.setup.k, k)
            self.assertTrue(is_lagrangian(scenario.space, scenario.l0.sub))
            for sample in scenario.path.samples:
                self.assertEqual(intersect(sample.sub, scenario.setup.w_perp).dim, 0, f"trial {trial}")

    def test_lagrangian_scenario_range(self):
        with self.assertRaises(DomainError):
            gen_lagrangian_scenario(Seed(0), 2, 2)
        with self.assertRaises(DomainError):
            gen_lagrangian_scenario(Seed(0), 2, 1, hit_L0=True, mesh_size=2)

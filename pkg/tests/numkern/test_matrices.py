import unittest  # noqa: F401

import numpy as np

from src.errors import InputError
from src.numkern import SymMatrix, eigh, eigvalsh, spectral_norm
from src.numkern.matrices import RECONSTRUCTION_CONSTANT, _off_norm
from src.scenarios import Seed
from tests.test_utils import NumericTestCase


class TestSymMatrix(NumericTestCase):

    def test_entries_are_symmetrized_and_frozen(self):
        m = SymMatrix([[1.0, 2.0], [0.0, 3.0]])
        self.assertSymmetric(m.entries)
        np.testing.assert_allclose(m.entries, [[1.0, 1.0], [1.0, 3.0]])
        with self.assertRaises(ValueError):
            m.entries[0, 0] = 5.0

    def test_rejects_non_finite_and_non_square(self):
        with self.assertRaises(InputError):
            SymMatrix([[np.nan, 0.0], [0.0, 1.0]])
        with self.assertRaises(InputError):
            SymMatrix(np.zeros((2, 3)))

    def test_empty_matrix(self):
        m = SymMatrix(np.zeros((0, 0)))
        self.assertEqual(m.dim, 0)
        self.assertEqual(m.norm, 0.0)
        self.assertEqual(eigvalsh(m).shape, (0,))


class TestJacobiEigh(NumericTestCase):

    def test_diagonal_spectrum_is_sorted(self):
        values = eigvalsh(SymMatrix(np.diag([3.0, -1.0, 0.0])))
        np.testing.assert_allclose(values, [-1.0, 0.0, 3.0], atol=1e-15)

    def test_two_by_two(self):
        values, vectors = eigh(SymMatrix([[2.0, 1.0], [1.0, 2.0]]))
        np.testing.assert_allclose(values, [1.0, 3.0], atol=1e-14)
        self.assertOrthonormal(vectors)

    def test_reconstruction_and_orthonormality_on_random_matrices(self):
        rng = Seed(2024).generator()
        for trial in range(100):
            n = int(rng.integers(1, 25))
            g = rng.standard_normal((n, n))
            m = SymMatrix(g + g.T)
            values, vectors = eigh(m)
            bound = 1e-13 * n * max(m.norm, 1.0)
            self.assertLessEqual(spectral_norm(m.entries - vectors @ np.diag(values) @ vectors.T), bound)
            self.assertOrthonormal(vectors, atol=1e-13 * n)
            np.testing.assert_allclose(values, np.linalg.eigvalsh(m.entries), atol=bound)

    def test_off_diagonal_norm_is_exact_next_to_large_diagonal(self):
        a = np.array([[1e8, 1e-6, 0.0], [1e-6, 1.0, 0.0], [0.0, 0.0, -1e8]])
        self.assertAlmostEqual(_off_norm(a), np.sqrt(2.0) * 1e-6, delta=1e-20)
        self.assertEqual(_off_norm(np.diag([1e8, 1.0, -3.0])), 0.0)

    def test_converges_within_reconstruction_bound(self):
        eps = np.finfo(float).eps
        rng = Seed(2025).generator()
        for trial in range(200):
            n = int(rng.integers(5, 25))
            g = rng.standard_normal((n, n))
            if trial % 4 == 0:
                g[:, n // 2:] = 0.0
                m = SymMatrix(g @ g.T)
            else:
                m = SymMatrix(g + g.T)
            values, vectors = eigh(m)
            residual = spectral_norm(m.entries - vectors @ np.diag(values) @ vectors.T)
            self.assertLessEqual(residual, RECONSTRUCTION_CONSTANT * n * eps * m.norm, f"trial {trial}, n = {n}")
            self.assertOrthonormal(vectors, atol=1e-13 * n)

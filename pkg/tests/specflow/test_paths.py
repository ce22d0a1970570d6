import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError, InputError
from src.numkern import Subspace
from src.scenarios import Seed, gen_form_path, gen_gl_path, random_orthogonal
from src.specflow import (
    FormPath,
    add_paths,
    concatenate,
    conjugate,
    constant_path,
    direct_sum,
    linear_path,
    restrict_path,
    spectral_flow,
    zero_path,
)
from tests.test_utils import NumericTestCase


class TestFormPath(NumericTestCase):

    def test_interpolation(self):
        p = FormPath((0.0, 1.0, 3.0), (np.diag([0.0, 1.0]), np.diag([2.0, 1.0]), np.diag([0.0, 5.0])))
        np.testing.assert_allclose(p.at(0.5).entries, np.diag([1.0, 1.0]))
        np.testing.assert_allclose(p.at(2.0).entries, np.diag([1.0, 3.0]))
        self.assertIs(p.at(1.0), p.samples[1])
        self.assertEqual(p.reference_norm, 5.0)
        with self.assertRaises(DomainError):
            p.at(3.5)

    def test_invalid_construction(self):
        with self.assertRaises(InputError):
            FormPath((0.0,), (np.eye(2),))
        with self.assertRaises(InputError):
            FormPath((0.0, 0.0), (np.eye(2), np.eye(2)))
        with self.assertRaises(InputError):
            FormPath((0.0, 1.0), (np.eye(2),))
        with self.assertRaises(InputError):
            FormPath((0.0, 1.0), (np.eye(2), np.eye(3)))
        with self.assertRaises(InputError):
            FormPath((0.0, float('nan')), (np.eye(2), np.eye(2)))

    def test_split_and_concatenate(self):
        rng = Seed(200).generator()
        p = gen_form_path(rng, 4, 6)
        left, right = p.split(3)
        self.assertEqual(left.b, right.a)
        joined = concatenate(left, right)
        self.assertEqual(joined.mesh, p.mesh)
        self.assertEqual(spectral_flow(left).flow + spectral_flow(right).flow, spectral_flow(p).flow)
        with self.assertRaises(DomainError):
            p.split(0)

    def test_concatenate_requires_matching_ends(self):
        with self.assertRaises(DomainError):
            concatenate(linear_path([[0.0]], [[1.0]]), linear_path([[2.0]], [[3.0]]))

    def test_concatenate_shifts_second_path(self):
        joined = concatenate(linear_path([[-1.0]], [[1.0]], 0.0, 1.0), linear_path([[1.0]], [[-2.0]], 5.0, 7.0))
        self.assertEqual(joined.mesh, (0.0, 1.0, 3.0))
        self.assertEqual(spectral_flow(joined).flow, 0)

    def test_reversed_negates_flow(self):
        rng = Seed(201).generator()
        for trial in range(10):
            p = gen_form_path(rng, int(rng.integers(1, 6)), 5)
            r = p.reversed()
            self.assertEqual((r.a, r.b), (p.a, p.b))
            self.assertEqual(spectral_flow(r).flow, -spectral_flow(p).flow, f"trial {trial}")

    def test_closed(self):
        rng = Seed(202).generator()
        self.assertTrue(gen_form_path(rng, 3, 5, closed=True).is_closed())
        self.assertFalse(linear_path([[0.0]], [[1.0]]).is_closed())

    def test_resampled(self):
        p = linear_path(np.diag([-1.0, 2.0]), np.diag([1.0, 0.0]))
        fine = p.resampled(np.linspace(0.0, 1.0, 5))
        np.testing.assert_allclose(fine.at(0.25).entries, p.at(0.25).entries)
        self.assertEqual(spectral_flow(fine).flow, spectral_flow(p).flow)
        with self.assertRaises(DomainError):
            p.resampled((0.0, 0.5))


class TestPathOperations(NumericTestCase):

    def test_restrict_to_full_space(self):
        rng = Seed(203).generator()
        p = gen_form_path(rng, 3, 4)
        r = restrict_path(p, Subspace.full(3))
        for s, t in zip(p.samples, r.samples):
            np.testing.assert_allclose(s.entries, t.entries, atol=1e-12)
        self.assertEqual(r.reference_norm, p.reference_norm)

    def test_restrict_to_coordinate_block(self):
        p = linear_path(np.diag([-1.0, 3.0, 2.0]), np.diag([1.0, -3.0, 2.0]))
        r = restrict_path(p, Subspace.coordinate(3, [0, 2]))
        np.testing.assert_allclose(r.end.entries, np.diag([1.0, 2.0]))
        self.assertEqual(spectral_flow(r).flow, 1)

    def test_direct_sum_adds_flows(self):
        rng = Seed(204).generator()
        p1 = gen_form_path(rng, 2, 3)
        p2 = gen_form_path(rng, 3, 5)
        s = direct_sum(p1, p2)
        self.assertEqual(s.dim, 5)
        self.assertEqual(spectral_flow(s).flow, spectral_flow(p1).flow + spectral_flow(p2).flow)

    def test_direct_sum_with_zero_path(self):
        p = linear_path([[-1.0]], [[1.0]])
        self.assertEqual(spectral_flow(direct_sum(p, zero_path(2))).flow, 1)

    def test_direct_sum_rejects_other_interval(self):
        with self.assertRaises(DomainError):
            direct_sum(linear_path([[1.0]], [[1.0]]), linear_path([[1.0]], [[1.0]], 0.0, 2.0))

    def test_add_paths(self):
        p = add_paths(linear_path([[-1.0]], [[1.0]]), constant_path([[0.5]]))
        np.testing.assert_allclose(p.end.entries, [[1.5]])
        self.assertEqual(spectral_flow(p).flow, 1)

    def test_conjugation_preserves_flow(self):
        rng = Seed(205).generator()
        for trial in range(10):
            n = int(rng.integers(1, 6))
            p = gen_form_path(rng, n, 4)
            mpath = gen_gl_path(rng, n, 4)
            self.assertEqual(spectral_flow(conjugate(p, mpath)).flow, spectral_flow(p).flow, f"trial {trial}")

    def test_conjugate_by_rotation(self):
        rng = Seed(206).generator()
        o = random_orthogonal(rng, 2)
        p = conjugate(linear_path(np.diag([-1.0, 1.0]), np.diag([1.0, 1.0])), [o, o])
        np.testing.assert_allclose(p.end.entries, np.eye(2), atol=1e-12)

    def test_conjugate_singularity_is_absolute(self):
        p = linear_path(np.diag([-1.0, 1.0]), np.diag([1.0, 1.0]))
        graded = conjugate(p, [np.diag([1e6, 1e-4])] * 2)
        np.testing.assert_allclose(np.diag(graded.end.entries), [1e12, 1e-8], rtol=1e-12)
        with self.assertRaises(DomainError):
            conjugate(p, [np.eye(2), np.diag([1.0, 1e-10])])

    def test_conjugate_rejects_singular(self):
        p = constant_path(np.eye(2))
        with self.assertRaises(DomainError):
            conjugate(p, [np.eye(2), np.diag([1.0, 0.0])])
        with self.assertRaises(DomainError):
            conjugate(p, [np.eye(2)])

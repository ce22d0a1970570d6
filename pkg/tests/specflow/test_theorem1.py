import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError
from src.numkern import Subspace
from src.scenarios import Seed, gen_form_path, random_orthogonal
from src.specflow import (
    endpoint_terms,
    linear_path,
    theorem1_nondegenerate_sides,
    theorem1_sides,
)
from tests.test_utils import NumericTestCase


class TestTheorem1(NumericTestCase):

    def test_flow_outside_subspace(self):
        p = linear_path(np.diag([1.0, 1.0, -1.0]), np.diag([1.0, 1.0, 1.0]), -1.0, 1.0)
        v = Subspace.coordinate(3, [0, 1])
        self.assertEqual(theorem1_sides(p, v), (1, 1))
        terms = endpoint_terms(p, v, 'a')
        self.assertEqual(terms.as_dict(), {'ind_perp': 1, 'dim_v_cap_perp': 0, 'dim_v_cap_ker': 0})

    def test_flow_inside_subspace(self):
        p = linear_path(np.diag([-1.0, 1.0, -1.0]), np.diag([1.0, 1.0, -1.0]), -1.0, 1.0)
        self.assertEqual(theorem1_sides(p, Subspace.coordinate(3, [0, 1])), (0, 0))

    def test_degenerate_endpoint(self):
        p = linear_path(np.diag([0.0, 1.0]), np.diag([1.0, 1.0]))
        v = Subspace.coordinate(2, [0])
        terms = endpoint_terms(p, v, 'a')
        self.assertEqual((terms.ind_perp, terms.dim_v_cap_perp, terms.dim_v_cap_ker), (0, 1, 1))
        self.assertEqual(terms.value, 0)
        self.assertEqual(theorem1_sides(p, v), (0, 0))

    def test_ambient_mismatch(self):
        p = linear_path(np.eye(2), np.eye(2))
        with self.assertRaises(DomainError):
            theorem1_sides(p, Subspace.coordinate(3, [0]))

    def test_random_paths(self):
        rng = Seed(300).generator()
        for trial in range(40):
            n = int(rng.integers(1, 7))
            k = int(rng.integers(0, n + 1))
            p = gen_form_path(rng, n, int(rng.integers(2, 7)))
            v = Subspace(random_orthogonal(rng, n)[:, :k])
            lhs, rhs = theorem1_sides(p, v)
            self.assertEqual(lhs, rhs, f"trial {trial}")

    def test_constant_kernel(self):
        rng = Seed(301).generator()
        for trial in range(15):
            n = int(rng.integers(2, 7))
            p = gen_form_path(rng, n, 4, constant_kernel_dim=int(rng.integers(1, n)))
            v = Subspace(random_orthogonal(rng, n)[:, :int(rng.integers(1, n + 1))])
            lhs, rhs = theorem1_sides(p, v)
            self.assertEqual(lhs, rhs, f"trial {trial}")


class TestNondegenerateVariant(NumericTestCase):

    def test_diagonal(self):
        p = linear_path(np.diag([1.0, 1.0, -1.0]), np.diag([1.0, 1.0, 1.0]), -1.0, 1.0)
        self.assertEqual(theorem1_nondegenerate_sides(p, Subspace.coordinate(3, [0, 1])), (1, 1))

    def test_rejects_degenerate_restriction(self):
        p = linear_path(np.diag([0.0, 1.0]), np.diag([1.0, 1.0]))
        with self.assertRaises(DomainError):
            theorem1_nondegenerate_sides(p, Subspace.coordinate(2, [0]))

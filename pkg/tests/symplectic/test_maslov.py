import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError, InputError
from src.numkern import Subspace, max_angle
from src.scenarios import Seed, gen_lagrangian_path, random_lagrangian
from src.symplectic import (
    Lagrangian,
    LagrangianPath,
    constant_lagrangian_path,
    horizontal,
    maslov_cover,
    maslov_index,
    maslov_oracle,
    standard_space,
    vertical,
)
from tests.test_utils import NumericTestCase


def line(theta: float) -> Subspace:
    return Subspace(np.array([[np.cos(theta)], [np.sin(theta)]]))


def rotating_path(a: float, b: float) -> LagrangianPath:
    return LagrangianPath.build(standard_space(1), (a, b), line)


class TestLagrangianPath(NumericTestCase):

    def test_build_refines(self):
        path = rotating_path(0.0, np.pi)
        self.assertGreater(len(path), 2)
        self.assertEqual((path.a, path.b), (0.0, np.pi))
        for s0, s1 in zip(path.samples, path.samples[1:]):
            self.assertLessEqual(np.arccos(min(1.0, abs((s0.frame.T @ s1.frame).item()))), path.max_step + 1e-12)

    def test_build_splits_steps_with_equal_ends(self):
        path = LagrangianPath.build(standard_space(1), (np.pi / 4, 5 * np.pi / 4, 9 * np.pi / 4), line)
        self.assertGreater(len(path), 3)
        for t0, t1 in zip(path.mesh, path.mesh[1:]):
            mid = line(0.5 * (t0 + t1))
            self.assertLessEqual(max_angle(line(t0), mid), path.max_step + 1e-12)
            self.assertLessEqual(max_angle(mid, line(t1)), path.max_step + 1e-12)

    def test_continuity_bound(self):
        space = standard_space(1)
        with self.assertRaises(DomainError):
            LagrangianPath(space, (0.0, 1.0), (horizontal(space), vertical(space)))
        with self.assertRaises(InputError):
            LagrangianPath(space, (1.0, 0.0), (horizontal(space), horizontal(space)))

    def test_split_and_reverse(self):
        path = rotating_path(0.0, 1.0)
        left, right = path.split(len(path) // 2)
        self.assertEqual(left.b, right.a)
        r = path.reversed()
        self.assertEqual((r.a, r.b), (path.a, path.b))
        self.assertSubspaceEqual(r.samples[0].sub, path.samples[-1].sub)
        self.assertSubspaceEqual(r.sample_at(0.25).sub, path.sample_at(0.75).sub)


class TestMaslovIndex(NumericTestCase):

    def setUp(self):
        self.space = standard_space(1)
        self.l0 = Lagrangian.checked(self.space, Subspace.coordinate(2, [1]))

    def test_rotating_line(self):
        path = rotating_path(np.pi / 4, 3 * np.pi / 4)
        result = maslov_cover(path, self.l0)
        self.assertEqual(result.index, -1)
        self.assertEqual(sum(result.flows), result.index)
        self.assertEqual(result.segments[0].interval[0], np.pi / 4)
        self.assertEqual(result.segments[-1].interval[1], 3 * np.pi / 4)

    def test_reversed_rotation(self):
        self.assertEqual(maslov_index(rotating_path(np.pi / 4, 3 * np.pi / 4).reversed(), self.l0), 1)

    def test_endpoint_on_base(self):
        self.assertEqual(maslov_index(rotating_path(np.pi / 2, 3 * np.pi / 4), self.l0), -1)
        self.assertEqual(maslov_index(rotating_path(np.pi / 4, np.pi / 2), self.l0), 0)

    def test_full_turn(self):
        path = rotating_path(np.pi / 4, np.pi / 4 + np.pi)
        self.assertEqual(maslov_index(path, self.l0), -1)
        self.assertEqual(maslov_oracle(path, self.l0), -1)

    def test_two_full_turns(self):
        self.assertEqual(maslov_index(rotating_path(np.pi / 4, np.pi / 4 + 2 * np.pi), self.l0), -2)
        path = LagrangianPath.build(self.space, (np.pi / 4, 5 * np.pi / 4, 9 * np.pi / 4), line)
        self.assertEqual(maslov_index(path, self.l0), -2)

    def test_constant_path(self):
        rng = Seed(500).generator()
        space = standard_space(3)
        l0 = random_lagrangian(rng, space)
        self.assertEqual(maslov_index(constant_lagrangian_path(random_lagrangian(rng, space)), l0), 0)
        self.assertEqual(maslov_index(constant_lagrangian_path(l0), l0), 0)

    def test_chart_independence_and_additivity(self):
        rng = Seed(501).generator()
        for trial in range(8):
            space = standard_space(int(rng.integers(1, 4)))
            l0 = random_lagrangian(rng, space)
            path = gen_lagrangian_path(rng, space)
            result = maslov_cover(path, l0)
            self.assertEqual(maslov_oracle(result.path, l0, rng=rng), result.index, f"trial {trial}")
            if len(result.path) >= 3:
                left, right = result.path.split(len(result.path) // 2)
                self.assertEqual(maslov_index(left, l0) + maslov_index(right, l0), result.index, f"trial {trial}")

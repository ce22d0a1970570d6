import unittest

from src.errors import PolicyError
from src.numkern import DEFAULT_POLICY, TolerancePolicy


class TestTolerancePolicy(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(DEFAULT_POLICY.as_dict(), {'rank_tol': 1e-9, 'angle_tol': 1e-8, 'refine_limit': 40})
        self.assertAlmostEqual(DEFAULT_POLICY.threshold(2.0), 2e-9)

    def test_invalid_values(self):
        with self.assertRaises(PolicyError):
            TolerancePolicy(rank_tol=0.0)
        with self.assertRaises(PolicyError):
            TolerancePolicy(angle_tol=-1.0)
        with self.assertRaises(PolicyError):
            TolerancePolicy(refine_limit=0)

    def test_overrides(self):
        policy = DEFAULT_POLICY.with_overrides({'rank_tol': '1e-6', 'refine_limit': '12'})
        self.assertEqual(policy.rank_tol, 1e-6)
        self.assertEqual(policy.refine_limit, 12)
        self.assertEqual(policy.angle_tol, DEFAULT_POLICY.angle_tol)

    def test_unknown_or_bad_override(self):
        with self.assertRaises(PolicyError):
            DEFAULT_POLICY.with_overrides({'tolerance': 1.0})
        with self.assertRaises(PolicyError):
            DEFAULT_POLICY.with_overrides({'rank_tol': 'small'})

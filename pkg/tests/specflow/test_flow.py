import unittest  # noqa: F401

import numpy as np

from src.errors import DomainError
from src.quadform import index_nullity
from src.scenarios import Seed, gen_form_path, random_orthogonal, random_pattern
from src.specflow import (
    FormPath,
    eigenvalue_tracks,
    linear_path,
    spectral_flow,
    spectral_flow_oracle,
    zero_path,
)
from tests.test_utils import NumericTestCase


class TestSpectralFlow(NumericTestCase):

    def test_single_upward_crossing(self):
        p = linear_path([[-1.0]], [[1.0]], -1.0, 1.0)
        cert = spectral_flow(p)
        self.assertEqual(cert.flow, 1)
        self.assertGreater(cert.min_margin, 0.0)
        self.assertEqual(cert.partition[0], -1.0)
        self.assertEqual(cert.partition[-1], 1.0)

    def test_zero_at_start_counts_nonnegative(self):
        self.assertEqual(spectral_flow(linear_path([[0.0]], [[1.0]], 0.0, 1.0)).flow, 0)
        self.assertEqual(spectral_flow(linear_path([[0.0]], [[-1.0]], 0.0, 1.0)).flow, -1)

    def test_crossings_cancel(self):
        p = linear_path(np.diag([-1.0, 1.0]), np.diag([1.0, -1.0]), -1.0, 1.0)
        self.assertEqual(spectral_flow(p).flow, 0)

    def test_zero_dimensional(self):
        self.assertEqual(spectral_flow(zero_path(0)).flow, 0)
        self.assertEqual(spectral_flow_oracle(zero_path(0)), 0)

    def test_zero_path(self):
        self.assertEqual(spectral_flow(zero_path(3, (0.0, 0.5, 1.0))).flow, 0)

    def test_certificate_dict(self):
        data = spectral_flow(linear_path([[-1.0]], [[1.0]], -1.0, 1.0)).as_dict()
        self.assertEqual(data['flow'], 1)
        self.assertEqual(len(data['partition']), data['subintervals'] + 1)
        self.assertEqual(len(data['barriers']), len(data['margins']))

    def test_flow_is_endpoint_index_difference(self):
        rng = Seed(100).generator()
        for trial in range(30):
            n = int(rng.integers(1, 7))
            pattern = None
            if trial % 3 == 0:
                pattern = tuple(random_pattern(rng, n, int(rng.integers(0, n + 1))) for _ in range(2))
            p = gen_form_path(rng, n, int(rng.integers(2, 10)), endpoint_pattern=pattern)
            ind_a = index_nullity(p.endpoint_form('a')).index
            ind_b = index_nullity(p.endpoint_form('b')).index
            self.assertEqual(spectral_flow(p).flow, ind_a - ind_b, f"trial {trial}")


class TestOracle(NumericTestCase):

    def test_simple_paths(self):
        self.assertEqual(spectral_flow_oracle(linear_path([[-1.0]], [[1.0]], -1.0, 1.0)), 1)
        self.assertEqual(spectral_flow_oracle(linear_path([[0.0]], [[1.0]], 0.0, 1.0)), 0)
        p = linear_path(np.diag([-1.0, 1.0]), np.diag([1.0, -1.0]), -1.0, 1.0)
        self.assertEqual(spectral_flow_oracle(p), 0)

    def test_too_few_samples(self):
        with self.assertRaises(DomainError):
            spectral_flow_oracle(linear_path([[-1.0]], [[1.0]]), samples_per_segment=3)

    def test_agrees_with_certified_flow(self):
        rng = Seed(101).generator()
        for trial in range(20):
            n = int(rng.integers(1, 9))
            p = gen_form_path(rng, n, int(rng.integers(2, 8)))
            self.assertEqual(spectral_flow_oracle(p), spectral_flow(p).flow, f"trial {trial}")


class TestTracks(NumericTestCase):

    def test_shape(self):
        p = FormPath((0.0, 1.0, 2.0), (np.diag([1.0, 2.0]), np.diag([-1.0, 0.0]), np.diag([0.0, 3.0])))
        times, values = eigenvalue_tracks(p, samples_per_segment=4)
        self.assertEqual(times.shape, (9,))
        self.assertEqual(values.shape, (9, 2))
        self.assertEqual(times[0], 0.0)
        self.assertEqual(times[-1], 2.0)
        np.testing.assert_allclose(values[0], [1.0, 2.0])
        self.assertTrue(np.all(np.diff(values, axis=1) >= 0))

    def test_rotated_path_has_same_tracks(self):
        rng = Seed(102).generator()
        o = random_orthogonal(rng, 3)
        p = linear_path(np.diag([-1.0, 0.5, 2.0]), np.diag([1.0, -0.5, 2.0]))
        rotated = linear_path(o.T @ np.diag([-1.0, 0.5, 2.0]) @ o, o.T @ np.diag([1.0, -0.5, 2.0]) @ o)
        np.testing.assert_allclose(eigenvalue_tracks(p)[1], eigenvalue_tracks(rotated)[1], atol=1e-10)
        self.assertEqual(spectral_flow(rotated).flow, spectral_flow(p).flow)
        self.assertEqual(spectral_flow(p).flow, 0)

import unittest  # noqa: F401

import numpy as np

from src.reporters import TracksReporter
from src.specflow import eigenvalue_tracks, linear_path
from tests.test_utils import BaseTestCase


class TestTracksReporter(BaseTestCase):

    def test_columns(self):
        times, values = eigenvalue_tracks(linear_path(np.diag([-1.0, 2.0]), np.diag([1.0, 2.0])), 2)
        TracksReporter("tracks.txt").generate([(times, values)])
        with open("tracks.txt") as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], "0 -1 2")
        self.assertEqual(lines[1], "0.5 0 2")
        self.assertEqual(lines[2], "1 1 2")

    def test_blocks_are_separated(self):
        block = (np.array([0.0, 1.0]), np.array([[1.0], [2.0]]))
        TracksReporter("tracks.txt").generate([block, block])
        with open("tracks.txt") as f:
            self.assertEqual(f.read(), "0 1\n1 2\n\n0 1\n1 2\n")

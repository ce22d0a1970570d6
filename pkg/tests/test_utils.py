from typing import Generator, Optional
import unittest
import os
import shutil
import tempfile
import sys
from contextlib import contextmanager
import io

import numpy as np

from src.numkern import DEFAULT_POLICY, Subspace, subspaces_equal


class NumericTestCase(unittest.TestCase):
    """
    Assertions for subspaces and symmetric matrices.
    """

    def assertSubspaceEqual(self, s1: Subspace, s2: Subspace, msg: Optional[str] = None) -> None:
        self.assertEqual(s1.ambient_dim, s2.ambient_dim, msg)
        self.assertEqual(s1.dim, s2.dim, msg or f"dimensions differ: {s1.dim} vs {s2.dim}")
        self.assertTrue(subspaces_equal(s1, s2, DEFAULT_POLICY), msg or f"{s1!r} and {s2!r} differ")

    def assertSymmetric(self, m, atol: float = 1e-12) -> None:
        m = np.asarray(m, dtype=float)
        self.assertEqual(m.shape[0], m.shape[1])
        np.testing.assert_allclose(m, m.T, atol=atol)

    def assertOrthonormal(self, frame: np.ndarray, atol: float = 1e-10) -> None:
        np.testing.assert_allclose(frame.T @ frame, np.eye(frame.shape[1]), atol=atol)


class BaseTestCase(NumericTestCase):
    """
    Base class for tests that need temporary files or directories.
    """
    def setUp(self) -> None:
        self.test_dir = tempfile.mkdtemp()
        self.old_cwd = os.getcwd()
        os.chdir(self.test_dir)

    def tearDown(self) -> None:
        os.chdir(self.old_cwd)
        # fix: ignore_errors=True to prevent Windows file lock crashes
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def create_file(self, filename, content) -> str:
        """
        Helper to create a file with given content in the test dir.
        Returns absolute path.
        """
        filepath = os.path.join(self.test_dir, filename)
        os.makedirs(os.path.dirname(filepath), exist_ok=True)
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(content)
        return filepath

    @contextmanager
    def capture_stdout(self) -> Generator[Optional[io.StringIO], None, None]:
        """
        Captures stdout for testing console output.
        """
        new_out = io.StringIO()
        old_out = sys.stdout
        try:
            sys.stdout = new_out
            yield new_out
        finally:
            sys.stdout = old_out

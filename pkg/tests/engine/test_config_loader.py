import unittest  # noqa: F401

from src.engine import ConfigLoader, RunConfig
from src.errors import PolicyError
from tests.test_utils import BaseTestCase


class TestConfigLoader(BaseTestCase):

    def setUp(self):
        super().setUp()
        self.loader = ConfigLoader()

    def test_defaults(self):
        config = self.loader.load_config(self.test_dir)
        self.assertEqual(config.rank_tol, 1e-9)
        self.assertEqual(config.angle_tol, 1e-8)
        self.assertEqual(config.refine_limit, 40)
        self.assertEqual(config.reporters, ['console', 'json'])
        self.assertFalse(config.timing)

    def test_pyproject(self):
        self.create_file("pyproject.toml", """
[tool.sfmaslov.policy]
rank_tol = 1e-10
refine_limit = 30

[tool.sfmaslov.run]
jobs = 4
reporters = ["json"]
timing = true
""")
        config = self.loader.load_config(self.test_dir)
        self.assertEqual(config.rank_tol, 1e-10)
        self.assertEqual(config.refine_limit, 30)
        self.assertEqual(config.jobs, 4)
        self.assertEqual(config.reporters, ['json'])
        self.assertTrue(config.timing)

    def test_pyproject_without_section_falls_through(self):
        self.create_file("pyproject.toml", "[project]\nname = 'x'\n")
        self.create_file(".sfmaslovrc", "[policy]\nangle_tol = 1e-6\n")
        config = self.loader.load_config(self.test_dir)
        self.assertEqual(config.angle_tol, 1e-6)

    def test_rc_file(self):
        self.create_file(".sfmaslovrc", """
[policy]
rank_tol = 1e-8

[run]
reporters =
    console
    json
max_step_angle = 0.1
""")
        config = self.loader.load_config(self.test_dir)
        self.assertEqual(config.rank_tol, 1e-8)
        self.assertEqual(config.max_step_angle, 0.1)
        self.assertEqual(config.reporters, ['console', 'json'])

    def test_setup_cfg(self):
        self.create_file("setup.cfg", "[sfmaslov:run]\noracle_samples = 200\ntiming = yes\n")
        config = self.loader.load_config(self.test_dir)
        self.assertEqual(config.oracle_samples, 200)
        self.assertTrue(config.timing)

    def test_explicit_file_wins(self):
        self.create_file(".sfmaslovrc", "[policy]\nrank_tol = 1e-8\n")
        path = self.create_file("custom.ini", "[policy]\nrank_tol = 1e-7\n")
        config = self.loader.load_config(self.test_dir, path)
        self.assertEqual(config.rank_tol, 1e-7)

    def test_missing_explicit_file(self):
        with self.assertLogs('src.engine.config_loader', level='WARNING'):
            config = self.loader.load_config(self.test_dir, "absent.toml")
        self.assertEqual(config.rank_tol, 1e-9)

    def test_unknown_key_is_ignored(self):
        self.create_file(".sfmaslovrc", "[run]\ncolour = blue\n")
        with self.assertLogs('src.engine.config_loader', level='WARNING') as logs:
            self.loader.load_config(self.test_dir)
        self.assertIn("colour", logs.output[0])

    def test_invalid_values(self):
        self.create_file(".sfmaslovrc", "[policy]\nrank_tol = tiny\n")
        with self.assertRaises(PolicyError):
            self.loader.load_config(self.test_dir)

    def test_invalid_policy(self):
        self.create_file(".sfmaslovrc", "[policy]\nrefine_limit = 0\n")
        with self.assertRaises(PolicyError):
            self.loader.load_config(self.test_dir)


class TestRunConfig(BaseTestCase):

    def test_policy_overrides(self):
        config = RunConfig()
        config.override_policy({'angle_tol': '1e-6'})
        self.assertEqual(config.angle_tol, 1e-6)
        self.assertEqual(config.policy.angle_tol, 1e-6)
        with self.assertRaises(PolicyError):
            config.override_policy({'speed': 1})
        with self.assertRaises(PolicyError):
            config.override_policy({'rank_tol': -1})

    def test_environment(self):
        env = RunConfig().environment()
        self.assertEqual(env['policy'], {'rank_tol': 1e-9, 'angle_tol': 1e-8, 'refine_limit': 40})
        self.assertEqual(env['max_step_angle'], 0.2)

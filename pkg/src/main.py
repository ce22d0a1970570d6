import argparse
import logging
import os
import sys
from typing import Dict, List, Optional

from . import __version__
from .engine import ConfigLoader, ReportManager, RunConfig, RunPlan, SuiteRunner, load_instance, load_scenario
from .engine.scenario_file import parse_dims
from .errors import PolicyError, SfMaslovError
from .reduction import theorem2_report
from .reporters import TracksReporter, dumps
from .scenarios import form_instance, maslov_instance, reduction_instance
from .specflow import eigenvalue_tracks, spectral_flow
from .symplectic import MaslovResult, maslov_cover

logger = logging.getLogger(__name__)

COMPUTE_KINDS = ('sf', 'maslov', 'reduce')


def parse_policy_flags(items: Optional[List[str]]) -> Dict[str, str]:
    """'key=value' strings to a dict; the values are validated by the policy itself."""
    overrides: Dict[str, str] = {}
    for item in items or []:
        key, sep, value = item.partition('=')
        if not sep or not key.strip():
            raise PolicyError(f"Policy override must look like key=value, got {item!r}")
        overrides[key.strip()] = value.strip()
    return overrides


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfmaslov",
        description="Spectral flow, Maslov index and coisotropic reduction, checked as exact integer identities."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Command to execute", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Explicit configuration file (TOML or INI).")
    common.add_argument("--policy", action="append", metavar="KEY=VALUE",
                        help="Override a tolerance policy field (rank_tol, angle_tol, refine_limit).")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Only warnings and errors.")

    # command: run
    parser_run = subparsers.add_parser("run", parents=[common], help="Run a verification scenario file.")
    parser_run.add_argument("scenario", help="Scenario file (JSON).")
    parser_run.add_argument("--seed", type=int, help="Master seed (unsigned 64-bit).")
    parser_run.add_argument("--trials", type=int, help="Number of random trials.")
    parser_run.add_argument("--dims", help="Dimension range as LO-HI or a single N.")
    parser_run.add_argument("--out", help="Report file; defaults to the configured report_file.")
    parser_run.add_argument("--jobs", type=int, help="Worker processes.")
    parser_run.add_argument("--timing", action="store_true", help="Record wall-clock times in the report.")
    parser_run.add_argument("--format", nargs="+", choices=['console', 'json'],
                            help="Report formats. Default: console json")

    # command: compute
    parser_compute = subparsers.add_parser("compute", parents=[common], help="Compute one explicit instance.")
    parser_compute.add_argument("what", choices=COMPUTE_KINDS, help="Quantity to compute.")
    parser_compute.add_argument("instance", help="Instance file (JSON).")
    parser_compute.add_argument("--certificate", action="store_true", help="Print the certificate as JSON.")
    parser_compute.add_argument("--emit-tracks", metavar="FILE", help="Write eigenvalue tracks as columnar text.")
    parser_compute.add_argument("--samples-per-segment", type=int, default=10,
                                help="Track samples per mesh segment (default 10).")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    return ConfigLoader().load_config(os.getcwd(), args.config)


def cmd_run(args: argparse.Namespace) -> int:
    config = load_config(args)
    scenario = load_scenario(args.scenario)

    loader = ConfigLoader()
    loader.apply(config, scenario.run, 'scenario parameters')
    config.override_policy(scenario.policy)
    config.override_policy(parse_policy_flags(args.policy))
    if args.jobs is not None:
        config.jobs = args.jobs
    if args.timing:
        config.timing = True
    if args.format:
        config.reporters = list(args.format)

    plan = RunPlan.from_scenario(
        scenario,
        trials=args.trials,
        seed=args.seed,
        dims=parse_dims(args.dims, '--dims') if args.dims else None,
    )
    result = SuiteRunner(config).run(plan)
    ReportManager(config, args.out).generate(result)
    if 'json' in config.reporters:
        logger.info(f"Report written to {args.out or config.report_file}")
    return result.exit_code


def _emit_tracks(args: argparse.Namespace, blocks) -> None:
    if args.emit_tracks:
        TracksReporter(args.emit_tracks).generate(blocks)


def _chart_tracks(result: MaslovResult, samples: int):
    return [eigenvalue_tracks(segment.form_path, samples) for segment in result.segments]


def _chart_certificate(result: MaslovResult) -> List[Dict]:
    return [
        {'interval': list(segment.interval), 'samples': [segment.first, segment.last], 'flow': flow}
        for segment, flow in zip(result.segments, result.flows)
    ]


def cmd_compute(args: argparse.Namespace) -> int:
    config = load_config(args)
    config.override_policy(parse_policy_flags(args.policy))
    policy = config.policy
    data = load_instance(args.instance, args.what)

    if args.what == 'sf':
        path = form_instance(data, 'sf', args.instance, policy)['path']
        cert = spectral_flow(path, policy)
        print(cert.flow)
        if args.certificate:
            print(dumps(cert.as_dict()), end='')
        _emit_tracks(args, [eigenvalue_tracks(path, args.samples_per_segment)])
        return 0

    if args.what == 'maslov':
        instance = maslov_instance(data, args.instance, policy, config.max_step_angle)
        result = maslov_cover(instance.path, instance.l0, policy)
        print(result.index)
        if args.certificate:
            print(dumps({'mu': result.index, 'charts': _chart_certificate(result)}), end='')
        _emit_tracks(args, _chart_tracks(result, args.samples_per_segment))
        return 0

    instance = reduction_instance(data, args.instance, policy, config.max_step_angle)
    report = theorem2_report(instance.setup, instance.path, instance.l0, policy)
    defect = report.lhs - report.rhs
    print(f"mu = {report.mu}")
    print(f"mu_reduced = {report.mu_reduced}")
    print(f"defect = {defect}")
    if args.certificate:
        print(dumps({**report.as_dict(), 'lhs': report.lhs, 'rhs': report.rhs}), end='')
    if args.emit_tracks:
        _emit_tracks(args, _chart_tracks(maslov_cover(instance.path, instance.l0, policy), args.samples_per_segment))
    return 0 if defect == 0 else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format='[%(levelname)s] %(message)s',
        stream=sys.stdout
    )
    logging.getLogger().setLevel(level)

    if getattr(args, 'seed', None) is not None and not 0 <= args.seed < 2 ** 64:
        parser.error("--seed must be an unsigned 64-bit integer")

    try:
        if args.command == "run":
            return cmd_run(args)
        return cmd_compute(args)
    except SfMaslovError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

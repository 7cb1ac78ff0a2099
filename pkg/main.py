"""Command-line entry point: ``anticanon enumerate | classify | verify | table``."""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Optional

from config.settings import parse_seeds, settings
from core.errors import AnticanonError
from cycle.enumerate import enumerate_plans
from models.plan import load_plans
from orchestrator.golden import diff, load_golden
from orchestrator.pipeline import RunOptions, run_plans
from orchestrator.render import FORMATS, render_enumeration, render_reports, render_table

logger = logging.getLogger("anticanon")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class Command(Enum):
    ENUMERATE = "enumerate"
    CLASSIFY = "classify"
    VERIFY = "verify"
    TABLE = "table"


@dataclass
class RunConfig:
    """Parsed command line; unset values fall back to settings."""
    command: Command
    plan_file: Optional[Path] = None
    seeds: List[int] = field(default_factory=settings.seeds)
    output_format: str = settings.output_format
    samples: int = settings.samples
    workers: int = settings.workers
    nodes_only: bool = False
    
    def options(self) -> RunOptions:
        return RunOptions(seeds=self.seeds, samples=self.samples, workers=self.workers)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anticanon", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    
    def common(p: argparse.ArgumentParser):
        p.add_argument("--format", dest="output_format", choices=FORMATS, default=settings.output_format)
        p.add_argument("--seeds", type=parse_seeds, default=None, help="comma separated, e.g. 1,2,3")
        p.add_argument("--samples", type=int, default=settings.samples)
        p.add_argument("--workers", type=int, default=settings.workers)
    
    p = sub.add_parser("enumerate", help="list blowup plans up to symmetry")
    p.add_argument("--nodes-only", action="store_true")
    p.add_argument("--format", dest="output_format", choices=FORMATS, default=settings.output_format)
    
    p = sub.add_parser("classify", help="classify the plans in a JSON file")
    p.add_argument("--plans", dest="plan_file", type=Path, required=True)
    common(p)
    
    common(sub.add_parser("verify", help="classify every enumerated plan and diff against the golden table"))
    common(sub.add_parser("table", help="print the consolidated classification table"))
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """Parse command-line arguments into a RunConfig."""
    args = build_parser().parse_args(argv)
    config = RunConfig(command=Command(args.command), output_format=args.output_format)
    config.plan_file = getattr(args, "plan_file", None)
    config.nodes_only = getattr(args, "nodes_only", False)
    if getattr(args, "seeds", None):
        config.seeds = args.seeds
    config.samples = getattr(args, "samples", settings.samples)
    config.workers = getattr(args, "workers", settings.workers)
    return config


def cmd_enumerate(config: RunConfig) -> int:
    plans = enumerate_plans(nodes_only=config.nodes_only)
    sys.stdout.write(render_enumeration(plans, config.output_format))
    return EXIT_OK


def cmd_classify(config: RunConfig) -> int:
    """Classify the plans in a JSON file; exits with the mismatch code if any fail."""
    try:
        plans = load_plans(config.plan_file)
    except (OSError, AnticanonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    reports = run_plans(plans, config.options())
    sys.stdout.write(render_reports(reports, config.output_format))
    return EXIT_MISMATCH if any(r.errors or r.case is None for r in reports) else EXIT_OK


def _run_enumeration(config: RunConfig):
    plans = [e.plan for e in enumerate_plans()]
    return run_plans(plans, config.options())


def _report_problems(problems: List[str]) -> int:
    for problem in problems:
        print(f"mismatch: {problem}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Classify every enumerated plan and diff the results against the golden table."""
    try:
        golden = load_golden()
    except (OSError, AnticanonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    reports = _run_enumeration(config)
    sys.stdout.write(render_reports(reports, config.output_format))
    return _report_problems(diff(reports, golden, require_all=True))


def cmd_table(config: RunConfig) -> int:
    try:
        golden = load_golden()
    except (OSError, AnticanonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    reports = _run_enumeration(config)
    sys.stdout.write(render_table(reports, config.output_format))
    return _report_problems(diff(reports, golden, require_all=True))


HANDLERS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.ENUMERATE: cmd_enumerate,
    Command.CLASSIFY: cmd_classify,
    Command.VERIFY: cmd_verify,
    Command.TABLE: cmd_table,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    logging.basicConfig(level=settings.log_level.upper(), stream=sys.stderr,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        config = parse_config(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return HANDLERS[config.command](config)


if __name__ == "__main__":
    sys.exit(main())

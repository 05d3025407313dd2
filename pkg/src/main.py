#!/usr/bin/env python3
"""
GEPU toolkit command line

    gepu all --config run.conf [--window-sizes 24,36] [--se-mode hac] [--out DIR]

Exit codes: 0 success, 2 config error, 3 data error, 4 numerical error.
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from src.config import load_run_config
from src.config.run_config import PATH_KEYS
from src.utils import setup_logging
from src.utils.errors import GepuError
from src.workflows.gepu_pipeline import STAGES, GepuPipeline

logger = setup_logging()

# subcommand -> (stages computed, stages emitted)
COMMANDS: Dict[str, Dict[str, List[str]]] = {
    "ingest-check": {"stages": ["ingest"], "emit": []},
    "index": {"stages": ["ingest", "index"], "emit": ["index"]},
    "metrics": {"stages": ["ingest", "metrics"], "emit": ["metrics"]},
    "regress": {"stages": list(STAGES), "emit": ["regress"]},
    "all": {"stages": list(STAGES), "emit": ["index", "metrics", "regress"]},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gepu",
        description="PCA-based global economic policy uncertainty index and market regressions",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--config", help="key-value run configuration file")
        sub.add_argument("--epu", dest="epu_path")
        sub.add_argument("--prices", dest="prices_path")
        sub.add_argument("--gdp", dest="gdp_path")
        sub.add_argument("--window-sizes", dest="window_sizes", help="comma-separated, e.g. 24,36")
        sub.add_argument("--month-range", dest="month_range", help="FIRST:LAST as YYYY-MM:YYYY-MM")
        sub.add_argument("--world-index-id", dest="world_index_id")
        sub.add_argument("--min-overlap", dest="min_overlap", type=int)
        sub.add_argument("--se-mode", dest="se_mode", choices=["classical", "hac"])
        sub.add_argument("--return-mode", dest="return_mode", choices=["simple", "log"])
        sub.add_argument("--holiday-mode", dest="holiday_mode", choices=["bridge", "strict"])
        sub.add_argument("--out", dest="output_dir")
        if name == "index":
            sub.add_argument("--method", choices=["pca", "gdp", "both"], default="both")
    return parser


def required_paths(command: str, methods: Sequence[str]) -> List[str]:
    if command == "index":
        return ["epu_path"] + (["gdp_path"] if "gdp" in methods else [])
    if command == "metrics":
        return ["prices_path"]
    return list(PATH_KEYS)


def _emit_error(error: GepuError) -> int:
    print(json.dumps(error.to_report()), file=sys.stderr)
    return error.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main application entry point"""
    args = build_parser().parse_args(argv)
    overrides: Dict[str, Any] = {
        key: getattr(args, key)
        for key in (
            "epu_path",
            "prices_path",
            "gdp_path",
            "window_sizes",
            "month_range",
            "world_index_id",
            "min_overlap",
            "se_mode",
            "return_mode",
            "holiday_mode",
            "output_dir",
        )
    }
    method = getattr(args, "method", "both")
    methods = ["pca", "gdp"] if method == "both" else [method]

    try:
        config = load_run_config(args.config, overrides)
    except GepuError as e:
        return _emit_error(e)

    plan = COMMANDS[args.command]
    result = GepuPipeline().run(
        config,
        command=args.command,
        stages=plan["stages"],
        emit=plan["emit"],
        methods=methods,
        required_paths=required_paths(args.command, methods),
    )
    if not result["success"]:
        return _emit_error(result["error"])

    report = result["report"]
    print(f"gepu {args.command}: {len(report.manifest)} data file(s) written to {config.output_dir}")
    for entry in report.manifest:
        print(f"  {entry.file}  sha256={entry.sha256[:16]}")
    for warning in report.warnings:
        print(f"  warning: {warning}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

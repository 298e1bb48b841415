"""
Command line entry point.

    python orderspace/app.py subcover --order finite4.ord --cover bridge.cov --scan 3

Reports go to stdout, logs to stderr (and a dated file under --log-dir).
Exit status is 0 for ok/found, 1 for none/staged and 2 for errors.
"""
import os
import sys
import logging
import argparse
import tomli
from orderspace.commands import COMMANDS, Command, Report
from orderspace.util import BudgetExhaustedError, InputError, OraclePremiseError, timestamp_date


# handlers installed by `setup_logging`, replaced on each call
_LOG_HANDLERS = []

def setup_logging(level=logging.WARNING, log_dir=None):
    """Root logger setup: console handler on stderr at `level`, plus a
    dated debug log file when `log_dir` is given."""
    logFormatter = logging.Formatter("%(asctime)s [%(threadName)-12.12s] [%(levelname)-5.5s]  %(message)s")
    rootLogger = logging.getLogger()
    rootLogger.setLevel(logging.DEBUG)
    for handler in _LOG_HANDLERS:
        rootLogger.removeHandler(handler)
        handler.close()
    _LOG_HANDLERS.clear()

    if log_dir is not None:
        os.makedirs(log_dir, exist_ok=True)
        logFileHandler = logging.FileHandler(os.path.join(log_dir, f"{timestamp_date()}.log"), mode="a", encoding="utf-8", delay=False)
        logFileHandler.setLevel(logging.DEBUG)
        logFileHandler.setFormatter(logFormatter)
        rootLogger.addHandler(logFileHandler)
        _LOG_HANDLERS.append(logFileHandler)

    logConsoleHandler = logging.StreamHandler(sys.stderr)
    logConsoleHandler.setLevel(level)
    logConsoleHandler.setFormatter(logFormatter)
    rootLogger.addHandler(logConsoleHandler)
    _LOG_HANDLERS.append(logConsoleHandler)


def load_config(verb: str, path: str) -> dict:
    """TOML config file: top-level keys apply to every verb, a `[verb]`
    table to that verb only."""
    try:
        with open(path, "rb") as f:
            data = tomli.load(f)
    except OSError as err:
        raise InputError(f"Cannot read config {path}: {err}")
    except tomli.TOMLDecodeError as err:
        raise InputError(f"Invalid TOML in {path}: {err}")
    config = { k: v for k, v in data.items() if not isinstance(v, dict) }
    table = data.get(verb, {})
    if not isinstance(table, dict):
        raise InputError(f"`{verb}` in {path} must be a table")
    config.update(table)
    return config

def merge_config(command, config_path=None, overrides=None) -> dict:
    """Defaults, then config file, then explicit flags."""
    config = command.default_config()
    if config_path is not None:
        config.update(load_config(command.name, config_path))
    if overrides is not None:
        config.update({ k: v for k, v in overrides.items() if v is not None })
    return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orderspace", description="Covers, gaps and Kleene-Brouwer trees of countable orders.")
    parser.add_argument("verb", choices=COMMANDS, help="Command to run")
    parser.add_argument("--order", dest="order", metavar="PATH|gallery:NAME", help="Order file or gallery order")
    parser.add_argument("--cover", dest="cover", metavar="PATH|gallery-gap:NAME", help="Cover file, gap cover, or injection index stream")
    parser.add_argument("--tree", dest="tree", metavar="PATH|builtin:NAME", help="Tree file or builtin tree")
    parser.add_argument("--sigma", dest="sigma", metavar="CSV", help="Sequence, `-` for the empty one")
    parser.add_argument("--honest", dest="honest", metavar="PATH", help="Honest table file (flatten)")
    parser.add_argument("--injection", dest="injection", metavar="NAME", help="double or random:SEED")
    parser.add_argument("--budget", dest="budget", type=int, help="Search budget")
    parser.add_argument("--scan", dest="scan", type=int, help="Cover indices scanned")
    parser.add_argument("--depth", dest="depth", type=int, help="Leftmost descent cap")
    parser.add_argument("--sample", dest="sample", type=int, help="Sample size")
    parser.add_argument("--config", dest="config", metavar="PATH", help="TOML config overrides")
    parser.add_argument("--verbose", dest="verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--log-dir", dest="log_dir", metavar="DIR", help="Also log to DIR/<date>.log")
    return parser


def execute(verb: str, config_path=None, overrides=None, inputs=None) -> Report:
    """Run one verb and turn domain errors into an error report."""
    command = Command.get(verb)
    if command is None:
        return Report.error(f"unknown command {verb}")
    try:
        config = merge_config(command, config_path, overrides)
        if inputs is not None:
            config.update({ k: v for k, v in inputs.items() if v is not None })
        logging.debug(f"[{verb}] config: {config}")
        return command.run(**config)
    except (InputError, BudgetExhaustedError, OraclePremiseError) as err:
        logging.error(f"[{verb}] {err}")
        return Report.error(str(err))


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose else logging.WARNING, args.log_dir)

    report = execute(
        args.verb,
        config_path=args.config,
        overrides={
            "budget": args.budget,
            "scan": args.scan,
            "depth": args.depth,
            "sample": args.sample,
            "injection": args.injection,
        },
        inputs={
            "order": args.order,
            "cover": args.cover,
            "tree": args.tree,
            "sigma": args.sigma,
            "honest": args.honest,
        },
    )
    print(report.text())
    return report.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

import argparse
import logging
import sys
import traceback

from ..errors import AdrToursError, ConfigError
from .commands.mission import fly, plan, report, tune
from .commands.serve import serve

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LAW_CHOICES = ("ruggiero", "dvlaw", "qlaw", "openloop", "all")


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO, format=LOG_FORMAT)


def _legs(text):
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"--legs expects comma-separated leg numbers, got {text!r}") from None


def main():
    """
    Entry point for the `adr_tours` command-line interface.

    Commands
    --------
    plan
        Optimise a tour for the configured debris and write its leg table and record.
    fly
        Propagate a planned tour under a guidance law, open loop or all of them.
    tune
        Swarm-tune guidance weights for a planned tour.
    report
        Collect the outputs of a mission directory into a text report.
    serve
        Run the HTTP service.

    Exit codes are 0 on success, 1 for domain and unexpected errors, 2 for configuration
    and catalog errors, 3 for infeasible tours and 4 for propagation aborts.
    """
    parser = argparse.ArgumentParser(prog="adr_tours")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    plan_parser = subparsers.add_parser("plan", help="Optimise a debris removal tour.")
    plan_parser.add_argument("--config", type=str, required=True,
                             help="Mission configuration (YAML or JSON).")
    plan_parser.add_argument("--catalog", type=str, required=True,
                             help="Two-line element sets of the debris.")
    plan_parser.add_argument("--objective", choices=("fuel", "time"), default=None,
                             help="Override the configured objective.")
    plan_parser.add_argument("--seed", type=int, default=None, help="Optimiser seed.")
    plan_parser.add_argument("--out", type=str, default=None, help="Output directory.")

    fly_parser = subparsers.add_parser("fly", help="Propagate a planned tour.")
    fly_parser.add_argument("--config", type=str, required=True,
                            help="Mission configuration (YAML or JSON).")
    fly_parser.add_argument("--solution", type=str, default=None,
                            help="Tour record (default: solution.json in the output dir).")
    fly_parser.add_argument("--law", choices=LAW_CHOICES, default=None,
                            help="Guidance law (default: the configured one).")
    fly_parser.add_argument("--legs", type=str, default=None,
                            help="Comma-separated transfer legs to fly (default: all).")
    fly_parser.add_argument("--control-step", type=float, default=None,
                            help="Guidance hold interval in seconds.")
    fly_parser.add_argument("--out", type=str, default=None, help="Output directory.")

    tune_parser = subparsers.add_parser("tune", help="Swarm-tune guidance weights.")
    tune_parser.add_argument("--config", type=str, required=True,
                             help="Mission configuration (YAML or JSON).")
    tune_parser.add_argument("--solution", type=str, default=None,
                             help="Tour record (default: solution.json in the output dir).")
    tune_parser.add_argument("--law", choices=LAW_CHOICES, default=None,
                             help="Law to tune (default: the configured one).")
    tune_parser.add_argument("--seed", type=int, default=None, help="Swarm seed.")
    tune_parser.add_argument("--swarm-size", type=int, default=None, help="Particles.")
    tune_parser.add_argument("--iterations", type=int, default=None, help="Generations.")
    tune_parser.add_argument("--out", type=str, default=None, help="Output directory.")

    report_parser = subparsers.add_parser("report", help="Write the mission report.")
    report_parser.add_argument("--out", type=str, required=True,
                               help="Directory holding the plan and fly outputs.")

    serve_parser = subparsers.add_parser("serve", help="Run the HTTP service.")
    serve_parser.add_argument("--host", type=str, default="127.0.0.1", help="Bind address.")
    serve_parser.add_argument("--port", type=int, default=5000, help="TCP port.")
    serve_parser.add_argument("--secret-key", type=str, default=None,
                              help="Flask SECRET_KEY config value.")

    args = parser.parse_args()
    _configure_logging(args.verbose)

    try:
        if args.command == "plan":
            plan(config=args.config, catalog=args.catalog, objective=args.objective,
                 seed=args.seed, out=args.out)
        elif args.command == "fly":
            fly(config=args.config, solution=args.solution, law=args.law,
                legs=_legs(args.legs), out=args.out, control_step=args.control_step)
        elif args.command == "tune":
            tune(config=args.config, solution=args.solution, law=args.law, seed=args.seed,
                 swarm_size=args.swarm_size, iterations=args.iterations, out=args.out)
        elif args.command == "report":
            report(out=args.out)
        elif args.command == "serve":
            serve(host=args.host, port=args.port, secret_key=args.secret_key)
    except AdrToursError as e:
        traceback.print_exc()
        print(e, file=sys.stderr)
        sys.exit(e.exit_code)
    except Exception as e:
        traceback.print_exc()
        print(e, file=sys.stderr)
        sys.exit(1)

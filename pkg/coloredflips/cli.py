# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Command-line surface of coloredflips.

    coloredflips enumerate --n 6 --what ctft
    coloredflips verify --n 7 --suite isomorphism
    coloredflips graph --n 5 --format dot
    coloredflips dn --n 9 --method tableaux
    coloredflips geodesics --n 6 --direction plus

Documents go to standard output, diagnostics to standard error (or to the
file given with --log-file). The exit status is 0 on success, 1 when a
request is refused or a verification fails and 2 on a usage error.
"""
# Standard library
import argparse
import enum
import logging
import sys
import typing
# Local imports
from coloredflips import codec
from coloredflips import config
from coloredflips import errors
from coloredflips import export
from coloredflips import flipgraph
from coloredflips import polygon
from coloredflips import tableaux
from coloredflips import verification
# Constants
LOG_FORMAT: str = "%(levelname)-8s|%(funcName)-18s|%(lineno)3d| %(message)s"
VERBOSITY: typing.Dict[int, str] = {1: "INFO", 2: "DEBUG"}
ENUMERATE_CAPS: typing.Dict[export.What, config.Cap] = {
    export.What.CTFT: config.Cap.ENUMERATE_CTFT,
    export.What.ARCPERM: config.Cap.ENUMERATE_ARCPERM,
    export.What.CLASSES: config.Cap.ENUMERATE_CLASSES,
    export.What.TABLEAUX: config.Cap.ENUMERATE_TABLEAUX,
}
logger: logging.Logger = logging.getLogger(__name__)


class Method(str, enum.Enum):
    FORMULA = "formula"
    TABLEAUX = "tableaux"
    ENUMERATE = "enumerate"


DN_CAPS: typing.Dict[Method, config.Cap] = {
    Method.FORMULA: config.Cap.DN_FORMULA,
    Method.TABLEAUX: config.Cap.DN_TABLEAUX,
    Method.ENUMERATE: config.Cap.DN_ENUMERATE,
}


def polygon_size(text: str) -> int:
    """
    Reads the value of --n.

    Raises:
        argparse.ArgumentTypeError: If the value is not a positive integer.
    """
    try:
        n: int = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text} is not an integer.")
    if n < 1:
        raise argparse.ArgumentTypeError(f"n must be positive, got {n}.")
    return n


def code_argument(text: str) -> codec.Code:
    """
    Reads a code written as "v0;bits".

    Raises:
        argparse.ArgumentTypeError: If the text is not a code.
    """
    try:
        return codec.Code.parse(text)
    except errors.ColoredFlipsError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the parser with the global options and one subparser per command.

    Parameters:
        None

    Returns:
        The argument parser of coloredflips.
    """
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="coloredflips",
        description=("Colored triangle-free triangulations, their flip graph"
                     " and the objects in bijection with them."))
    parser.add_argument("--config", default=None,
                        help="A TOML file lowering the caps on n.")
    parser.add_argument("--log-file", default=None,
                        help="Write the diagnostics to this file.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG messages.")
    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_parser = commands.add_parser(
        "enumerate", help="List every object of a family as JSON lines.")
    enumerate_parser.add_argument("--n", type=polygon_size, required=True)
    enumerate_parser.add_argument(
        "--what", choices=[w.value for w in export.What], default="ctft")

    verify_parser = commands.add_parser(
        "verify", help="Check the properties of the objects for one n.")
    verify_parser.add_argument("--n", type=polygon_size, required=True)
    verify_parser.add_argument(
        "--suite", choices=[s.value for s in verification.Suite],
        default="all")
    verify_parser.add_argument("--json", action="store_true",
                               help="Print the report as JSON.")

    graph_parser = commands.add_parser(
        "graph", help="Write the flip graph as DOT or JSON.")
    graph_parser.add_argument("--n", type=polygon_size, required=True)
    graph_parser.add_argument(
        "--format", choices=[f.value for f in export.GraphFormat],
        default="dot")
    graph_parser.add_argument("--oriented", action="store_true",
                              help="Write arcs towards the larger rank.")
    graph_parser.add_argument(
        "--labels", choices=[label.value for label in export.Labels],
        default="diagonal")

    dn_parser = commands.add_parser(
        "dn", help="Count the geodesics from the canonical star to its"
                   " reverse.")
    dn_parser.add_argument("--n", type=polygon_size, required=True)
    dn_parser.add_argument("--method", choices=[m.value for m in Method],
                           default="formula")
    dn_parser.add_argument("--json", action="store_true")

    geodesics_parser = commands.add_parser(
        "geodesics", help="List the geodesics from a code to its reverse.")
    geodesics_parser.add_argument("--n", type=polygon_size, required=True)
    geodesics_parser.add_argument(
        "--direction", choices=[d.value for d in flipgraph.Direction],
        default="both")
    geodesics_parser.add_argument(
        "--start", type=code_argument, default=None,
        help="Start code, the canonical star by default.")
    geodesics_parser.add_argument("--tableaux", action="store_true",
                                  help="Add the tableau of plus geodesics.")
    return parser


def configure_logging(verbose: int, log_file: typing.Optional[str],
                      default_level: str) -> None:
    """
    Sends the log records to standard error or to a file.

    Parameters:
        verbose : The number of -v flags, 1 for INFO and 2 or more for DEBUG.
        log_file : Optional path of the log file, overwritten on every run.
        default_level : The level used without -v, from the settings.

    Returns:
        None
    """
    level: str = VERBOSITY.get(min(verbose, 2), default_level)
    if log_file is None:
        logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT,
                            level=level)
    else:
        logging.basicConfig(filename=log_file, filemode="w",
                            format=LOG_FORMAT, level=level, encoding="utf-8")


###############################################################################
# Commands                                                                    #
###############################################################################
def cmd_enumerate(args: argparse.Namespace,
                  settings: config.Settings) -> int:
    """
    Prints every object of a family as JSON lines, closed by a count line.

    Parameters:
        args : The parsed arguments with n and what.
        settings : The caps in force.

    Returns:
        The exit status 0.

    Raises:
        errors.ColoredFlipsError: If n is outside the range of the family.
    """
    what = export.What(args.what)
    settings.check(ENUMERATE_CAPS[what], args.n)
    for line in export.enumeration_lines(args.n, what):
        print(line)
    return 0


def cmd_verify(args: argparse.Namespace, settings: config.Settings) -> int:
    """
    Runs a verification suite and prints its report as a table or as JSON.

    Parameters:
        args : The parsed arguments with n, suite and json.
        settings : The caps in force.

    Returns:
        0 when every check passes, 1 otherwise.

    Raises:
        errors.ColoredFlipsError: If n is outside 5..cap.
    """
    settings.check(config.Cap.VERIFY, args.n)
    report = verification.run_suite(verification.Suite(args.suite), args.n)
    print(report.to_json() if args.json else report.to_markdown())
    return 0 if report.passed else 1


def cmd_graph(args: argparse.Namespace, settings: config.Settings) -> int:
    """
    Prints the flip graph in DOT or JSON.

    Parameters:
        args : The parsed arguments with n, format, oriented and labels.
        settings : The caps in force.

    Returns:
        The exit status 0.

    Raises:
        errors.ColoredFlipsError: If n is outside 5..cap.
    """
    settings.check(config.Cap.GRAPH, args.n)
    print(export.render_graph(args.n, export.GraphFormat(args.format),
                              args.oriented, export.Labels(args.labels)))
    return 0


def count_dn(n: int, method: Method) -> int:
    """The number of geodesics from the canonical star to its reverse."""
    if method is Method.FORMULA:
        return tableaux.d_formula(n)
    if method is Method.TABLEAUX:
        return 2 * tableaux.count_syt(tableaux.make_shape(n - 3))
    graph = flipgraph.build(n)
    start = codec.encode(polygon.canonical_star(n))
    return sum(1 for _ in flipgraph.enumerate_geodesics(
        graph, start, codec.reverse_code(start)))


def cmd_dn(args: argparse.Namespace, settings: config.Settings) -> int:
    """
    Prints the number of geodesics from the canonical star to its reverse.

    Parameters:
        args : The parsed arguments with n, method and json.
        settings : The caps in force per method.

    Returns:
        The exit status 0.

    Raises:
        errors.ColoredFlipsError: If n is outside the range of the method.
    """
    method = Method(args.method)
    settings.check(DN_CAPS[method], args.n)
    d: int = count_dn(args.n, method)
    print(export.dumps({"n": args.n, "method": method.value, "d": d})
          if args.json else d)
    return 0


def cmd_geodesics(args: argparse.Namespace,
                  settings: config.Settings) -> int:
    """
    Prints the geodesics from a code to its reverse as JSON lines, closed by
    a count line. Plus geodesics from the canonical star can carry their
    tableau.

    Parameters:
        args : The parsed arguments with n, direction, start and tableaux.
        settings : The caps in force.

    Returns:
        The exit status 0.

    Raises:
        errors.DomainError: If the start belongs to another polygon, or
        tableaux are asked for another start than the canonical star.
    """
    settings.check(config.Cap.DN_ENUMERATE, args.n)
    start: codec.Code = args.start or codec.encode(
        polygon.canonical_star(args.n))
    if start.n != args.n:
        raise errors.DomainError(
            f"The code {start} belongs to the {start.n}-gon, not the"
            f" {args.n}-gon.")
    if args.tableaux and start != codec.encode(
            polygon.canonical_star(args.n)):
        raise errors.DomainError(
            "Tableaux describe the geodesics from the canonical star only.")
    graph = flipgraph.build(args.n)
    count: int = 0
    for path in flipgraph.enumerate_geodesics(
            graph, start, codec.reverse_code(start),
            flipgraph.Direction(args.direction)):
        record: typing.Dict[str, typing.Any] = path.to_dict()
        if args.tableaux and path.direction is flipgraph.Direction.PLUS:
            record["tableau"] = tableaux.geodesic_to_tableau(
                path.diagonals).to_dict()
        print(export.dumps(record))
        count += 1
    print(export.dumps({"count": count, "n": args.n}))
    return 0


COMMANDS: typing.Dict[str, typing.Callable[
        [argparse.Namespace, config.Settings], int]] = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "graph": cmd_graph,
    "dn": cmd_dn,
    "geodesics": cmd_geodesics,
}


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Parses the arguments, configures logging and runs one command.

    Parameters:
        argv : The arguments, sys.argv[1:] when None.

    Returns:
        The exit status.
    """
    parser = build_parser()
    try:
        args: argparse.Namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        settings = config.load_settings(args.config)
    except (errors.ColoredFlipsError, OSError) as exc:
        print(f"coloredflips: {exc}", file=sys.stderr)
        return 1
    configure_logging(args.verbose, args.log_file, settings.log_level)
    logger.debug(f"Running {args.command} with {vars(args)}.")
    try:
        return COMMANDS[args.command](args, settings)
    except errors.ColoredFlipsError as exc:
        logger.info(f"{args.command} refused.")
        print(f"coloredflips: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

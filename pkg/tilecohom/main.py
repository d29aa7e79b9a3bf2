import argparse
import logging
import sys
from typing import List, Sequence

from tilecohom.commands import COMMANDS
from tilecohom.config import settings
from tilecohom.exceptions import TilecohomError, UsageError
from tilecohom.models.reports import CommandResult


class ArgumentParser(argparse.ArgumentParser):
    # los errores de uso pasan por UsageError en lugar de terminar el proceso
    def error(self, message: str):
        raise UsageError(detail=f"{self.prog}: error: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Pattern-equivariant homology, direct limits and hull cohomology of substitution tilings",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(verbose: bool = False):
    level = logging.DEBUG if verbose else settings.LOG_LEVEL
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run_command(argv: Sequence[str]) -> CommandResult:
    """Despachar un subcomando y devolver código de salida y salidas"""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        configure_logging(args.verbose)
        return args.handler(args)
    except TilecohomError as e:
        return CommandResult(exit_code=e.exit_code, stderr=f"{e.detail}\n")
    except SystemExit as e:
        # --help imprime por su cuenta y sale con 0
        return CommandResult(exit_code=e.code if isinstance(e.code, int) else 0)


def main(argv: List[str] = None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

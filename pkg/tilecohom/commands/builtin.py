import argparse

from tilecohom.controllers.tilings import builtin, builtin_names, save_spec
from tilecohom.exceptions import UsageError
from tilecohom.models.reports import CommandResult


def register(subparsers):
    parser = subparsers.add_parser("builtin", help="list or export builtin specs")
    parser.add_argument("action", choices=["list", "show"])
    parser.add_argument("name", nargs="?", choices=builtin_names())
    parser.set_defaults(handler=run)


# Listar o exportar los ejemplos incorporados
def run(args: argparse.Namespace) -> CommandResult:
    """list: un nombre por línea; show: el documento JSON canónico"""
    if args.action == "list":
        return CommandResult(stdout="".join(f"{name}\n" for name in builtin_names()))
    if args.name is None:
        raise UsageError(detail="builtin show needs a spec name")
    return CommandResult(stdout=save_spec(builtin(args.name)))

import argparse

from tilecohom.commands.common import add_json_flag, add_spec_source, emit, load_source
from tilecohom.controllers.tilings import validate_spec
from tilecohom.models.reports import CommandResult
from tilecohom.schemas.results import CheckOut


def register(subparsers):
    parser = subparsers.add_parser("check", help="validate a tiling spec")
    add_spec_source(parser)
    add_json_flag(parser)
    parser.set_defaults(handler=run)


# Validar un spec → exit 0 si pasa
def run(args: argparse.Namespace) -> CommandResult:
    """Validar un spec e informar de todos los fallos"""
    spec = load_source(args)
    report = validate_spec(spec)
    lines = [f"OK {spec.name}"] if report.ok else [f"FAIL {spec.name}"] + [f"  {f}" for f in report.failures]
    document = CheckOut(name=spec.name, ok=report.ok, failures=list(report.failures))
    return emit(args, lines, document, exit_code=0 if report.ok else 1)

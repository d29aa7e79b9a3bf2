import argparse
from pathlib import Path
from typing import List

from pydantic import BaseModel

from tilecohom.config import settings
from tilecohom.controllers.tilings import builtin, builtin_names, load_spec
from tilecohom.exceptions import SpecError, UsageError
from tilecohom.models.reports import CommandResult
from tilecohom.models.tilings import TilingSpec


def add_spec_source(parser: argparse.ArgumentParser):
    """Fuente del spec: una ruta a un documento JSON o --builtin <nombre>"""
    parser.add_argument("path", nargs="?", help="tiling spec JSON document")
    parser.add_argument("--builtin", choices=builtin_names(), help="use a builtin spec")


def add_json_flag(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="emit one JSON document")


def load_source(args: argparse.Namespace) -> TilingSpec:
    """Cargar el spec indicado por los argumentos"""
    if (args.path is None) == (args.builtin is None):
        raise UsageError(detail="Give exactly one of <path> or --builtin <name>")
    if args.builtin is not None:
        return builtin(args.builtin)
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecError(detail=f"{args.path}: {e.strerror}")
    return load_spec(text)


def emit(args: argparse.Namespace, lines: List[str], document: BaseModel, exit_code: int = 0) -> CommandResult:
    """Salida de texto línea a línea o un único documento JSON"""
    if getattr(args, "json", False):
        return CommandResult(exit_code=exit_code, stdout=document.model_dump_json(indent=settings.JSON_INDENT) + "\n")
    return CommandResult(exit_code=exit_code, stdout="".join(f"{line}\n" for line in lines))

import argparse

from tilecohom.commands.common import add_json_flag, emit
from tilecohom.controllers.dirlimit import direct_limit
from tilecohom.controllers.groups import induced_hom, presented_group
from tilecohom.exceptions import UsageError
from tilecohom.models.reports import CommandResult
from tilecohom.schemas.results import LimitOut
from tilecohom.utils.parsing import parse_group, parse_matrix
from tilecohom.utils.rendering import render_group


def register(subparsers):
    parser = subparsers.add_parser("limit", help="ad-hoc stationary direct limit")
    parser.add_argument("--group", required=True, help='group such as "Z + Z/2 + Z/3"')
    parser.add_argument("--matrix", required=True, help='endomorphism rows, e.g. "4,0,0;1,1,0;0,0,1"')
    add_json_flag(parser)
    parser.set_defaults(handler=run)


# Límite directo de (G, φ) dados en la línea de comandos
def run(args: argparse.Namespace) -> CommandResult:
    """Clasificar lim(G, φ); la matriz actúa sobre los generadores tal como se escribieron"""
    orders = parse_group(args.group)
    matrix = parse_matrix(args.matrix)
    if matrix.shape != (len(orders), len(orders)):
        raise UsageError(
            detail=f"Matrix is {matrix.rows}x{matrix.cols} but the group has {len(orders)} generators"
        )

    pres = presented_group(orders)
    units = [[1 if i == j else 0 for i in range(len(orders))] for j in range(len(orders))]
    endo = induced_hom(pres, units, matrix.columns())
    group = direct_limit(pres.structure, endo)

    rendered = render_group(group)
    lines = [f"lim = {rendered}", f"status: {group.status}"]
    lines += [f"note: {note}" for note in group.notes]
    document = LimitOut(
        group=rendered,
        status=group.status,
        free_summands=[[m, r] for m, r in group.free_summands],
        torsion=render_group(group.torsion),
        p_divisible_ranks={str(p): r for p, r in group.p_divisible_ranks},
        notes=list(group.notes),
    )
    return emit(args, lines, document)

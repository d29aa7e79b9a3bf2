import argparse

from tilecohom.commands.common import add_json_flag, add_spec_source, emit, load_source
from tilecohom.controllers.complexes import build_chain_complex, homology, substitution_hom
from tilecohom.controllers.dirlimit import direct_limit
from tilecohom.exceptions import PreconditionError
from tilecohom.models.complexes import RIGID, RIGID_MODIFIED, TRANSLATION
from tilecohom.models.reports import CommandResult
from tilecohom.schemas.results import HomologyGroupOut, HomologyOut
from tilecohom.utils.rendering import render_group

MODE_CHOICES = {"translation": TRANSLATION, "rigid": RIGID, "rigid-modified": RIGID_MODIFIED}


def register(subparsers):
    parser = subparsers.add_parser("homology", help="PE homology of a cell-type complex")
    add_spec_source(parser)
    parser.add_argument("--mode", required=True, choices=list(MODE_CHOICES))
    parser.add_argument("--degree", type=int, help="only this degree")
    parser.add_argument("--limit", action="store_true", help="direct limit under the substitution")
    add_json_flag(parser)
    parser.set_defaults(handler=run)


# Homología (o su límite directo) grado a grado
def run(args: argparse.Namespace) -> CommandResult:
    """Calcular H_k del complejo en el modo pedido"""
    spec = load_source(args)
    mode = MODE_CHOICES[args.mode]
    complex_ = build_chain_complex(spec, mode)
    if args.limit and not spec.is_hierarchical:
        raise PreconditionError(detail=f"Spec '{spec.name}' has no substitution data; --limit needs one")

    degrees = [args.degree] if args.degree is not None else list(range(complex_.top_dim + 1))
    lines = []
    entries = []
    for k in degrees:
        pres = homology(complex_, k)
        if args.limit:
            group = direct_limit(pres.structure, substitution_hom(spec, complex_, k, pres))
            entries.append(HomologyGroupOut(degree=k, group=render_group(group), status=group.status, notes=list(group.notes)))
        else:
            group = pres.structure
            entries.append(HomologyGroupOut(degree=k, group=render_group(group), generators=pres.generator_cycles()))
        lines.append(f"H_{k} = {render_group(group)}")

    document = HomologyOut(name=spec.name, mode=args.mode, limit=args.limit, homology=entries)
    return emit(args, lines, document)

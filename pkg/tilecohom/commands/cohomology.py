import argparse

from tilecohom.commands.common import add_json_flag, add_spec_source, emit, load_source
from tilecohom.controllers.complexes import quotient_homology
from tilecohom.controllers.groups import primary_parts, symmetry_defect
from tilecohom.controllers.spectral import ROTATION_QUOTIENT, hull_cohomology, rigid_hull_cohomology
from tilecohom.models.complexes import TRANSLATION
from tilecohom.models.reports import CommandResult
from tilecohom.schemas.results import CohomologyOut
from tilecohom.utils.rendering import render_group, render_orders

HULL_CHOICES = ("translation", "rotation-quotient", "rigid")


def register(subparsers):
    parser = subparsers.add_parser("cohomology", help="Čech cohomology of a tiling hull")
    add_spec_source(parser)
    parser.add_argument("--hull", required=True, choices=HULL_CHOICES)
    add_json_flag(parser)
    parser.set_defaults(handler=run)


# Cohomología de Čech de la cápsula elegida
def run(args: argparse.Namespace) -> CommandResult:
    """Ȟ^0..Ȟ^D por regradación de la homología PE"""
    spec = load_source(args)
    defect = None
    defect_parts = None
    quotient = None
    if args.hull == "rigid":
        result = rigid_hull_cohomology(spec)
    elif args.hull == "rotation-quotient":
        result = hull_cohomology(spec, ROTATION_QUOTIENT)
        group = symmetry_defect([n for n in spec.vertex_symmetries if n > 1])
        defect = render_group(group)
        defect_parts = render_orders(primary_parts(group))
        quotient = [render_group(g) for g in quotient_homology(spec)]
    else:
        result = hull_cohomology(spec, TRANSLATION)

    cech = [render_group(g) for g in result.groups]
    lines = [f"H^{n} = {group}" for n, group in enumerate(cech)]
    lines += [f"flag H^{n}: {flag}" for n, flag in sorted(result.extension_flags.items())]
    lines += [f"note: {notice}" for notice in result.notices]
    if defect is not None:
        lines.append(f"symmetry defect = {defect} (primary parts {defect_parts})")
    if quotient is not None:
        lines.append(f"quotient homology = {', '.join(quotient)}")

    document = CohomologyOut(
        name=spec.name,
        hull=args.hull,
        cech=cech,
        flags={str(n): flag for n, flag in sorted(result.extension_flags.items())},
        notices=list(result.notices),
        defect=defect,
        defect_primary_parts=defect_parts,
        quotient_homology=quotient,
    )
    return emit(args, lines, document)

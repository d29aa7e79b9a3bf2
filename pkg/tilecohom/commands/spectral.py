import argparse

from tilecohom.commands.common import add_json_flag, add_spec_source, emit, load_source
from tilecohom.controllers.spectral import spectral_sequence
from tilecohom.models.reports import CommandResult
from tilecohom.schemas.results import D2Out, SpectralOut
from tilecohom.utils.rendering import render_element, render_group

POSITIONS = [(p, q) for q in (1, 0) for p in range(3)]


def register(subparsers):
    parser = subparsers.add_parser("spectral", help="rigid-hull spectral sequence")
    add_spec_source(parser)
    add_json_flag(parser)
    parser.set_defaults(handler=run)


# Sucesión espectral de la cápsula rígida
def run(args: argparse.Namespace) -> CommandResult:
    """Imprimir E², la imagen de d² con su orden, E∞, el vector de Čech y las banderas"""
    spec = load_source(args)
    result = spectral_sequence(spec)

    e2 = {f"{p},{q}": render_group(result.e2[(p, q)]) for p, q in POSITIONS}
    einf = {f"{p},{q}": render_group(result.einf[(p, q)]) for p, q in POSITIONS}
    cech = [render_group(g) for g in result.cohomology.groups]
    order = "infinite" if result.d2_order is None else str(result.d2_order)

    lines = [f"E2[{key}] = {value}" for key, value in e2.items()]
    lines.append(f"d2 = {render_element(result.d2_element)} order {order}")
    lines += [f"Einf[{key}] = {value}" for key, value in einf.items()]
    lines += [f"H^{n} = {group}" for n, group in enumerate(cech)]
    flags = result.cohomology.extension_flags
    lines.append("flags: " + (", ".join(f"H^{n} {flag}" for n, flag in sorted(flags.items())) or "none"))
    lines += [f"note: {notice}" for notice in result.cohomology.notices]

    document = SpectralOut(
        name=spec.name,
        e2=e2,
        d2=D2Out(
            element=result.d2_element.coords,
            rendered=render_element(result.d2_element),
            order=result.d2_order,
        ),
        einf=einf,
        cech=cech,
        flags={str(n): flag for n, flag in sorted(flags.items())},
        notices=list(result.cohomology.notices),
    )
    return emit(args, lines, document)

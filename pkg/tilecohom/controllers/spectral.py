import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tilecohom.controllers.complexes import (
    build_chain_complex,
    chain_class,
    homology,
    substitution_hom,
)
from tilecohom.controllers.dirlimit import direct_limit
from tilecohom.controllers.groups import cokernel_structure, is_automorphism, quotient_by
from tilecohom.exceptions import InconsistentDataError, InternalError, PreconditionError, TilecohomError
from tilecohom.models.complexes import RIGID, RIGID_MODIFIED, TRANSLATION
from tilecohom.models.groups import FgAbelianGroup, GroupElement
from tilecohom.models.matrix import IntMatrix
from tilecohom.models.spectral import (
    ASSUMED_SPLIT,
    HullCohomology,
    SpectralPage,
    SpectralSequenceResult,
)
from tilecohom.models.tilings import TilingSpec

logger = logging.getLogger(__name__)

ROTATION_QUOTIENT = "rotation_quotient"
HULLS = (TRANSLATION, ROTATION_QUOTIENT)


def _require_rigid_2d(spec: TilingSpec):
    if spec.dimension != 2 or spec.geometry_mode != RIGID:
        raise PreconditionError(detail=f"Spec '{spec.name}' must be 2-dimensional and rigid")


# Cadena de enrollamiento
def winding_chain(spec: TilingSpec) -> List[int]:
    """Coeficiente w_v = Σ signo·rotación sobre la vuelta horaria alrededor de cada tipo de vértice"""
    _require_rigid_2d(spec)
    if spec.rotation is None:
        raise PreconditionError(detail=f"Spec '{spec.name}' has no rotation data")

    chain = []
    for vertex in spec.cell_ids(0):
        lap = spec.rotation.vertex_stars.get(vertex)
        if lap is None:
            raise PreconditionError(detail=f"Missing vertex star for '{vertex}'")
        winding = sum((c.sign * spec.rotation.edge_rotations[c.edge] for c in lap), Fraction(0))
        if winding.denominator != 1:
            raise InconsistentDataError(detail=f"Closure violation at vertex '{vertex}': winding {winding}")
        chain.append(int(winding))
    return chain


def direct_sum(groups: Sequence[FgAbelianGroup]) -> FgAbelianGroup:
    """Forma normal de la suma directa"""
    orders = [o for g in groups for o in g.orders]
    return cokernel_structure(IntMatrix.diagonal(orders), len(orders))[0]


def _rigid_context(spec: TilingSpec):
    # las seis presentaciones de la página E², comprobando que la sustitución sea invertible
    _require_rigid_2d(spec)
    rigid = build_chain_complex(spec, RIGID)
    modified = build_chain_complex(spec, RIGID_MODIFIED)
    rigid_pres = [homology(rigid, k) for k in range(3)]
    modified_pres = [homology(modified, k) for k in range(3)]

    if spec.is_hierarchical:
        for complex_, presentations in ((rigid, rigid_pres), (modified, modified_pres)):
            for k, pres in enumerate(presentations):
                omega = substitution_hom(spec, complex_, k, pres)
                if not is_automorphism(omega):
                    raise PreconditionError(detail="non-stationary homology unsupported")
    return rigid, rigid_pres, modified_pres


# Página E²
def e2_page(spec: TilingSpec) -> SpectralPage:
    """Fila q=1: homología del complejo rígido; fila q=0: del complejo modificado"""
    _, rigid_pres, modified_pres = _rigid_context(spec)
    return _page_from(rigid_pres, modified_pres)


def _page_from(rigid_pres, modified_pres) -> SpectralPage:
    entries = {}
    for p in range(3):
        entries[(p, 1)] = rigid_pres[p].structure
        entries[(p, 0)] = modified_pres[p].structure
    return SpectralPage(entries)


# Imagen de d²
def d2_image(spec: TilingSpec) -> Tuple[GroupElement, Optional[int]]:
    """Clase de la cadena de enrollamiento en H_0 y su orden (None si es infinito)"""
    rigid, rigid_pres, _ = _rigid_context(spec)
    sigma = chain_class(rigid, rigid_pres[0], 0, winding_chain(spec))
    return sigma, sigma.order


def _assemble(e_inf: SpectralPage) -> Tuple[List[FgAbelianGroup], Dict[int, str]]:
    # H_n = suma directa de la diagonal p + q = n
    totals = []
    flags = {}
    for n in range(4):
        diagonal = [e_inf[(p, n - p)] for p in range(3) if 0 <= n - p <= 1]
        nonzero = [g for g in diagonal if not g.is_trivial]
        totals.append(direct_sum(nonzero))
        if len(nonzero) >= 2 and any(g.torsion for g in nonzero):
            flags[3 - n] = ASSUMED_SPLIT
    return totals, flags


# Sucesión espectral completa
def spectral_sequence(spec: TilingSpec) -> SpectralSequenceResult:
    """E², d², E∞ y la cohomología de Čech de la cápsula rígida"""
    try:
        rigid, rigid_pres, modified_pres = _rigid_context(spec)
        e2 = _page_from(rigid_pres, modified_pres)
        sigma = chain_class(rigid, rigid_pres[0], 0, winding_chain(spec))

        notices = []
        entries = dict(e2.entries)
        entries[(0, 1)] = quotient_by(e2[(0, 1)], [sigma])
        if sigma.order is not None:
            entries[(2, 0)] = FgAbelianGroup(1)
        else:
            entries[(2, 0)] = FgAbelianGroup()
            notices.append("d2 image has infinite order: E_inf[2,0] = 0")
        e_inf = SpectralPage(entries)

        totals, flags = _assemble(e_inf)
        # Ȟ^{3-n} = H_n
        cohomology = HullCohomology(
            groups=tuple(reversed(totals)),
            extension_flags=flags,
            notices=tuple(notices),
        )
        logger.debug("Rigid hull of '%s': %s", spec.name, cohomology.groups)
        return SpectralSequenceResult(
            e2=e2,
            d2_element=sigma,
            d2_order=sigma.order,
            einf=e_inf,
            cohomology=cohomology,
        )
    except TilecohomError:
        raise
    except Exception as e:
        raise InternalError(detail=f"Error assembling the spectral sequence: {str(e)}")


def rigid_hull_cohomology(spec: TilingSpec) -> HullCohomology:
    """Cohomología de Čech H^0..H^3 de la cápsula rígida"""
    return spectral_sequence(spec).cohomology


# Cápsula por traslaciones o cociente por rotaciones
def hull_cohomology(spec: TilingSpec, hull: str) -> HullCohomology:
    """Ȟ^{d-k} = H_k del complejo por traslaciones o del complejo modificado"""
    if hull == TRANSLATION:
        mode = TRANSLATION
    elif hull == ROTATION_QUOTIENT:
        _require_rigid_2d(spec)
        mode = RIGID_MODIFIED
    else:
        raise PreconditionError(detail=f"Unknown hull '{hull}', expected one of {', '.join(HULLS)}")

    complex_ = build_chain_complex(spec, mode)
    groups = []
    notices = []
    for k in range(spec.dimension + 1):
        pres = homology(complex_, k)
        if spec.is_hierarchical:
            limit = direct_limit(pres.structure, substitution_hom(spec, complex_, k, pres))
            notices.extend(limit.notes)
            groups.append(limit)
        else:
            groups.append(pres.structure)
    return HullCohomology(groups=tuple(reversed(groups)), notices=tuple(notices))

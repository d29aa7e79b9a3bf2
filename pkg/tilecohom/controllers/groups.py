import logging
from typing import List, Optional, Sequence, Tuple

from sympy import factorint

from tilecohom.controllers.exactalg import (
    image_basis,
    kernel_basis,
    smith_normal_form,
    solve_in_lattice,
    unimodular_inverse,
)
from tilecohom.exceptions import InconsistentDataError, PreconditionError, ShapeError
from tilecohom.models.groups import (
    CoordinateMap,
    FgAbelianGroup,
    GroupElement,
    GroupHom,
    SubquotientPresentation,
)
from tilecohom.models.matrix import IntMatrix

logger = logging.getLogger(__name__)


# Estructura de Z^n / <relaciones>
def cokernel_structure(relations: IntMatrix, ambient_rank: int) -> Tuple[FgAbelianGroup, CoordinateMap]:
    """Forma normal del cociente de Z^ambient_rank por el retículo de columnas"""
    if relations.rows != ambient_rank:
        raise ShapeError(detail=f"Relation matrix has {relations.rows} rows, expected {ambient_rank}")
    snf = smith_normal_form(relations)
    factors = snf.invariant_factors
    torsion_rows = tuple(i for i, d in enumerate(factors) if d > 1)
    torsion_orders = tuple(factors[i] for i in torsion_rows)
    free_rows = tuple(range(len(factors), ambient_rank))
    group = FgAbelianGroup(len(free_rows), torsion_orders)
    coordinate_map = CoordinateMap(
        U=snf.U,
        U_inv=unimodular_inverse(snf.U),
        free_rows=free_rows,
        torsion_rows=torsion_rows,
        torsion_orders=torsion_orders,
    )
    return group, coordinate_map


# Homología ker d_k / im d_{k+1}
def homology_presentation(d_k: IntMatrix, d_k1: IntMatrix) -> SubquotientPresentation:
    """Presentar el subcociente ker(d_k)/im(d_k1) con coordenadas canónicas"""
    if d_k.cols != d_k1.rows:
        raise ShapeError(detail=f"Boundary shapes {d_k.shape} and {d_k1.shape} are not composable")
    if not (d_k @ d_k1).is_zero():
        raise PreconditionError(detail="Boundary composition is nonzero: the complex is corrupt")

    cycles = kernel_basis(d_k)
    columns = []
    for j, boundary in enumerate(d_k1.columns()):
        coords = solve_in_lattice(cycles, boundary)
        if coords is None:
            raise PreconditionError(detail=f"Boundary column {j} is not a cycle")
        columns.append(coords)
    in_cycle_coords = IntMatrix.from_columns(columns, cycles.cols)

    structure, coordinate_map = cokernel_structure(in_cycle_coords, cycles.cols)
    logger.debug("Subquotient of rank-%d ambient: %s", d_k.cols, structure)
    return SubquotientPresentation(
        ambient_rank=d_k.cols,
        cycle_basis=cycles,
        boundary_in_cycle_coords=in_cycle_coords,
        structure=structure,
        coordinate_map=coordinate_map,
    )


def presented_group(orders: Sequence[int]) -> SubquotientPresentation:
    """Presentación de Z/o1 + Z/o2 + ... sobre sus generadores dados (orden 0 = Z)"""
    n = len(orders)
    return homology_presentation(IntMatrix.zeros(0, n), IntMatrix.diagonal(list(orders)))


# Clase de homología de un ciclo
def class_of(pres: SubquotientPresentation, cycle: Sequence[int]) -> GroupElement:
    """Coordenadas canónicas de la clase de un ciclo"""
    if len(cycle) != pres.ambient_rank:
        raise ShapeError(detail=f"Chain has length {len(cycle)}, expected {pres.ambient_rank}")
    coords = solve_in_lattice(pres.cycle_basis, list(cycle))
    if coords is None:
        raise PreconditionError(detail=f"Chain {list(cycle)} is not a cycle")
    return pres.structure.element(pres.coordinate_map.canonical(coords))


# Homomorfismo inducido por datos (generador, imagen)
def induced_hom(
    pres: SubquotientPresentation,
    generator_cycles: Sequence[Sequence[int]],
    image_cycles: Sequence[Sequence[int]],
    target: SubquotientPresentation = None,
) -> GroupHom:
    """El único homomorfismo que manda la clase de cada generador a la clase de su imagen"""
    target = target or pres
    if len(generator_cycles) != len(image_cycles):
        raise ShapeError(
            detail=f"{len(generator_cycles)} generator cycles but {len(image_cycles)} image cycles"
        )
    src, dst = pres.structure, target.structure
    k = len(generator_cycles)

    classes = IntMatrix.from_columns([class_of(pres, g).coords for g in generator_cycles], src.ngens)
    images = IntMatrix.from_columns([class_of(target, h).coords for h in image_cycles], dst.ngens)
    system = classes.hstack(src.relation_matrix())

    columns = []
    for j in range(src.ngens):
        unit = [1 if i == j else 0 for i in range(src.ngens)]
        combination = solve_in_lattice(system, unit)
        if combination is None:
            raise InconsistentDataError(detail="Generator cycles fail to generate the homology group")
        columns.append(images.apply(combination[:k]))

    # las relaciones entre generadores deben ir a relaciones
    relations = kernel_basis(system)
    for relation in relations.columns():
        if not dst.element(images.apply(relation[:k])).is_zero:
            raise InconsistentDataError(
                detail=f"Image cycles violate the relation {relation[:k]} among the generators"
            )

    return GroupHom(src, dst, IntMatrix.from_columns(columns, dst.ngens))


def chain_induced_hom(src: SubquotientPresentation, dst: SubquotientPresentation, chain_matrix: IntMatrix) -> GroupHom:
    """Homomorfismo en homología inducido por una aplicación de cadenas"""
    if chain_matrix.shape != (dst.ambient_rank, src.ambient_rank):
        raise ShapeError(
            detail=f"Chain matrix is {chain_matrix.rows}x{chain_matrix.cols}, expected {dst.ambient_rank}x{src.ambient_rank}"
        )
    columns = [class_of(dst, chain_matrix.apply(cycle)).coords for cycle in src.generator_cycles()]
    return GroupHom(src.structure, dst.structure, IntMatrix.from_columns(columns, dst.structure.ngens))


# ---------- Subgrupos, cocientes, núcleos ----------

def _element_columns(group: FgAbelianGroup, elements: Sequence[GroupElement]) -> IntMatrix:
    for x in elements:
        if x.owner != group:
            raise PreconditionError(detail="Element does not belong to the group")
    return IntMatrix.from_columns([x.coords for x in elements], group.ngens)


def quotient_by(group: FgAbelianGroup, elements: Sequence[GroupElement]) -> FgAbelianGroup:
    """Forma normal de group / <elements>"""
    relations = group.relation_matrix().hstack(_element_columns(group, elements))
    return cokernel_structure(relations, group.ngens)[0]


def sublattice_quotient(spanning: IntMatrix, relations: IntMatrix) -> FgAbelianGroup:
    """Forma normal de L / <relations>, con L generado por las columnas de spanning"""
    # relations ⊆ L
    basis = image_basis(spanning)
    columns = []
    for rel in relations.columns():
        coords = solve_in_lattice(basis, rel)
        if coords is None:
            raise InconsistentDataError(detail="Relation outside the sublattice")
        columns.append(coords)
    return cokernel_structure(IntMatrix.from_columns(columns, basis.cols), basis.cols)[0]


def subgroup_structure(group: FgAbelianGroup, elements: Sequence[GroupElement]) -> FgAbelianGroup:
    """Forma normal del subgrupo generado por elements"""
    relations = group.relation_matrix()
    spanning = _element_columns(group, elements).hstack(relations)
    return sublattice_quotient(spanning, relations)


def hom_kernel(hom: GroupHom) -> FgAbelianGroup:
    """Forma normal del núcleo de un homomorfismo"""
    n = hom.domain.ngens
    solutions = kernel_basis(hom.matrix.hstack(hom.codomain.relation_matrix()))
    spanning = solutions.select_rows(range(n)).hstack(hom.domain.relation_matrix())
    return sublattice_quotient(spanning, hom.domain.relation_matrix())


def hom_cokernel(hom: GroupHom) -> FgAbelianGroup:
    """Forma normal del conúcleo de un homomorfismo"""
    images = [hom.codomain.element(col) for col in hom.matrix.columns()]
    return quotient_by(hom.codomain, images)


def is_injective(hom: GroupHom) -> bool:
    return hom_kernel(hom).is_trivial


def is_surjective(hom: GroupHom) -> bool:
    return hom_cokernel(hom).is_trivial


def is_automorphism(hom: GroupHom) -> bool:
    """Un endomorfismo sobreyectivo de un grupo finitamente generado es biyectivo"""
    return hom.is_endomorphism and is_surjective(hom)


# ---------- Bases con nombre ----------

def coordinates_in_basis(basis: Sequence[GroupElement], x: GroupElement) -> Optional[List[int]]:
    """Coeficientes de x en los elementos dados, reducidos módulo el orden de cada uno"""
    group = x.owner
    system = _element_columns(group, basis).hstack(group.relation_matrix())
    solution = solve_in_lattice(system, x.coords)
    if solution is None:
        return None
    coeffs = solution[:len(basis)]
    return [c % b.order if b.order else c for c, b in zip(coeffs, basis)]


def matrix_in_basis(hom: GroupHom, basis: Sequence[GroupElement]) -> IntMatrix:
    """Matriz de un endomorfismo en una base con nombre (columnas = imágenes)"""
    columns = []
    for b in basis:
        coords = coordinates_in_basis(basis, hom.apply(b))
        if coords is None:
            raise PreconditionError(detail="Given elements do not generate the group")
        columns.append(coords)
    return IntMatrix.from_columns(columns, len(basis))


# ---------- Defecto de simetría ----------

def symmetry_defect(orders: Sequence[int]) -> FgAbelianGroup:
    """Suma directa de Z/n sobre las teselaciones simétricas (C_0 / Ĉ_0)"""
    for n in orders:
        if n < 2:
            raise PreconditionError(detail=f"Symmetry order {n} must be at least 2")
    return cokernel_structure(IntMatrix.diagonal(list(orders)), len(orders))[0]


def primary_parts(group: FgAbelianGroup) -> List[int]:
    """Potencias de primos de la descomposición primaria de la torsión"""
    parts = []
    for d in group.torsion:
        parts.extend(p ** e for p, e in factorint(d).items())
    return sorted(parts)

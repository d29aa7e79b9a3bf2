import logging
from typing import List, Sequence

from tilecohom.controllers.dirlimit import direct_limit
from tilecohom.controllers.groups import (
    chain_induced_hom,
    class_of,
    homology_presentation,
    induced_hom,
    is_injective,
    sublattice_quotient,
)
from tilecohom.controllers.exactalg import kernel_basis, solve_in_lattice
from tilecohom.exceptions import InconsistentDataError, PreconditionError, ShapeError
from tilecohom.models.complexes import MODES, RIGID, RIGID_MODIFIED, TRANSLATION, ChainComplex, ChainMap
from tilecohom.models.dirlimit import DirectLimitGroup
from tilecohom.models.groups import FgAbelianGroup, GroupHom, SubquotientPresentation
from tilecohom.models.matrix import IntMatrix
from tilecohom.models.reports import ValidationReport
from tilecohom.models.tilings import CHAIN_MAP, TilingSpec

logger = logging.getLogger(__name__)


def _check_mode(spec: TilingSpec, mode: str):
    if mode not in MODES:
        raise PreconditionError(detail=f"Unknown mode '{mode}', expected one of {', '.join(MODES)}")
    if mode == TRANSLATION:
        if spec.geometry_mode != TRANSLATION:
            raise PreconditionError(detail=f"Spec '{spec.name}' is rigid; translation mode needs a translation spec")
        for k in range(spec.dimension + 1):
            for cell in spec.cells_of(k):
                if cell.symmetry != 1:
                    raise PreconditionError(
                        detail=f"Translation mode requires every symmetry order to be 1 (cell '{cell.id}' has {cell.symmetry})"
                    )
    elif spec.geometry_mode != RIGID:
        raise PreconditionError(detail=f"Mode {mode} requires a rigid spec, '{spec.name}' is {spec.geometry_mode}")


# Construir el complejo de cadenas
def build_chain_complex(spec: TilingSpec, mode: str) -> ChainComplex:
    """Complejo por tipos de celdas en modo translation, rigid o rigid_modified"""
    _check_mode(spec, mode)
    top = spec.dimension

    kept = []
    for k in range(top + 1):
        cells = spec.cells_of(k)
        if mode == TRANSLATION:
            kept.append(tuple(range(len(cells))))
        else:
            # una celda que invierte la orientación no da generador sobre Z
            kept.append(tuple(i for i, c in enumerate(cells) if not c.reverses_orientation))

    scales = []
    for k in range(top + 1):
        cells = spec.cells_of(k)
        scales.append(tuple(cells[i].symmetry if mode == RIGID_MODIFIED else 1 for i in kept[k]))

    boundaries = []
    for k in range(1, top + 1):
        raw = spec.boundary(k).select_rows(kept[k - 1]).select_columns(kept[k])
        if mode == RIGID_MODIFIED:
            rows = []
            for i in range(raw.rows):
                row = []
                for j in range(raw.cols):
                    value = raw[i, j] * scales[k][j]
                    if value % scales[k - 1][i]:
                        face = spec.cells_of(k)[kept[k][j]].id
                        facet = spec.cells_of(k - 1)[kept[k - 1][i]].id
                        raise InconsistentDataError(
                            detail=f"Rescaled boundary entry ({facet}, {face}) in degree {k} is not integral"
                        )
                    row.append(value // scales[k - 1][i])
                rows.append(row)
            raw = IntMatrix.from_rows(rows, raw.cols)
        boundaries.append(raw)

    for k in range(2, top + 1):
        product = boundaries[k - 2] @ boundaries[k - 1]
        if not product.is_zero():
            i, j = next((i, j) for i in range(product.rows) for j in range(product.cols) if product[i, j])
            raise InconsistentDataError(
                detail=f"Boundary composition in degree {k} is nonzero at ({spec.cells_of(k - 2)[kept[k - 2][i]].id}, {spec.cells_of(k)[kept[k][j]].id})"
            )

    labels = []
    for k in range(top + 1):
        cells = spec.cells_of(k)
        labels.append(tuple(
            f"{n}*{cells[i].id}" if n > 1 else cells[i].id
            for i, n in zip(kept[k], scales[k])
        ))

    complex_ = ChainComplex(
        top_dim=top,
        ranks=tuple(len(k_cells) for k_cells in kept),
        boundaries=tuple(boundaries),
        generator_labels=tuple(labels),
        mode=mode,
        kept=tuple(kept),
        scales=tuple(scales),
        cell_counts=tuple(spec.rank(k) for k in range(top + 1)),
    )
    logger.debug("Built %s complex for '%s' with ranks %s", mode, spec.name, complex_.ranks)
    return complex_


# Homología de grado k
def homology(complex_: ChainComplex, k: int) -> SubquotientPresentation:
    """H_k del complejo con coordenadas canónicas"""
    if not 0 <= k <= complex_.top_dim:
        raise PreconditionError(detail=f"Degree {k} out of range 0..{complex_.top_dim}")
    return homology_presentation(complex_.boundary(k), complex_.boundary(k + 1))


# Validar una aplicación de cadenas
def validate_chain_map(f: ChainMap) -> ValidationReport:
    """Comprobar ∂∘f = f∘∂ grado a grado; el informe localiza la primera violación"""
    failures = []
    for k, matrix in sorted(f.matrices.items()):
        expected = (f.target.rank(k), f.source.rank(k))
        if matrix.shape != expected:
            failures.append(f"degree {k}: matrix is {matrix.rows}x{matrix.cols}, expected {expected[0]}x{expected[1]}")
    if failures:
        return ValidationReport(tuple(failures))

    for k, matrix in sorted(f.matrices.items()):
        lower = f.matrices.get(k - 1)
        if lower is None:
            continue
        left = f.target.boundary(k) @ matrix
        right = lower @ f.source.boundary(k)
        if left != right:
            i, j = next((i, j) for i in range(left.rows) for j in range(left.cols) if left[i, j] != right[i, j])
            failures.append(
                f"degree {k}: (∂∘f)[{f.target.generator_labels[k - 1][i]}, {f.source.generator_labels[k][j]}] = {left[i, j]} "
                f"but (f∘∂) gives {right[i, j]}"
            )
            break
    return ValidationReport(tuple(failures))


def inclusion_chain_map(modified: ChainComplex, rigid: ChainComplex) -> ChainMap:
    """Inclusión Ĉ → C: el generador c del complejo modificado es n_c·c"""
    if modified.mode != RIGID_MODIFIED or rigid.mode != RIGID or modified.ranks != rigid.ranks:
        raise PreconditionError(detail="Inclusion needs the modified and rigid complexes of the same spec")
    return ChainMap(
        source=modified,
        target=rigid,
        matrices={k: IntMatrix.diagonal(list(modified.scales[k])) for k in range(modified.top_dim + 1)},
    )


# Homología del cociente C/Ĉ
def quotient_homology(spec: TilingSpec) -> List[FgAbelianGroup]:
    """H_k(C/Ĉ): cadenas con borde en Ĉ, módulo Ĉ_k y los bordes de C"""
    rigid = build_chain_complex(spec, RIGID)
    modified = build_chain_complex(spec, RIGID_MODIFIED)
    inclusion = inclusion_chain_map(modified, rigid)

    groups = []
    for k in range(rigid.top_dim + 1):
        n = rigid.rank(k)
        if n == 0:
            groups.append(FgAbelianGroup())
            continue
        lower = inclusion.matrices[k - 1] if k > 0 else IntMatrix.zeros(0, 0)
        solutions = kernel_basis(rigid.boundary(k).hstack(lower))
        relations = rigid.boundary(k + 1).hstack(inclusion.matrices[k])
        groups.append(sublattice_quotient(solutions.select_rows(range(n)).hstack(relations), relations))

    logger.debug("Quotient homology of '%s': %s", spec.name, groups)
    return groups


def restrict_vector(complex_: ChainComplex, k: int, vector: Sequence[int]) -> List[int]:
    """Pasar de coordenadas de celdas del spec a generadores del complejo"""
    if not 0 <= k <= complex_.top_dim:
        return []
    if len(vector) != complex_.cell_counts[k]:
        raise ShapeError(detail=f"Chain of length {len(vector)} does not fit degree {k}")
    return [vector[i] for i in complex_.kept[k]]


def _restrict_matrix(complex_: ChainComplex, k: int, matrix: IntMatrix) -> IntMatrix:
    return matrix.select_rows(complex_.kept[k]).select_columns(complex_.kept[k])


# Aplicación de sustitución en homología
def substitution_hom(spec: TilingSpec, complex_: ChainComplex, k: int, pres: SubquotientPresentation = None) -> GroupHom:
    """ω_k sobre H_k del complejo, a partir de los datos de sustitución del spec"""
    if spec.substitution is None:
        raise PreconditionError(detail=f"Spec '{spec.name}' has no substitution data")
    pres = pres or homology(complex_, k)

    if complex_.mode == RIGID_MODIFIED:
        return _modified_substitution_hom(spec, complex_, k, pres)

    data = spec.substitution
    if data.kind == CHAIN_MAP:
        if k not in data.chain_map:
            raise PreconditionError(detail=f"substitution.chain_map: missing degree {k}")
        matrix = _restrict_matrix(complex_, k, data.chain_map[k])
        return chain_induced_hom(pres, pres, matrix)

    if k not in data.homology_map:
        raise PreconditionError(detail=f"substitution.homology_map: missing degree {k}")
    entry = data.homology_map[k]
    generators = [restrict_vector(complex_, k, g) for g in entry.generators]
    images = [restrict_vector(complex_, k, h) for h in entry.images]
    return induced_hom(pres, generators, images)


def _modified_substitution_hom(spec: TilingSpec, modified: ChainComplex, k: int, pres: SubquotientPresentation) -> GroupHom:
    # ω̂ = ι⁻¹ ∘ ω ∘ ι, con ι la aplicación inducida por la inclusión Ĉ → C
    rigid = build_chain_complex(spec, RIGID)
    rigid_pres = homology(rigid, k)
    omega = substitution_hom(spec, rigid, k, rigid_pres)
    iota = chain_induced_hom(pres, rigid_pres, inclusion_chain_map(modified, rigid).matrices[k])
    if not is_injective(iota):
        raise PreconditionError(detail=f"Inclusion of the modified complex is not injective on H_{k}")

    system = iota.matrix.hstack(rigid_pres.structure.relation_matrix())
    columns = []
    for g in range(pres.structure.ngens):
        image = omega.apply(iota.apply(pres.structure.generator(g)))
        preimage = solve_in_lattice(system, image.coords)
        if preimage is None:
            raise InconsistentDataError(detail=f"Substitution does not preserve the modified homology in degree {k}")
        columns.append(preimage[:pres.structure.ngens])
    return GroupHom(pres.structure, pres.structure, IntMatrix.from_columns(columns, pres.structure.ngens))


def limit_homology(spec: TilingSpec, mode: str, k: int) -> DirectLimitGroup:
    """lim(H_k, ω_k) para un spec jerárquico"""
    complex_ = build_chain_complex(spec, mode)
    pres = homology(complex_, k)
    omega = substitution_hom(spec, complex_, k, pres)
    return direct_limit(pres.structure, omega)


def chain_class(complex_: ChainComplex, pres: SubquotientPresentation, k: int, chain: Sequence[int]):
    """Clase de homología de una cadena dada en coordenadas de celdas del spec"""
    return class_of(pres, restrict_vector(complex_, k, chain))

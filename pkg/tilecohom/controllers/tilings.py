import logging
from fractions import Fraction
from typing import Dict, List

from pydantic import ValidationError

from tilecohom.config import settings
from tilecohom.controllers.complexes import build_chain_complex, homology, substitution_hom, validate_chain_map
from tilecohom.corpus.builtins import BUILTIN_DOCUMENTS
from tilecohom.exceptions import SpecError, TilecohomError
from tilecohom.models.complexes import ChainMap
from tilecohom.models.matrix import IntMatrix
from tilecohom.models.reports import ValidationReport
from tilecohom.models.tilings import (
    CHAIN_MAP,
    HOMOLOGY_MAP,
    RIGID,
    TRANSLATION,
    CellType,
    HomologyMapData,
    RotationData,
    SubstitutionData,
    TilingSpec,
    VertexCrossing,
)
from tilecohom.schemas.tilings import (
    CellTypeDocument,
    HomologyMapDocument,
    RotationDocument,
    SubstitutionDocument,
    TilingDocument,
    VertexCrossingDocument,
)

logger = logging.getLogger(__name__)


def _format_validation_error(error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"]) or "<document>"
        lines.append(f"{path}: {item['msg']}")
    return "\n".join(lines)


def _degree_keys(mapping: Dict[str, object], path: str, allowed: range) -> Dict[int, object]:
    result = {}
    for key, value in mapping.items():
        if not key.isdigit() or int(key) not in allowed:
            raise SpecError(detail=f"{path}.{key}: degree must be one of {list(allowed)}")
        result[int(key)] = value
    return result


def _matrix(rows: List[List[int]], n_rows: int, n_cols: int, path: str) -> IntMatrix:
    if len(rows) != n_rows:
        raise SpecError(detail=f"{path}: expected {n_rows} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise SpecError(detail=f"{path}.{i}: expected {n_cols} columns, got {len(row)}")
    return IntMatrix.from_rows(rows, n_cols)


def _vector(values: List[int], length: int, path: str) -> tuple:
    if len(values) != length:
        raise SpecError(detail=f"{path}: expected {length} entries, got {len(values)}")
    return tuple(values)


def _rational(text: str, path: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SpecError(detail=f"{path}: '{text}' is not a rational number")
    if str(value) != text:
        raise SpecError(detail=f"{path}: '{text}' is not a reduced fraction (expected '{value}')")
    return value


# Documento -> TilingSpec
def spec_from_document(document: TilingDocument) -> TilingSpec:
    """Convertir un documento validado por el esquema en un TilingSpec, con chequeos de forma"""
    d = document.dimension
    degrees = range(d + 1)
    cells_by_degree = _degree_keys(document.cells, "cells", degrees)
    if sorted(cells_by_degree) != list(degrees):
        raise SpecError(detail=f"cells: expected degrees {list(degrees)}, got {sorted(cells_by_degree)}")

    cells = {}
    seen = set()
    for k in degrees:
        converted = []
        for i, cell in enumerate(cells_by_degree[k]):
            if cell.id in seen:
                raise SpecError(detail=f"cells.{k}.{i}.id: duplicate id '{cell.id}'")
            if cell.symmetry < 1:
                raise SpecError(detail=f"cells.{k}.{i}.symmetry: must be at least 1, got {cell.symmetry}")
            seen.add(cell.id)
            converted.append(CellType(cell.id, k, cell.symmetry, cell.reverses_orientation))
        cells[k] = tuple(converted)

    def rank(k: int) -> int:
        return len(cells.get(k, ()))

    boundaries = {}
    for k, rows in sorted(_degree_keys(document.boundaries, "boundaries", range(1, d + 1)).items()):
        boundaries[k] = _matrix(rows, rank(k - 1), rank(k), f"boundaries.{k}")
    for k in range(1, d + 1):
        if k not in boundaries:
            raise SpecError(detail=f"boundaries: missing degree {k}")

    substitution = None
    if document.substitution is not None:
        substitution = _substitution_from_document(document.substitution, degrees, rank)

    rotation = None
    if document.rotation is not None:
        rotation = _rotation_from_document(document.rotation, cells)

    symmetric = None
    if document.symmetric_tilings is not None:
        for i, n in enumerate(document.symmetric_tilings):
            if n < 2:
                raise SpecError(detail=f"symmetric_tilings.{i}: order must be at least 2, got {n}")
        symmetric = tuple(document.symmetric_tilings)

    return TilingSpec(
        name=document.name,
        dimension=d,
        geometry_mode=document.geometry_mode,
        cells=cells,
        boundaries=boundaries,
        substitution=substitution,
        rotation=rotation,
        symmetric_tilings=symmetric,
    )


def _substitution_from_document(doc: SubstitutionDocument, degrees: range, rank) -> SubstitutionData:
    chain_map = {}
    for k, rows in sorted(_degree_keys(doc.chain_map or {}, "substitution.chain_map", degrees).items()):
        chain_map[k] = _matrix(rows, rank(k), rank(k), f"substitution.chain_map.{k}")

    homology_map = {}
    for k, entry in sorted(_degree_keys(doc.homology_map or {}, "substitution.homology_map", degrees).items()):
        path = f"substitution.homology_map.{k}"
        if len(entry.generators) != len(entry.images):
            raise SpecError(
                detail=f"{path}: {len(entry.generators)} generators but {len(entry.images)} images"
            )
        homology_map[k] = HomologyMapData(
            generators=tuple(_vector(g, rank(k), f"{path}.generators.{i}") for i, g in enumerate(entry.generators)),
            images=tuple(_vector(h, rank(k), f"{path}.images.{i}") for i, h in enumerate(entry.images)),
        )

    if doc.kind == CHAIN_MAP and not chain_map:
        raise SpecError(detail="substitution.chain_map: required when kind is chain_map")
    if doc.kind == HOMOLOGY_MAP and not homology_map:
        raise SpecError(detail="substitution.homology_map: required when kind is homology_map")
    return SubstitutionData(kind=doc.kind, chain_map=chain_map, homology_map=homology_map)


def _rotation_from_document(doc: RotationDocument, cells) -> RotationData:
    vertices = {c.id for c in cells.get(0, ())}
    edges = {c.id for c in cells.get(1, ())}
    faces = {c.id for c in cells.get(2, ())}

    rotations = {}
    for edge, text in doc.edge_rotations.items():
        if edge not in edges:
            raise SpecError(detail=f"rotation.edge_rotations.{edge}: unknown edge")
        rotations[edge] = _rational(text, f"rotation.edge_rotations.{edge}")

    stars = {}
    for vertex, lap in doc.vertex_stars.items():
        if vertex not in vertices:
            raise SpecError(detail=f"rotation.vertex_stars.{vertex}: unknown vertex")
        for i, crossing in enumerate(lap):
            if crossing.edge not in rotations:
                raise SpecError(detail=f"rotation.vertex_stars.{vertex}.{i}.edge: no rotation for edge '{crossing.edge}'")
        stars[vertex] = tuple(VertexCrossing(c.edge, c.sign) for c in lap)

    edge_faces = {}
    for edge, pair in (doc.edge_faces or {}).items():
        if edge not in edges:
            raise SpecError(detail=f"rotation.edge_faces.{edge}: unknown edge")
        if len(pair) != 2 or any(face not in faces for face in pair):
            raise SpecError(detail=f"rotation.edge_faces.{edge}: expected two face ids")
        edge_faces[edge] = (pair[0], pair[1])

    return RotationData(edge_rotations=rotations, vertex_stars=stars, edge_faces=edge_faces)


# TilingSpec -> documento
def document_from_spec(spec: TilingSpec) -> TilingDocument:
    """Documento canónico de un spec (orden de claves fijo)"""
    substitution = None
    if spec.substitution is not None:
        data = spec.substitution
        substitution = SubstitutionDocument(
            kind=data.kind,
            chain_map={str(k): m.to_rows() for k, m in sorted(data.chain_map.items())} or None,
            homology_map={
                str(k): HomologyMapDocument(
                    generators=[list(g) for g in entry.generators],
                    images=[list(h) for h in entry.images],
                )
                for k, entry in sorted(data.homology_map.items())
            } or None,
        )

    rotation = None
    if spec.rotation is not None:
        rotation = RotationDocument(
            edge_rotations={edge: str(value) for edge, value in spec.rotation.edge_rotations.items()},
            vertex_stars={
                vertex: [VertexCrossingDocument(edge=c.edge, sign=c.sign) for c in lap]
                for vertex, lap in spec.rotation.vertex_stars.items()
            },
            edge_faces={edge: list(pair) for edge, pair in spec.rotation.edge_faces.items()} or None,
        )

    return TilingDocument(
        name=spec.name,
        dimension=spec.dimension,
        geometry_mode=spec.geometry_mode,
        cells={
            str(k): [
                CellTypeDocument(id=c.id, symmetry=c.symmetry, reverses_orientation=c.reverses_orientation)
                for c in spec.cells_of(k)
            ]
            for k in range(spec.dimension + 1)
        },
        boundaries={str(k): spec.boundary(k).to_rows() for k in range(1, spec.dimension + 1)},
        substitution=substitution,
        rotation=rotation,
        symmetric_tilings=list(spec.symmetric_tilings) if spec.symmetric_tilings is not None else None,
    )


# Cargar un spec desde texto JSON
def load_spec(text: str) -> TilingSpec:
    """Leer un documento JSON de teselación"""
    try:
        document = TilingDocument.model_validate_json(text)
    except ValidationError as e:
        raise SpecError(detail=_format_validation_error(e))
    return spec_from_document(document)


# Guardar un spec como texto JSON canónico
def save_spec(spec: TilingSpec) -> str:
    """Serializar un spec; dos guardados dan documentos idénticos byte a byte"""
    return document_from_spec(spec).model_dump_json(indent=settings.JSON_INDENT, exclude_none=True) + "\n"


# ---------- Validación ----------

def _built_cells(spec: TilingSpec, k: int) -> List[int]:
    # los complejos rígidos descartan las celdas que invierten la orientación
    cells = spec.cells_of(k)
    if spec.geometry_mode == TRANSLATION:
        return list(range(len(cells)))
    return [i for i, c in enumerate(cells) if not c.reverses_orientation]


def _built_boundary(spec: TilingSpec, k: int) -> IntMatrix:
    return spec.boundary(k).select_rows(_built_cells(spec, k - 1)).select_columns(_built_cells(spec, k))


def _check_boundaries(spec: TilingSpec, failures: List[str]):
    for k in range(2, spec.dimension + 1):
        rows, cols = _built_cells(spec, k - 2), _built_cells(spec, k)
        product = _built_boundary(spec, k - 1) @ _built_boundary(spec, k)
        for i in range(product.rows):
            for j in range(product.cols):
                if product[i, j]:
                    failures.append(
                        f"boundaries.{k - 1}·boundaries.{k}: composition is {product[i, j]} at "
                        f"({spec.cells_of(k - 2)[rows[i]].id}, {spec.cells_of(k)[cols[j]].id}), expected 0"
                    )
                    return


def _check_symmetry(spec: TilingSpec, failures: List[str]):
    if spec.geometry_mode == TRANSLATION:
        for k in range(spec.dimension + 1):
            for cell in spec.cells_of(k):
                if cell.symmetry != 1:
                    failures.append(f"cells.{k}.{cell.id}: translation spec with symmetry order {cell.symmetry}")
        return

    # divisibilidad del complejo modificado: n_v | ∂[v,e]·n_e
    for k in range(1, spec.dimension + 1):
        matrix = spec.boundary(k)
        for i in _built_cells(spec, k - 1):
            facet = spec.cells_of(k - 1)[i]
            for j in _built_cells(spec, k):
                cell = spec.cells_of(k)[j]
                if (matrix[i, j] * cell.symmetry) % facet.symmetry:
                    failures.append(
                        f"boundaries.{k}: entry ({facet.id}, {cell.id}) = {matrix[i, j]} times {cell.symmetry} "
                        f"is not divisible by {facet.symmetry}"
                    )

    if spec.symmetric_tilings is not None:
        expected = sorted(n for n in spec.vertex_symmetries if n > 1)
        if sorted(spec.symmetric_tilings) != expected:
            failures.append(
                f"symmetric_tilings: {sorted(spec.symmetric_tilings)} do not match vertex symmetry orders {expected}"
            )


def _check_substitution(spec: TilingSpec, failures: List[str]):
    data = spec.substitution
    if data is None:
        return
    mode = TRANSLATION if spec.geometry_mode == TRANSLATION else RIGID
    try:
        complex_ = build_chain_complex(spec, mode)
    except TilecohomError:
        return  # ya reportado por los chequeos de borde y simetría

    if data.chain_map:
        raw = ChainMap(complex_, complex_, {
            k: m.select_rows(complex_.kept[k]).select_columns(complex_.kept[k]) for k, m in data.chain_map.items()
        })
        failures.extend(f"substitution.chain_map: {f}" for f in validate_chain_map(raw).failures)

    source = data.chain_map if data.kind == CHAIN_MAP else data.homology_map
    path = f"substitution.{data.kind}"
    for k in range(spec.dimension + 1):
        if k not in source:
            failures.append(f"{path}: missing degree {k}")
            continue
        try:
            substitution_hom(spec, complex_, k, homology(complex_, k))
        except TilecohomError as e:
            failures.append(f"{path}.{k}: {e.detail}")


def _check_rotation(spec: TilingSpec, failures: List[str]):
    rotation = spec.rotation
    if rotation is None:
        return
    if spec.dimension != 2 or spec.geometry_mode != RIGID:
        failures.append("rotation: rotation data needs a 2-dimensional rigid spec")
        return

    edges = spec.cell_ids(1)
    boundary = spec.boundary(1)
    for i, vertex in enumerate(spec.cell_ids(0)):
        lap = rotation.vertex_stars.get(vertex)
        if lap is None:
            failures.append(f"rotation.vertex_stars.{vertex}: missing vertex star")
            continue

        winding = sum((c.sign * rotation.edge_rotations[c.edge] for c in lap), Fraction(0))
        if winding.denominator != 1:
            failures.append(f"rotation.vertex_stars.{vertex}: winding {winding} is not an integer")

        for j, edge in enumerate(edges):
            net = sum(c.sign for c in lap if c.edge == edge)
            if net != boundary[i, j]:
                failures.append(
                    f"rotation.vertex_stars.{vertex}: edge {edge} crossed with net sign {net}, boundary entry is {boundary[i, j]}"
                )

        if rotation.edge_faces and lap:
            # las caras deben encadenarse a lo largo de la vuelta
            steps = []
            for c in lap:
                start, end = rotation.edge_faces.get(c.edge, (None, None))
                steps.append((start, end) if c.sign == 1 else (end, start))
            for n, (step, following) in enumerate(zip(steps, steps[1:] + steps[:1])):
                if step[1] is None or step[1] != following[0]:
                    failures.append(f"rotation.vertex_stars.{vertex}.{n}: faces do not chain around the vertex")
                    break


# Validar un spec completo
def validate_spec(spec: TilingSpec) -> ValidationReport:
    """Enumerar todos los fallos: ∂∂=0, simetrías, sustitución y rotaciones"""
    failures = []
    _check_boundaries(spec, failures)
    _check_symmetry(spec, failures)
    _check_substitution(spec, failures)
    _check_rotation(spec, failures)
    logger.debug("Validated '%s': %d failures", spec.name, len(failures))
    return ValidationReport(tuple(failures))


# ---------- Corpus ----------

def builtin_names() -> List[str]:
    return list(BUILTIN_DOCUMENTS)


def builtin(name: str) -> TilingSpec:
    """Spec del corpus de ejemplos incorporados"""
    document = BUILTIN_DOCUMENTS.get(name)
    if document is None:
        raise SpecError(detail=f"Unknown builtin '{name}', expected one of {', '.join(BUILTIN_DOCUMENTS)}")
    return spec_from_document(TilingDocument.model_validate(document))

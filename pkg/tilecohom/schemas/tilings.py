from pydantic import BaseModel, ConfigDict, StrictBool, StrictInt, StrictStr
from typing import Dict, List, Literal, Optional


class DocumentModel(BaseModel):
    # enteros exactos, sin coerciones ni claves desconocidas
    model_config = ConfigDict(extra="forbid", strict=True)


class CellTypeDocument(DocumentModel):
    id: StrictStr
    symmetry: StrictInt = 1
    reverses_orientation: StrictBool = False


class VertexCrossingDocument(DocumentModel):
    edge: StrictStr
    sign: Literal[1, -1]


class RotationDocument(DocumentModel):
    edge_rotations: Dict[str, StrictStr]
    vertex_stars: Dict[str, List[VertexCrossingDocument]]
    edge_faces: Optional[Dict[str, List[StrictStr]]] = None


class HomologyMapDocument(DocumentModel):
    generators: List[List[StrictInt]]
    images: List[List[StrictInt]]


class SubstitutionDocument(DocumentModel):
    kind: Literal["chain_map", "homology_map"]
    chain_map: Optional[Dict[str, List[List[StrictInt]]]] = None
    homology_map: Optional[Dict[str, HomologyMapDocument]] = None


class TilingDocument(DocumentModel):
    name: StrictStr
    dimension: Literal[1, 2]
    geometry_mode: Literal["translation", "rigid"]
    cells: Dict[str, List[CellTypeDocument]]
    boundaries: Dict[str, List[List[StrictInt]]]
    substitution: Optional[SubstitutionDocument] = None
    rotation: Optional[RotationDocument] = None
    symmetric_tilings: Optional[List[StrictInt]] = None

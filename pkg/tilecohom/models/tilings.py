from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from tilecohom.models.matrix import IntMatrix

TRANSLATION = "translation"
RIGID = "rigid"

CHAIN_MAP = "chain_map"
HOMOLOGY_MAP = "homology_map"


@dataclass(frozen=True)
class CellType:
    id: str
    dimension: int
    symmetry: int = 1
    reverses_orientation: bool = False


@dataclass(frozen=True)
class VertexCrossing:
    """Cruce de una arista durante una vuelta horaria alrededor de un vértice"""
    edge: str
    sign: int


@dataclass(frozen=True)
class RotationData:
    edge_rotations: Dict[str, Fraction]
    vertex_stars: Dict[str, Tuple[VertexCrossing, ...]]
    # arista -> (cara de la que se sale, cara a la que se entra) al cruzarla con signo +1
    edge_faces: Dict[str, Tuple[str, str]] = field(default_factory=dict)


@dataclass(frozen=True)
class HomologyMapData:
    generators: Tuple[Tuple[int, ...], ...]
    images: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SubstitutionData:
    kind: str
    chain_map: Dict[int, IntMatrix] = field(default_factory=dict)
    homology_map: Dict[int, HomologyMapData] = field(default_factory=dict)


@dataclass(frozen=True)
class TilingSpec:
    """Descripción combinatoria de una teselación por tipos de celdas"""
    name: str
    dimension: int
    geometry_mode: str
    cells: Dict[int, Tuple[CellType, ...]]
    boundaries: Dict[int, IntMatrix]
    substitution: Optional[SubstitutionData] = None
    rotation: Optional[RotationData] = None
    symmetric_tilings: Optional[Tuple[int, ...]] = None

    def cells_of(self, k: int) -> Tuple[CellType, ...]:
        return self.cells.get(k, ())

    def rank(self, k: int) -> int:
        return len(self.cells_of(k))

    def cell_ids(self, k: int) -> List[str]:
        return [c.id for c in self.cells_of(k)]

    def boundary(self, k: int) -> IntMatrix:
        """Matriz de borde de grado k (ceros fuera de 1..dimension)"""
        if k in self.boundaries:
            return self.boundaries[k]
        return IntMatrix.zeros(self.rank(k - 1), self.rank(k))

    @property
    def is_hierarchical(self) -> bool:
        return self.substitution is not None

    @property
    def vertex_symmetries(self) -> List[int]:
        return [c.symmetry for c in self.cells_of(0)]

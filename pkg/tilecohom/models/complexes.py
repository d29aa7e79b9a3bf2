from dataclasses import dataclass
from typing import Dict, Tuple

from tilecohom.models.matrix import IntMatrix

TRANSLATION = "translation"
RIGID = "rigid"
RIGID_MODIFIED = "rigid_modified"
MODES = (TRANSLATION, RIGID, RIGID_MODIFIED)


@dataclass(frozen=True)
class ChainComplex:
    """Complejo de cadenas por tipos de celdas, grados 0..top_dim"""
    top_dim: int
    ranks: Tuple[int, ...]
    boundaries: Tuple[IntMatrix, ...]  # boundaries[k-1] va del grado k al k-1
    generator_labels: Tuple[Tuple[str, ...], ...]
    mode: str = TRANSLATION
    # índices de las celdas del spec que sobreviven y su factor de escala n_c
    kept: Tuple[Tuple[int, ...], ...] = ()
    scales: Tuple[Tuple[int, ...], ...] = ()
    cell_counts: Tuple[int, ...] = ()

    def rank(self, k: int) -> int:
        if 0 <= k <= self.top_dim:
            return self.ranks[k]
        return 0

    def boundary(self, k: int) -> IntMatrix:
        if 1 <= k <= self.top_dim:
            return self.boundaries[k - 1]
        return IntMatrix.zeros(self.rank(k - 1), self.rank(k))


@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    matrices: Dict[int, IntMatrix]

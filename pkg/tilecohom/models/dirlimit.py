from dataclasses import dataclass
from typing import Optional, Tuple

from tilecohom.models.groups import FgAbelianGroup
from tilecohom.models.matrix import IntMatrix

EXACT = "exact"
VERIFIED_PROFILE = "verified_profile"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class EventualData:
    """Reducción de (G, φ): límite de la torsión y φ̄ inyectiva sobre el retículo cociente"""
    torsion_limit: FgAbelianGroup
    eventual_kernel: IntMatrix  # base saturada, en coordenadas libres de G
    projection: IntMatrix  # coordenadas libres de G -> coordenadas del retículo cociente
    induced: IntMatrix


@dataclass(frozen=True)
class DirectLimitGroup:
    """Tipo de isomorfismo de lim(G, φ): torsión + suma de Z[1/m]^rango"""
    torsion: FgAbelianGroup
    free_summands: Tuple[Tuple[int, int], ...] = ()
    status: str = EXACT
    lattice_rank: Optional[int] = None
    endo_matrix: Optional[IntMatrix] = None
    p_divisible_ranks: Tuple[Tuple[int, int], ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def free_rank(self) -> int:
        if self.status == UNDETERMINED:
            return self.lattice_rank
        return sum(rank for _, rank in self.free_summands)

    @property
    def is_finitely_generated(self) -> bool:
        return self.status != UNDETERMINED and all(m == 1 for m, _ in self.free_summands)

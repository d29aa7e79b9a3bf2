from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from tilecohom.models.dirlimit import DirectLimitGroup
from tilecohom.models.groups import FgAbelianGroup, GroupElement

ASSUMED_SPLIT = "assumed_split"


@dataclass(frozen=True)
class SpectralPage:
    """Página de la sucesión espectral; las entradas fuera de las dos filas son 0"""
    entries: Dict[Tuple[int, int], FgAbelianGroup]

    def __getitem__(self, position: Tuple[int, int]) -> FgAbelianGroup:
        return self.entries.get(position, FgAbelianGroup())


@dataclass(frozen=True)
class HullCohomology:
    """Cohomología de Čech H^0..H^D de una cápsula"""
    groups: Tuple[Union[FgAbelianGroup, DirectLimitGroup], ...]
    extension_flags: Dict[int, str] = field(default_factory=dict)
    notices: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SpectralSequenceResult:
    e2: SpectralPage
    d2_element: GroupElement
    d2_order: Optional[int]
    einf: SpectralPage
    cohomology: HullCohomology

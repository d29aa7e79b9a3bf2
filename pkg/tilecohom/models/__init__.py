from tilecohom.models.complexes import ChainComplex, ChainMap
from tilecohom.models.dirlimit import DirectLimitGroup, EventualData
from tilecohom.models.groups import (
    CoordinateMap,
    FgAbelianGroup,
    GroupElement,
    GroupHom,
    SubquotientPresentation,
)
from tilecohom.models.matrix import IntMatrix, SnfResult
from tilecohom.models.reports import CommandResult, ValidationReport
from tilecohom.models.spectral import HullCohomology, SpectralPage, SpectralSequenceResult
from tilecohom.models.tilings import (
    CellType,
    HomologyMapData,
    RotationData,
    SubstitutionData,
    TilingSpec,
    VertexCrossing,
)

__all__ = [
    "CellType",
    "ChainComplex",
    "ChainMap",
    "CommandResult",
    "CoordinateMap",
    "DirectLimitGroup",
    "EventualData",
    "FgAbelianGroup",
    "GroupElement",
    "GroupHom",
    "HomologyMapData",
    "HullCohomology",
    "IntMatrix",
    "RotationData",
    "SnfResult",
    "SpectralPage",
    "SpectralSequenceResult",
    "SubquotientPresentation",
    "SubstitutionData",
    "TilingSpec",
    "ValidationReport",
    "VertexCrossing",
]

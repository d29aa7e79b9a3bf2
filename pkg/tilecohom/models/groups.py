import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from tilecohom.exceptions import InconsistentDataError, PreconditionError, ShapeError
from tilecohom.models.matrix import IntMatrix


@dataclass(frozen=True)
class FgAbelianGroup:
    """Grupo abeliano finitamente generado en forma de factores invariantes: Z^r + Z/d1 + ... + Z/dk"""
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ShapeError(detail=f"Negative free rank {self.free_rank}")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ShapeError(detail=f"Torsion factor {d} must be at least 2")
            if i + 1 < len(self.torsion) and self.torsion[i + 1] % d:
                raise ShapeError(detail=f"Torsion factors {self.torsion} do not form a divisibility chain")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def orders(self) -> List[int]:
        """Orden de cada generador canónico (0 para los libres)"""
        return [0] * self.free_rank + list(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def torsion_order(self) -> int:
        return math.prod(self.torsion)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.free_rank, (0,) * len(self.torsion))

    def generator(self, k: int) -> "GroupElement":
        coords = [0] * self.ngens
        coords[k] = 1
        return self.element(coords)

    def element(self, coords: Sequence[int]) -> "GroupElement":
        """Elemento a partir de sus coordenadas canónicas (libres primero, luego torsión)"""
        if len(coords) != self.ngens:
            raise ShapeError(detail=f"Expected {self.ngens} coordinates, got {len(coords)}")
        return GroupElement(self, tuple(coords[:self.free_rank]), tuple(coords[self.free_rank:]))

    def relation_matrix(self) -> IntMatrix:
        """Relaciones de la presentación canónica: una columna d*e_i por factor de torsión"""
        columns = []
        for k, d in enumerate(self.torsion):
            col = [0] * self.ngens
            col[self.free_rank + k] = d
            columns.append(col)
        return IntMatrix.from_columns(columns, self.ngens)


@dataclass(frozen=True)
class GroupElement:
    owner: FgAbelianGroup
    free_coords: Tuple[int, ...]
    torsion_coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.free_coords) != self.owner.free_rank or len(self.torsion_coords) != len(self.owner.torsion):
            raise ShapeError(detail="Element coordinates do not match the group shape")
        object.__setattr__(self, "free_coords", tuple(int(x) for x in self.free_coords))
        object.__setattr__(
            self,
            "torsion_coords",
            tuple(int(x) % d for x, d in zip(self.torsion_coords, self.owner.torsion)),
        )

    @property
    def coords(self) -> List[int]:
        return list(self.free_coords) + list(self.torsion_coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.free_coords) and not any(self.torsion_coords)

    @property
    def order(self) -> Optional[int]:
        """Orden del elemento; None si es de orden infinito"""
        if any(self.free_coords):
            return None
        return math.lcm(1, *(d // math.gcd(d, c) for d, c in zip(self.owner.torsion, self.torsion_coords)))

    def _check_same_owner(self, other: "GroupElement"):
        if other.owner != self.owner:
            raise PreconditionError(detail="Elements belong to different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_owner(other)
        return self.owner.element([a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "GroupElement":
        return self.owner.element([-a for a in self.coords])

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, factor: int) -> "GroupElement":
        return self.owner.element([factor * a for a in self.coords])


@dataclass(frozen=True)
class GroupHom:
    """Homomorfismo sobre coordenadas canónicas (columnas reducidas módulo la torsión del codominio)"""
    domain: FgAbelianGroup
    codomain: FgAbelianGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.ngens, self.domain.ngens):
            raise ShapeError(
                detail=f"Hom matrix is {self.matrix.rows}x{self.matrix.cols}, expected {self.codomain.ngens}x{self.domain.ngens}"
            )
        reduced = [self.codomain.element(col).coords for col in self.matrix.columns()]
        object.__setattr__(self, "matrix", IntMatrix.from_columns(reduced, self.codomain.ngens))

        # cada generador de torsión de orden d debe ir a un elemento anulado por d
        for k, d in enumerate(self.domain.torsion):
            image = self.codomain.element(self.matrix.column(self.domain.free_rank + k))
            if not (d * image).is_zero:
                raise InconsistentDataError(
                    detail=f"Hom is not well defined: torsion generator {k} of order {d} maps to an element not killed by {d}"
                )

    @classmethod
    def identity(cls, group: FgAbelianGroup) -> "GroupHom":
        return cls(group, group, IntMatrix.identity(group.ngens))

    @property
    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    def apply(self, element: GroupElement) -> GroupElement:
        if element.owner != self.domain:
            raise PreconditionError(detail="Element does not belong to the domain")
        return self.codomain.element(self.matrix.apply(element.coords))

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self ∘ inner"""
        if inner.codomain != self.domain:
            raise PreconditionError(detail="Cannot compose: codomain and domain differ")
        return GroupHom(inner.domain, self.codomain, self.matrix @ inner.matrix)


@dataclass(frozen=True)
class CoordinateMap:
    """Cambio de base unimodular que lleva vectores ambiente a coordenadas canónicas"""
    U: IntMatrix
    U_inv: IntMatrix
    free_rows: Tuple[int, ...]
    torsion_rows: Tuple[int, ...]
    torsion_orders: Tuple[int, ...]

    def canonical(self, vector: Sequence[int]) -> List[int]:
        c = self.U.apply(list(vector))
        return [c[i] for i in self.free_rows] + [c[i] % d for i, d in zip(self.torsion_rows, self.torsion_orders)]

    def lift(self, coords: Sequence[int]) -> List[int]:
        """Representante ambiente de un elemento dado en coordenadas canónicas"""
        y = [0] * self.U.rows
        for row, c in zip(self.free_rows + self.torsion_rows, coords):
            y[row] = c
        return self.U_inv.apply(y)


@dataclass(frozen=True)
class SubquotientPresentation:
    """H = ker d_k / im d_{k+1} con coordenadas canónicas fijadas por la SNF"""
    ambient_rank: int
    cycle_basis: IntMatrix
    boundary_in_cycle_coords: IntMatrix
    structure: FgAbelianGroup
    coordinate_map: CoordinateMap = field(repr=False)

    def generator_cycle(self, k: int) -> List[int]:
        """Ciclo ambiente que representa el k-ésimo generador canónico"""
        return self.lift(self.structure.generator(k))

    def generator_cycles(self) -> List[List[int]]:
        return [self.generator_cycle(k) for k in range(self.structure.ngens)]

    def lift(self, element: GroupElement) -> List[int]:
        if element.owner != self.structure:
            raise PreconditionError(detail="Element does not belong to this homology group")
        return self.cycle_basis.apply(self.coordinate_map.lift(element.coords))

import logging
from collections import Counter
from typing import List

from sympy import GF, ZZ, Matrix, isprime, primefactors, symbols
from sympy.polys.matrices import DomainMatrix

from tilecohom.controllers.exactalg import kernel_basis, smith_normal_form, solve_in_lattice, unimodular_inverse
from tilecohom.controllers.groups import subgroup_structure
from tilecohom.exceptions import InternalError, PreconditionError, ShapeError, TilecohomError
from tilecohom.models.dirlimit import (
    EXACT,
    UNDETERMINED,
    VERIFIED_PROFILE,
    DirectLimitGroup,
    EventualData,
)
from tilecohom.models.groups import FgAbelianGroup, GroupHom
from tilecohom.models.matrix import IntMatrix

logger = logging.getLogger(__name__)


def radical(n: int) -> int:
    """Producto de los primos que dividen n (radical(1) = 1)"""
    result = 1
    for p in primefactors(abs(n)):
        result *= p
    return result


def _eventual_torsion_image(group: FgAbelianGroup, endo: GroupHom) -> FgAbelianGroup:
    # φ(T) ⊆ T, así que las imágenes iteradas decrecen; se detiene cuando el orden se estabiliza
    current = [group.generator(group.free_rank + k) for k in range(len(group.torsion))]
    order = group.torsion_order
    while order > 1:
        images = [endo.apply(x) for x in current]
        new_order = subgroup_structure(group, images).torsion_order
        if new_order == order:
            break
        current, order = images, new_order
    return subgroup_structure(group, current)


# Datos eventuales de (G, φ)
def eventual_data(group: FgAbelianGroup, endo: GroupHom) -> EventualData:
    """Límite de la torsión, núcleo eventual y matriz inducida inyectiva"""
    if endo.domain != group or endo.codomain != group:
        raise PreconditionError(detail="Endomorphism domain/codomain does not match the group")

    torsion_limit = _eventual_torsion_image(group, endo)

    f = group.free_rank
    free_block = endo.matrix.select_rows(range(f)).select_columns(range(f))
    kernel = kernel_basis(free_block.power(f))
    k = kernel.cols

    # completar la base saturada del núcleo eventual a una base de Z^f
    change = smith_normal_form(kernel).U
    projection = change.select_rows(range(k, f))
    complement = unimodular_inverse(change).select_columns(range(k, f))
    induced = projection @ free_block @ complement

    logger.debug("Eventual kernel rank %d, torsion limit %s", k, torsion_limit)
    return EventualData(
        torsion_limit=torsion_limit,
        eventual_kernel=kernel,
        projection=projection,
        induced=induced,
    )


# Rango estable módulo p
def stable_rank_mod_p(induced: IntMatrix, p: int) -> int:
    """Rango sobre GF(p) de induced^n, con n la dimensión"""
    if not isprime(p):
        raise PreconditionError(detail=f"{p} is not prime")
    if not induced.is_square():
        raise ShapeError(detail=f"Induced matrix must be square, got {induced.rows}x{induced.cols}")
    n = induced.rows
    if n == 0:
        return 0
    power = induced.power(n)
    rows = [[ZZ(x % p) for x in row] for row in power.to_rows()]
    return DomainMatrix(rows, power.shape, ZZ).convert_to(GF(p)).rank()


def _integer_eigenvalues(induced: IntMatrix) -> List[int]:
    # autovalores con multiplicidad si el polinomio característico se parte en factores lineales enteros
    x = symbols("x")
    _, factors = Matrix(induced.to_rows()).charpoly(x).factor_list()
    eigenvalues = []
    for factor, multiplicity in factors:
        if factor.degree() != 1:
            return None
        a, b = (int(c) for c in factor.all_coeffs())
        if b % a:
            return None
        eigenvalues.extend([-b // a] * multiplicity)
    return eigenvalues


def _is_diagonalizable(induced: IntMatrix, eigenvalues: List[int]) -> bool:
    n = induced.rows
    product = IntMatrix.identity(n)
    for value in sorted(set(eigenvalues)):
        product = product @ (induced - IntMatrix.identity(n).scaled(value))
    return product.is_zero()


def _eigenlattice_index(induced: IntMatrix, eigenvalues: List[int]) -> int:
    """Índice de los autorretículos no unimodulares en su saturación (1 si el límite los separa)"""
    n = induced.rows
    identity = IntMatrix.identity(n)
    values = sorted(set(v for v in eigenvalues if abs(v) != 1))
    if len(values) < 2:
        return 1

    product = identity
    columns = []
    for value in values:
        shifted = induced - identity.scaled(value)
        product = product @ shifted
        columns.extend(kernel_basis(shifted).columns())
    saturated = kernel_basis(product)
    eigenlattice = IntMatrix.from_columns(columns, n)
    coords = IntMatrix.from_columns([solve_in_lattice(saturated, c) for c in columns], saturated.cols)
    index = 1
    for d in smith_normal_form(coords).invariant_factors:
        index *= d
    if index == 1:
        return 1

    # φ̄ nilpotente sobre el cociente finito: la potencia de longitud log2(índice) lo anula
    power = induced.power(index.bit_length())
    if all(solve_in_lattice(eigenlattice, power.apply(b)) is not None for b in saturated.columns()):
        return 1
    return index


# Límite directo estacionario
def direct_limit(group: FgAbelianGroup, endo: GroupHom) -> DirectLimitGroup:
    """Clasificar lim(G, φ) dentro de la clase Z, Z[1/m], torsión finita"""
    try:
        data = eventual_data(group, endo)
        induced = data.induced
        n = induced.rows

        if n == 0:
            return DirectLimitGroup(torsion=data.torsion_limit)

        det = int(Matrix(induced.to_rows()).det())
        if abs(det) == 1:
            return DirectLimitGroup(torsion=data.torsion_limit, free_summands=((1, n),), status=EXACT)

        primes = primefactors(abs(det))
        divisible = {p: n - stable_rank_mod_p(induced, p) for p in primes}

        eigenvalues = _integer_eigenvalues(induced)
        if eigenvalues is None or not _is_diagonalizable(induced, eigenvalues):
            logger.debug("Direct limit undetermined for induced matrix %s", induced)
            return DirectLimitGroup(
                torsion=data.torsion_limit,
                status=UNDETERMINED,
                lattice_rank=n,
                endo_matrix=induced,
                p_divisible_ranks=tuple(sorted(divisible.items())),
            )

        for p in primes:
            expected = sum(1 for value in eigenvalues if value % p == 0)
            if expected != divisible[p]:
                raise InternalError(
                    detail=f"p-divisibility mismatch at p={p}: eigenvalues give {expected}, stable rank gives {divisible[p]}"
                )

        summands = Counter(radical(value) for value in eigenvalues)
        notes = tuple(
            f"Z[1/{abs(value)}] normalized to Z[1/{radical(value)}]"
            for value in sorted(set(abs(v) for v in eigenvalues))
            if value != radical(value)
        )
        index = _eigenlattice_index(induced, eigenvalues)
        if index > 1:
            notes += (f"eigenlattices have index {index}: summands describe p-divisibility, not a splitting",)
        return DirectLimitGroup(
            torsion=data.torsion_limit,
            free_summands=tuple(sorted(summands.items())),
            status=VERIFIED_PROFILE,
            p_divisible_ranks=tuple(sorted(divisible.items())),
            notes=notes,
        )
    except TilecohomError:
        raise
    except Exception as e:
        raise InternalError(detail=f"Error computing direct limit: {str(e)}")


def fg_limit(group: FgAbelianGroup) -> DirectLimitGroup:
    """Un grupo finitamente generado visto como límite de un sistema constante"""
    summands = ((1, group.free_rank),) if group.free_rank else ()
    return DirectLimitGroup(torsion=FgAbelianGroup(0, group.torsion), free_summands=summands)

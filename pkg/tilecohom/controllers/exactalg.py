import logging
from typing import List, Optional, Sequence

from tilecohom.exceptions import PreconditionError, ShapeError
from tilecohom.models.matrix import IntMatrix, SnfResult

logger = logging.getLogger(__name__)


# ---------- Operaciones elementales sobre listas ----------

def _swap_rows(a: List[List[int]], i: int, j: int):
    if i != j:
        a[i], a[j] = a[j], a[i]


def _swap_cols(a: List[List[int]], i: int, j: int):
    if i != j:
        for row in a:
            row[i], row[j] = row[j], row[i]


def _add_row(a: List[List[int]], target: int, source: int, factor: int):
    # fila target += factor * fila source
    if factor:
        src = a[source]
        a[target] = [x + factor * y for x, y in zip(a[target], src)]


def _add_col(a: List[List[int]], target: int, source: int, factor: int):
    if factor:
        for row in a:
            row[target] += factor * row[source]


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _smallest_entry(a: List[List[int]], start: int):
    best = None
    for i in range(start, len(a)):
        for j in range(start, len(a[i])):
            x = a[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


# Forma normal de Smith
def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Calcular U, S, V unimodulares con U·A·V = S y d1 | d2 | ..."""
    m, n = A.rows, A.cols
    a = A.to_rows()
    u = _identity(m)
    v = _identity(n)

    t = 0
    while t < min(m, n):
        best = _smallest_entry(a, t)
        if best is None:
            break
        _, pi, pj = best
        _swap_rows(a, t, pi)
        _swap_rows(u, t, pi)
        _swap_cols(a, t, pj)
        _swap_cols(v, t, pj)

        while True:
            pivot = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // pivot
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // pivot
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                    if a[t][j]:
                        clean = False

            if not clean:
                # restos no nulos: el menor pasa a ser el pivote
                candidates = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                candidates += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, ci, cj = min(candidates)
                _swap_rows(a, t, ci)
                _swap_rows(u, t, ci)
                _swap_cols(a, t, cj)
                _swap_cols(v, t, cj)
                continue

            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    logger.debug("SNF of %dx%d matrix: rank %d", m, n, t)
    return SnfResult(
        U=IntMatrix.from_rows(u, m),
        S=IntMatrix.from_rows(a, n),
        V=IntMatrix.from_rows(v, n),
    )


def rank(A: IntMatrix) -> int:
    return smith_normal_form(A).rank


# Base del núcleo entero
def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Columnas que forman una base del núcleo entero saturado de A"""
    snf = smith_normal_form(A)
    return snf.V.select_columns(range(snf.rank, A.cols))


# Resolver A·x = b sobre los enteros
def solve_in_lattice(A: IntMatrix, b: Sequence[int]) -> Optional[List[int]]:
    """Devolver un x entero con A·x = b, o None si b no está en el retículo de columnas"""
    if len(b) != A.rows:
        raise ShapeError(detail=f"Right-hand side has length {len(b)}, expected {A.rows}")
    snf = smith_normal_form(A)
    c = snf.U.apply(list(b))
    factors = snf.invariant_factors
    y = [0] * A.cols
    for i, d in enumerate(factors):
        if c[i] % d:
            return None
        y[i] = c[i] // d
    if any(c[i] for i in range(len(factors), A.rows)):
        return None
    return snf.V.apply(y)


def image_basis(A: IntMatrix) -> IntMatrix:
    """Base del retículo generado por las columnas de A"""
    snf = smith_normal_form(A)
    return (A @ snf.V).select_columns(range(snf.rank))


def unimodular_inverse(M: IntMatrix) -> IntMatrix:
    """Inversa exacta de una matriz unimodular (si U·M·V = I entonces M⁻¹ = V·U)"""
    if not M.is_square():
        raise ShapeError(detail=f"Cannot invert a {M.rows}x{M.cols} matrix")
    snf = smith_normal_form(M)
    if snf.invariant_factors != [1] * M.rows:
        raise PreconditionError(detail="Matrix is not unimodular")
    return snf.V @ snf.U

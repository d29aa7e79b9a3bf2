import itertools
import math

import pytest

from tilecohom.controllers.dirlimit import (
    direct_limit,
    eventual_data,
    fg_limit,
    radical,
    stable_rank_mod_p,
)
from tilecohom.controllers.exactalg import unimodular_inverse
from tilecohom.exceptions import PreconditionError, ShapeError
from tilecohom.models.dirlimit import EXACT, UNDETERMINED, VERIFIED_PROFILE
from tilecohom.models.groups import FgAbelianGroup, GroupHom
from tilecohom.models.matrix import IntMatrix
from tilecohom.utils.rendering import render_group


def endo(group: FgAbelianGroup, rows) -> GroupHom:
    return GroupHom(group, group, IntMatrix.from_rows(rows, group.ngens))


def free_limit(rows):
    group = FgAbelianGroup(len(rows))
    return direct_limit(group, endo(group, rows))


def test_radical():
    """Test radical de enteros"""
    assert radical(1) == 1
    assert radical(8) == 2
    assert radical(12) == 6
    assert radical(-10) == 10


def test_limit_of_unimodular_is_exact():
    """Test límite de un automorfismo de Z^n"""
    limit = free_limit([[1, 1], [1, 0]])
    assert limit.status == EXACT
    assert render_group(limit) == "Z^2"
    assert limit.is_finitely_generated


def test_limit_of_doubling():
    """Test lim(Z, ×2) = Z[1/2]"""
    limit = free_limit([[2]])
    assert limit.status == VERIFIED_PROFILE
    assert limit.free_summands == ((2, 1),)
    assert limit.p_divisible_ranks == ((2, 1),)
    assert render_group(limit) == "Z[1/2]"
    assert not limit.is_finitely_generated


def test_limit_normalizes_to_radical():
    """Test Z[1/4] se normaliza a Z[1/2] con una nota"""
    limit = free_limit([[4]])
    assert render_group(limit) == "Z[1/2]"
    assert limit.notes == ("Z[1/4] normalized to Z[1/2]",)
    assert free_limit([[6]]).notes == ()
    assert render_group(free_limit([[6]])) == "Z[1/6]"


def test_limit_mixed_eigenvalues():
    """Test autovalores enteros distintos"""
    assert render_group(free_limit([[2, 0], [0, 1]])) == "Z + Z[1/2]"
    assert render_group(free_limit([[2, 0], [0, 3]])) == "Z[1/2] + Z[1/3]"
    assert render_group(free_limit([[2, 0], [0, 2]])) == "Z[1/2]^2"
    assert render_group(free_limit([[-2]])) == "Z[1/2]"


def test_limit_notes_unsplit_eigenlattices():
    """Test autorretículos de índice 5: el perfil lleva una nota; con índice 2 nilpotente, no"""
    limit = free_limit([[2, 1], [0, 7]])
    assert limit.status == VERIFIED_PROFILE
    assert render_group(limit) == "Z[1/2] + Z[1/7]"
    assert limit.notes == ("eigenlattices have index 5: summands describe p-divisibility, not a splitting",)

    limit = free_limit([[2, 1], [0, 4]])
    assert render_group(limit) == "Z[1/2]^2"
    assert limit.notes == ("Z[1/4] normalized to Z[1/2]",)

    # la parte unimodular siempre se separa
    assert free_limit([[2, 0], [1, -1]]).notes == ()


def test_limit_kills_eventual_kernel():
    """Test el núcleo eventual desaparece en el límite"""
    assert render_group(free_limit([[0]])) == "0"
    assert render_group(free_limit([[0, 1], [0, 0]])) == "0"
    assert render_group(free_limit([[2, 0], [1, 0]])) == "Z[1/2]"

    group = FgAbelianGroup(2)
    data = eventual_data(group, endo(group, [[2, 0], [1, 0]]))
    assert data.eventual_kernel.cols == 1
    assert data.induced == IntMatrix.from_rows([[2]])


def test_limit_undetermined_cases():
    """Test bloques no diagonalizables o con autovalores irracionales"""
    limit = free_limit([[2, 1], [0, 2]])
    assert limit.status == UNDETERMINED
    assert limit.free_rank == 2
    assert limit.p_divisible_ranks == ((2, 2),)
    assert render_group(limit) == "lim(Z^2, [[2, 1], [0, 2]])"

    assert free_limit([[1, 1], [1, -1]]).status == UNDETERMINED


def test_limit_with_torsion():
    """Test la torsión del límite es la imagen eventual"""
    Z4 = FgAbelianGroup(0, (4,))
    assert direct_limit(Z4, endo(Z4, [[2]])).torsion.is_trivial
    assert direct_limit(Z4, endo(Z4, [[3]])).torsion == Z4

    group = FgAbelianGroup(1, (2,))
    limit = direct_limit(group, endo(group, [[3, 0], [1, 1]]))
    assert render_group(limit) == "Z[1/3] + Z/2"


def test_eventual_data_checks_domain():
    """Test el endomorfismo debe actuar sobre el grupo dado"""
    Z = FgAbelianGroup(1)
    with pytest.raises(PreconditionError):
        eventual_data(FgAbelianGroup(2), GroupHom.identity(Z))


def well_defined_endo(rng, orders):
    # la columna de un generador de orden d debe ser anulada por d
    columns = []
    for d in orders:
        column = []
        for target in orders:
            step = target // math.gcd(target, d)
            column.append(step * rng.randint(0, target))
        columns.append(column)
    group = FgAbelianGroup(0, tuple(orders))
    return group, GroupHom(group, group, IntMatrix.from_columns(columns, len(orders)))


@pytest.mark.parametrize("orders", [(4,), (12,), (2, 4), (3, 6), (2, 6), (6, 6)])
def test_torsion_limit_brute_force(rng, orders):
    """Test orden de la torsión límite contra la imagen iterada por fuerza bruta"""
    for _ in range(5):
        group, phi = well_defined_endo(rng, orders)
        elements = {tuple(x) for x in itertools.product(*(range(d) for d in orders))}
        for _ in range(8):
            elements = {tuple(phi.apply(group.element(list(x))).coords) for x in elements}
        assert direct_limit(group, phi).torsion.torsion_order == len(elements)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_stable_rank_mod_p_brute_force(rng, p):
    """Test p-divisibilidad: tamaño del núcleo de A^6 módulo p por fuerza bruta"""
    for _ in range(6):
        n = rng.randint(1, 3)
        A = IntMatrix.from_rows([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)], n)
        power = A.power(6)
        count = sum(
            1
            for x in itertools.product(range(p), repeat=n)
            if all(value % p == 0 for value in power.apply(list(x)))
        )
        assert count == p ** (n - stable_rank_mod_p(A, p))


def test_stable_rank_mod_p_preconditions():
    """Test primo y matriz cuadrada"""
    with pytest.raises(PreconditionError):
        stable_rank_mod_p(IntMatrix.identity(2), 4)
    with pytest.raises(ShapeError):
        stable_rank_mod_p(IntMatrix.zeros(2, 3), 2)
    assert stable_rank_mod_p(IntMatrix.zeros(0, 0), 2) == 0


def test_fg_limit():
    """Test un grupo finitamente generado como límite constante"""
    limit = fg_limit(FgAbelianGroup(2, (3,)))
    assert render_group(limit) == "Z^2 + Z/3"
    assert limit.is_finitely_generated


def test_pentagonal_arithmetic():
    """Test lim(Z^2, diag(1,6)) = Z + Z[1/6] y su p-divisibilidad"""
    A = IntMatrix.diagonal([1, 6])
    assert stable_rank_mod_p(A, 2) == 1
    assert stable_rank_mod_p(A, 5) == 2
    limit = free_limit([[1, 0], [0, 6]])
    assert render_group(limit) == "Z + Z[1/6]"
    assert limit.status == VERIFIED_PROFILE
    # misma clase tras un cambio de base unimodular
    assert render_group(free_limit([[1, 0], [5, 6]])) == "Z + Z[1/6]"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_limit_against_preimage_enumeration(rng, unimodular, n):
    """Test p-divisibilidad del límite contra los x/p² con A^6 x ∈ p² Z^n, enumerados a mano"""
    for _ in range(4):
        values = [rng.choice([1, -1, 2, -2, 3, 4, 6]) for _ in range(n)]
        change = unimodular(n)
        A = change @ IntMatrix.diagonal(values) @ unimodular_inverse(change)
        limit = free_limit(A.to_rows())
        assert render_group(limit) == render_group(free_limit(IntMatrix.diagonal(values).to_rows()))

        power = A.power(6)
        for p in (2, 3):
            modulus = p * p
            count = sum(
                1
                for x in itertools.product(range(modulus), repeat=n)
                if all(value % modulus == 0 for value in power.apply(list(x)))
            )
            divisible = sum(rank for m, rank in limit.free_summands if m % p == 0)
            assert count == p ** (2 * divisible)

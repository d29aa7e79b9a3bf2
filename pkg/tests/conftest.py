import copy
import random

import pytest

from tilecohom.controllers.tilings import builtin, spec_from_document
from tilecohom.corpus.builtins import BUILTIN_DOCUMENTS
from tilecohom.main import run_command
from tilecohom.models.matrix import IntMatrix
from tilecohom.schemas.tilings import TilingDocument


@pytest.fixture(scope="function")
def penrose():
    return builtin("penrose-kite-dart")


@pytest.fixture(scope="function")
def fibonacci():
    return builtin("fibonacci")


@pytest.fixture(scope="function")
def triangle_rigid():
    return builtin("triangle-periodic-rigid")


@pytest.fixture(scope="function")
def square_rigid():
    return builtin("square-periodic-rigid")


@pytest.fixture(scope="function")
def document():
    """Copia editable del documento de un ejemplo incorporado"""
    def _document(name: str) -> dict:
        return copy.deepcopy(BUILTIN_DOCUMENTS[name])
    return _document


@pytest.fixture(scope="function")
def spec_from():
    """Construir un TilingSpec a partir de un documento en forma de dict"""
    def _spec_from(doc: dict):
        return spec_from_document(TilingDocument.model_validate(doc))
    return _spec_from


@pytest.fixture(scope="function")
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="function")
def cli():
    """Ejecutar la CLI en proceso"""
    def _cli(*argv: str):
        return run_command(list(argv))
    return _cli


@pytest.fixture(scope="function")
def unimodular(rng):
    """Matrices aleatorias de determinante ±1 hechas con operaciones elementales"""
    def _unimodular(n: int) -> IntMatrix:
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(3 * n):
            if n > 1:
                i, j = rng.sample(range(n), 2)
                factor = rng.randint(-2, 2)
                rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]
            k = rng.randrange(n)
            if rng.random() < 0.3:
                rows[k] = [-a for a in rows[k]]
        rng.shuffle(rows)
        return IntMatrix.from_rows(rows, n)
    return _unimodular

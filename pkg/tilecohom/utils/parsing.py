import re
from typing import List

from tilecohom.exceptions import UsageError
from tilecohom.models.matrix import IntMatrix

_TOKEN = re.compile(r"^Z(?:\^(?P<rank>\d+)|/(?P<order>\d+))?$")


def parse_group(text: str) -> List[int]:
    """Órdenes de los generadores de un grupo escrito como "Z^2 + Z/5" (0 = libre)"""
    text = text.strip()
    if text == "0":
        return []
    orders = []
    for token in text.split("+"):
        token = token.strip()
        match = _TOKEN.match(token)
        if match is None:
            raise UsageError(detail=f"Cannot parse group token '{token}' (expected Z, Z^r or Z/d)")
        if match.group("order") is not None:
            order = int(match.group("order"))
            if order < 1:
                raise UsageError(detail=f"Cyclic order must be positive in '{token}'")
            orders.append(order)
        else:
            orders.extend([0] * int(match.group("rank") or 1))
    return orders


def parse_matrix(text: str) -> IntMatrix:
    """Matriz escrita por filas separadas con ';' y entradas con ',' o espacios"""
    rows = []
    for chunk in text.split(";"):
        entries = [e for e in re.split(r"[,\s]+", chunk.strip()) if e]
        try:
            rows.append([int(e) for e in entries])
        except ValueError:
            raise UsageError(detail=f"Matrix row '{chunk.strip()}' contains a non-integer entry")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise UsageError(detail="Matrix rows have different lengths")
    return IntMatrix.from_rows(rows, width)

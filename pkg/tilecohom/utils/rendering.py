from typing import List, Sequence, Union

from tilecohom.models.dirlimit import UNDETERMINED, DirectLimitGroup
from tilecohom.models.groups import FgAbelianGroup, GroupElement


def _free_token(rank: int, ring: str = "Z") -> str:
    return ring if rank == 1 else f"{ring}^{rank}"


def _torsion_tokens(torsion: Sequence[int]) -> List[str]:
    return [f"Z/{d}" for d in torsion]


def render_group(group: Union[FgAbelianGroup, DirectLimitGroup]) -> str:
    """Cadena canónica: "0", "Z", "Z^r", "Z/d", "Z[1/m]^r" unidos por " + " """
    if isinstance(group, DirectLimitGroup):
        return _render_limit(group)
    tokens = []
    if group.free_rank:
        tokens.append(_free_token(group.free_rank))
    tokens.extend(_torsion_tokens(group.torsion))
    return " + ".join(tokens) or "0"


def _render_limit(group: DirectLimitGroup) -> str:
    tokens = []
    if group.status == UNDETERMINED:
        tokens.append(f"lim(Z^{group.lattice_rank}, {group.endo_matrix})")
    else:
        for m, rank in group.free_summands:
            tokens.append(_free_token(rank, "Z" if m == 1 else f"Z[1/{m}]"))
    tokens.extend(_torsion_tokens(group.torsion.torsion))
    return " + ".join(tokens) or "0"


def render_element(element: GroupElement) -> str:
    return "(" + ", ".join(str(c) for c in element.coords) + ")"


def render_orders(orders: Sequence[int]) -> str:
    """Partes primarias, p. ej. [2, 3] -> "Z/2 + Z/3" """
    return " + ".join(_torsion_tokens(orders)) or "0"

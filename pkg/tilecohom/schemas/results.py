from pydantic import BaseModel
from typing import Dict, List, Optional


class HomologyGroupOut(BaseModel):
    degree: int
    group: str
    status: Optional[str] = None
    generators: Optional[List[List[int]]] = None
    notes: List[str] = []


class HomologyOut(BaseModel):
    name: str
    mode: str
    limit: bool
    homology: List[HomologyGroupOut]


class CohomologyOut(BaseModel):
    name: str
    hull: str
    cech: List[str]
    flags: Dict[str, str] = {}
    notices: List[str] = []
    defect: Optional[str] = None
    defect_primary_parts: Optional[str] = None
    quotient_homology: Optional[List[str]] = None


class D2Out(BaseModel):
    element: List[int]
    rendered: str
    order: Optional[int] = None


class SpectralOut(BaseModel):
    name: str
    e2: Dict[str, str]
    d2: D2Out
    einf: Dict[str, str]
    cech: List[str]
    flags: Dict[str, str] = {}
    notices: List[str] = []


class LimitOut(BaseModel):
    group: str
    status: str
    free_summands: List[List[int]]
    torsion: str
    p_divisible_ranks: Dict[str, int] = {}
    notes: List[str] = []


class CheckOut(BaseModel):
    name: str
    ok: bool
    failures: List[str]

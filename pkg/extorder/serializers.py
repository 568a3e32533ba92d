from typing import List, Optional

from pydantic import BaseModel


class ExtOrderModel(BaseModel):
    n: int
    i: int
    order: int
    method: str
    stabilized: bool


class MiddleExtOrderModel(BaseModel):
    n: int
    order: int
    rank: int
    generator_count: int
    stabilized: bool
    method: str = "snf"


class MuKernelModel(BaseModel):
    n: int
    integral: bool
    trivial: bool
    matrix: Optional[List[List[int]]] = None

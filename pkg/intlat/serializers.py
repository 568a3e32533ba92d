from typing import List

from pydantic import BaseModel


class LatticeModel(BaseModel):
    label: str
    rank: int
    gram: List[List[int]]


class DiscGroupModel(BaseModel):
    orders: List[int]
    q: List[str]


class IsometryModel(BaseModel):
    lattice: str
    matrix: List[List[int]]

    @classmethod
    def from_isometry(cls, isometry):
        return cls(lattice=isometry.lattice.label, matrix=[list(row) for row in isometry.matrix])

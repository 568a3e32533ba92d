from typing import List

from pydantic import BaseModel


class MukaiVectorModel(BaseModel):
    r: int
    c: List[int]
    s: int

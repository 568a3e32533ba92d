from typing import List

from pydantic import BaseModel


class LemmaCheckModel(BaseModel):
    lemma: str
    i: int
    holds: bool
    residual: str


class ConversionModel(BaseModel):
    direction: str
    k: int
    classes: List[str]

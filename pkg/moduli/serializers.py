from typing import List, Optional, Tuple

from pydantic import BaseModel

from mukai.serializers import MukaiVectorModel


class PnModel(BaseModel):
    n: int
    entries: List[Tuple[int, int]]
    count: int


class EmbeddingModel(BaseModel):
    n: int
    complement: MukaiVectorModel
    complement_norm: int
    glue_class: int


class Example7Case(BaseModel):
    degree: int
    w0: List[int]
    w0_norm: int
    matrix: List[List[int]]
    is_isometry: bool
    delta_image: List[int]
    orientation: int
    residual: int
    residual_signed: int
    modulus: int
    in_w: bool
    ext_error: Optional[str] = None


class Example7Report(BaseModel):
    n: int
    cases: List[Example7Case]

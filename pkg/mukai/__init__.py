from .vectors import (
    MukaiVector,
    chi,
    complement_basis,
    dimension,
    embedding_matrix,
    is_effective,
    mukai_pairing,
    orthogonal_complement,
)
from .stability import (
    Comparison,
    HilbertPoly,
    coprime_stability_shortcut,
    gieseker_compare,
    normalizer_from_support,
    subsheaf_comparison,
)

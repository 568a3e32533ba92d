from .pn import PnEntry, count_nonbirational, enumerate_pn, expected_count
from .embeddings import (
    Embedding,
    classify,
    complement_generator,
    complement_vector,
    iota,
    mukai_isometry_from_reflections,
    orbit_invariant,
    same_orbit,
)
from .example7 import example7_report, genus_two_reflection, polarization

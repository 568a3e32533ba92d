from .graded import GradedElem, GradedRing, chern_classes
from .identities import (
    LemmaCheck,
    character_to_chern,
    characters_from_chern,
    chern_ring,
    chern_to_character,
    elementary_from_characters,
    falling_binomial,
    newton_round_trip,
    power_sums,
    psi_minus_sigma,
    psi_ring,
    sigma_bar,
    twist_expansion,
    verify_sigma_linear,
    verify_twist_formula,
    whitney_sum,
)

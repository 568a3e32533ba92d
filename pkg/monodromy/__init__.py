from .reflections import OrientedLattice, orientation_character, reflection, signed_reflection
from .residual import (
    ResidualAction,
    euler_number,
    is_elementary_abelian,
    residual_action,
    residual_orthogonal_group,
    w_index,
)
from .extension import (
    HilbertMukaiPair,
    MembershipResult,
    ext_to_mukai,
    hilb_degree,
    hilbert_mukai_pair,
    in_W,
    mu,
    residual_sign_of_extension,
)
from .pell import fundamental_unit, trace_criterion
from .sampling import sample_roots

from .exceptions import (
    DimensionMismatchError,
    InsufficientGeneratorsError,
    LatticeError,
    NotAnIsometryError,
    NotInWError,
    NotPrimitiveError,
    OutOfRangeError,
    SingularLatticeError,
)
from .lattice import (
    Isometry,
    LatVec,
    Lattice,
    as_array,
    direct_sum,
    e8_negative,
    hilb_lattice,
    hyperbolic_plane,
    is_isometry,
    k3_lattice,
    make_standard,
    mukai_lattice,
    rank_one,
)
from .discriminant import DiscGroup, discriminant_group
from .snf import (
    SmithForm,
    complete_to_unimodular,
    hermite_rows,
    inverse_unimodular,
    invariant_factors,
    kernel_basis,
    snf,
    solve_integral,
)

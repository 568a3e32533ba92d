class LatticeError(ValueError):
    """Base class for every failed precondition in the lattice toolkit."""


class DimensionMismatchError(LatticeError):
    pass


class SingularLatticeError(LatticeError):
    pass


class NotAnIsometryError(LatticeError):
    pass


class NotPrimitiveError(LatticeError):
    pass


class NotInWError(LatticeError):
    """The isometry has no integral extension to the Mukai lattice."""


class InsufficientGeneratorsError(LatticeError):
    pass


class OutOfRangeError(LatticeError):
    pass

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from intlat import (
    DimensionMismatchError,
    LatVec,
    Lattice,
    LatticeError,
    NotPrimitiveError,
    SingularLatticeError,
    k3_lattice,
    kernel_basis,
    mukai_lattice,
)

logger = logging.getLogger(__name__)

_SHORTHAND = re.compile(r"^\(?\s*(-?\d+)\s*,\s*0\s*,\s*(-?\d+)\s*\)?$")


@dataclass(frozen=True)
class MukaiVector:
    """
    A Mukai vector (rank, c1, χ - rank). `c` lives in the K3 lattice unless
    another even lattice is given explicitly.
    """

    r: int
    c: LatVec
    s: int

    def __post_init__(self):
        c = self.c
        if not isinstance(c, LatVec):
            c = LatVec(k3_lattice(), tuple(c))
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "s", int(self.s))

    @classmethod
    def trivial(cls, r, s):
        """(r, 0, s) with c = 0 in the K3 lattice."""
        return cls(r, LatVec(k3_lattice(), (0,) * 22), s)

    @classmethod
    def parse(cls, text):
        match = _SHORTHAND.match(text.strip())
        if not match:
            raise LatticeError(f"Expected a Mukai vector of the form (r,0,s), got {text!r}")
        return cls.trivial(int(match.group(1)), int(match.group(2)))

    @classmethod
    def from_coordinates(cls, coords):
        """Inverse of `coordinates`: Mukai lattice coordinates (r, -s, c...)."""
        coords = tuple(int(x) for x in coords)
        if len(coords) != mukai_lattice().rank:
            raise DimensionMismatchError(f"Expected {mukai_lattice().rank} Mukai coordinates, got {len(coords)}")
        return cls(coords[0], LatVec(k3_lattice(), coords[2:]), -coords[1])

    def coordinates(self):
        """
        Coordinates in the Mukai lattice U + K3. The U-part (r, -s) makes
        the hyperbolic form reproduce -(r·s' + r'·s).
        """
        if self.c.lattice != k3_lattice():
            raise DimensionMismatchError(f"Mukai coordinates need c in K3, got {self.c.lattice.label}")
        return (self.r, -self.s) + self.c.coords

    def pairing(self, other):
        return mukai_pairing(self, other)

    @property
    def chi(self):
        return chi(self)

    @property
    def content(self):
        g = gcd(self.r, self.s)
        for x in self.c.coords:
            g = gcd(g, x)
        return g

    def is_primitive(self):
        return self.content == 1

    def is_zero(self):
        return not self.r and not self.s and self.c.is_zero()

    def __str__(self):
        if self.c.is_zero():
            return f"({self.r},0,{self.s})"
        return f"({self.r},{list(self.c.coords)},{self.s})"

    def to_json(self):
        from .serializers import MukaiVectorModel

        return MukaiVectorModel(r=self.r, c=list(self.c.coords), s=self.s)


def mukai_pairing(v, w):
    """(c_v, c_w) - r_v·s_w - r_w·s_v."""
    if v.c.lattice != w.c.lattice:
        raise DimensionMismatchError(
            f"Mukai vectors over different lattices: {v.c.lattice.label} and {w.c.lattice.label}"
        )
    return v.c.pairing(w.c) - v.r * w.s - w.r * v.s


def chi(v):
    return v.r + v.s


def dimension(v):
    return mukai_pairing(v, v) + 2


def is_effective(v, c_is_effective_divisor):
    """
    Effectiveness of a Mukai vector. Whether c is effective (or zero) is a
    Hodge-theoretic fact the caller supplies.
    """
    c_nonzero = not v.c.is_zero()
    return (
        mukai_pairing(v, v) >= -2
        and v.r >= 0
        and (v.r > 0 or c_is_effective_divisor)
        and (v.r != 0 or c_nonzero or chi(v) > 0)
    )


@lru_cache(maxsize=None)
def complement_basis(v):
    """
    Integral basis of v^⊥ in Mukai coordinates, as a tuple of 23 vectors.

    The basis is the Hermite-reduced SNF kernel of (v, -), reordered so the
    K3 vectors (zero in the two U coordinates) come first. For v = (1,0,1-n)
    this is the K3 basis followed by the class of (1,0,n-1), whose Gram
    matrix is exactly Hilb(n).
    """
    if v.is_zero():
        raise NotPrimitiveError("The zero vector has no orthogonal complement of rank 23")
    if not v.is_primitive():
        raise NotPrimitiveError(f"{v} is divisible by {v.content}")
    if mukai_pairing(v, v) == 0:
        raise SingularLatticeError(f"{v} is isotropic: its complement is degenerate")

    mukai = mukai_lattice()
    row = mukai.dual_image(v.coordinates())
    kernel = kernel_basis([row])
    k3_part = [vec for vec in kernel if not vec[0] and not vec[1]]
    rest = [vec for vec in kernel if vec[0] or vec[1]]
    logger.debug(f"Complement of {v}: {len(k3_part)} K3 vectors, {len(rest)} mixed")
    return tuple(k3_part + rest)


def orthogonal_complement(v):
    basis = complement_basis(v)
    mukai = mukai_lattice()
    gram = [[mukai.pairing(a, b) for b in basis] for a in basis]
    return Lattice(gram, f"{v}^perp")


def embedding_matrix(basis):
    """Columns -> the rows of the 24x23 matrix with those columns."""
    return tuple(tuple(vec[i] for vec in basis) for i in range(len(basis[0])))

"""
The homomorphisms between isometries of the Mukai lattice fixing
w = (1, 0, 1-n) and isometries of w^⊥ = Hilb(n):

    mu(g̃)  = restriction of η̃(g̃)·g̃ to w^⊥
    ext(g) = the isometry of the Mukai lattice restricting to g and sending
             w to ±w, the sign being the residual action of g
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional

from intlat import (
    Isometry,
    LatticeError,
    NotInWError,
    OutOfRangeError,
    as_array,
    hilb_lattice,
    mukai_lattice,
)
from intlat.linalg import inverse, is_integral, to_integers
from mukai import MukaiVector, complement_basis, embedding_matrix, orthogonal_complement

from .reflections import OrientedLattice, orientation_character
from .residual import ResidualAction, residual_action

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HilbertMukaiPair:
    """The Mukai lattice with w = (1,0,1-n) and the stored integral basis E of w^⊥."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise OutOfRangeError(f"n must be at least 2, got {self.n}")

    @cached_property
    def w(self):
        return MukaiVector.trivial(1, 1 - self.n)

    @property
    def w_coords(self):
        return self.w.coordinates()

    @property
    def mukai(self):
        return mukai_lattice()

    @cached_property
    def hilb(self):
        lattice = hilb_lattice(self.n)
        if orthogonal_complement(self.w).gram != lattice.gram:
            raise LatticeError(f"Complement basis of {self.w} does not reproduce Hilb({self.n})")
        return lattice

    @cached_property
    def basis(self):
        return complement_basis(self.w)

    @cached_property
    def embedding(self):
        """24x23 integer matrix E with E·x the Mukai coordinates of x in Hilb(n)."""
        return as_array(embedding_matrix(self.basis))

    @cached_property
    def restriction(self):
        """(EᵀGE)⁻¹·EᵀG: Mukai coordinates of a vector of w^⊥ -> Hilb(n) coordinates."""
        e = self.embedding
        eg = e.T @ self.mukai.matrix
        return as_array(inverse((eg @ e).tolist())) @ eg

    @cached_property
    def glue_inverse(self):
        """[E | w]⁻¹ over the rationals."""
        rows = [list(row) + [w] for row, w in zip(self.embedding.tolist(), self.w_coords)]
        return as_array(inverse(rows))


@lru_cache(maxsize=None)
def hilbert_mukai_pair(n):
    return HilbertMukaiPair(n)


def hilb_degree(lattice):
    """n with lattice == Hilb(n); raises for anything else."""
    if lattice.rank != 23:
        raise LatticeError(f"{lattice.label} is not of the form Hilb(n)")
    n = (2 - lattice.gram[22][22]) // 2
    if n < 2 or lattice != hilb_lattice(n):
        raise LatticeError(f"{lattice.label} is not of the form Hilb(n)")
    return n


def mu(gtilde, n):
    """Restriction of η̃(g̃)·g̃ to w^⊥, as an isometry of Hilb(n)."""
    pair = hilbert_mukai_pair(n)
    if gtilde.lattice != pair.mukai:
        raise LatticeError(f"mu expects an isometry of the Mukai lattice, got {gtilde.lattice.label}")
    if gtilde.apply(pair.w_coords) != pair.w_coords:
        raise LatticeError(f"Isometry does not fix {pair.w}")

    restricted = pair.restriction @ gtilde.array @ pair.embedding
    if not is_integral(restricted.tolist()):
        raise LatticeError("Restriction to the complement is not integral")
    eta = orientation_character(OrientedLattice.standard(pair.mukai), gtilde)
    logger.debug(f"mu on Hilb({n}): orientation character {eta}")
    return Isometry(pair.hilb, [[eta * x for x in row] for row in to_integers(restricted.tolist())])


def ext_to_mukai(g):
    """
    The isometry g̃ of the Mukai lattice with g̃|w^⊥ = g and g̃(w) = ε·w,
    ε = ±1 the residual action of g. Raises NotInWError when g is outside W.
    """
    n = hilb_degree(g.lattice)
    pair = hilbert_mukai_pair(n)
    oriented = OrientedLattice.standard(pair.hilb)
    eta = orientation_character(oriented, g)
    if eta != 1:
        raise NotInWError(f"Isometry reverses the orientation of the positive cone of Hilb({n})")
    residual = residual_action(pair.hilb, g)
    if not residual.is_sign():
        raise NotInWError(
            f"Residual action {residual.signed()} mod {residual.modulus} is not ±1: no integral extension exists"
        )
    epsilon = residual.sign

    images = pair.embedding @ g.array
    target = [list(row) + [epsilon * w] for row, w in zip(images.tolist(), pair.w_coords)]
    gtilde = as_array(target) @ pair.glue_inverse
    if not is_integral(gtilde.tolist()):
        raise NotInWError("Glued isometry is not integral on the Mukai lattice")
    logger.debug(f"Extended isometry of Hilb({n}) with w -> {epsilon}w")
    return Isometry(pair.mukai, to_integers(gtilde.tolist()))


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    orientation: int
    residual: ResidualAction
    extension: Optional[Isometry] = None

    def __bool__(self):
        return self.member


def in_W(oriented, g):
    """
    Membership in the monodromy reflection group: orientation preserving
    with residual action ±1. Members come with their Mukai extension.
    """
    n = hilb_degree(oriented.lattice)
    orientation = orientation_character(oriented, g)
    residual = residual_action(oriented.lattice, g)
    member = orientation == 1 and residual.is_sign()
    extension = ext_to_mukai(g) if member else None
    logger.debug(f"in_W on Hilb({n}): orientation {orientation}, residual {residual.signed()}, member {member}")
    return MembershipResult(member, orientation, residual, extension)


def residual_sign_of_extension(gtilde, n):
    """The ε with g̃(w) = ε·w, for an isometry of the Mukai lattice fixing the line of w."""
    pair = hilbert_mukai_pair(n)
    image = gtilde.apply(pair.w_coords)
    if image == pair.w_coords:
        return 1
    if image == tuple(-x for x in pair.w_coords):
        return -1
    raise LatticeError(f"Isometry does not preserve the line of {pair.w}")

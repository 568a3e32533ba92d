import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from intlat import Isometry, Lattice, LatticeError, NotAnIsometryError, OutOfRangeError
from intlat.linalg import determinant, is_positive_definite

logger = logging.getLogger(__name__)


def signed_reflection(u):
    """
    The isometry x ↦ -sign((u,u))·(x - 2(x,u)/(u,u)·u).

    For (u,u) = -2 this is the reflection in u, for (u,u) = 2 it is minus
    the reflection. The same formula covers vectors of norm ±4 whose
    pairings with the lattice are all even.
    """
    norm = u.norm
    if norm == 0:
        raise OutOfRangeError("Cannot reflect in an isotropic vector")
    gu = u.lattice.dual_image(u.coords)
    sign = 1 if norm < 0 else -1
    scale = Fraction(2, norm)
    size = u.lattice.rank
    matrix = []
    for i in range(size):
        row = []
        for j in range(size):
            entry = sign * (int(i == j) - scale * u.coords[i] * gu[j])
            if entry.denominator != 1:
                raise NotAnIsometryError(f"Reflection in a vector of norm {norm} is not integral on {u.lattice.label}")
            row.append(int(entry))
        matrix.append(row)
    return Isometry(u.lattice, matrix)


def reflection(u):
    """ρ_u for a root u, (u,u) = ±2."""
    if u.norm not in (2, -2):
        raise OutOfRangeError(f"Reflections need (u,u) = ±2, got {u.norm}")
    return signed_reflection(u)


def _hyperbolic_planes(lattice):
    """Index pairs (i, i+1) that span an orthogonal summand with Gram [[0,1],[1,0]]."""
    gram = lattice.gram
    planes = []
    i = 0
    while i + 1 < lattice.rank:
        j = i + 1
        block = (gram[i][i], gram[i][j], gram[j][j])
        isolated = all(gram[i][t] == 0 and gram[j][t] == 0 for t in range(lattice.rank) if t not in (i, j))
        if block == (0, 1, 0) and isolated:
            planes.append((i, j))
            i += 2
        else:
            i += 1
    return planes


@dataclass(frozen=True)
class OrientedLattice:
    """A lattice with an ordered basis of a maximal positive definite subspace."""

    lattice: Lattice
    positive_frame: tuple

    def __post_init__(self):
        frame = tuple(tuple(Fraction(x) for x in vec) for vec in self.positive_frame)
        object.__setattr__(self, "positive_frame", frame)
        if len(frame) != self.lattice.signature[0]:
            raise LatticeError(
                f"{self.lattice.label} has {self.lattice.signature[0]} positive directions, frame has {len(frame)}"
            )
        if not is_positive_definite(self.frame_gram()):
            raise LatticeError(f"Frame of {self.lattice.label} does not span a positive definite subspace")

    @classmethod
    def standard(cls, lattice):
        """Orients by e_i + f_i over the leading hyperbolic planes."""
        return _standard_orientation(lattice)

    def frame_gram(self):
        return [[self.lattice.pairing(a, b) for b in self.positive_frame] for a in self.positive_frame]


@lru_cache(maxsize=None)
def _standard_orientation(lattice):
    positive = lattice.signature[0]
    planes = _hyperbolic_planes(lattice)
    if len(planes) < positive:
        raise LatticeError(f"{lattice.label} has only {len(planes)} hyperbolic planes, need {positive}")
    frame = []
    for i, j in planes[:positive]:
        frame.append(tuple(int(t in (i, j)) for t in range(lattice.rank)))
    return OrientedLattice(lattice, tuple(frame))


def orientation_character(oriented, g):
    """
    Sign of det(Fᵀ·G·g·F) for the positive frame F: whether g followed by
    projection onto span(F) preserves the frame's orientation.
    """
    if g.lattice != oriented.lattice:
        raise LatticeError(f"Isometry of {g.lattice.label} does not act on {oriented.lattice.label}")
    lattice = oriented.lattice
    images = [g.apply(vec) for vec in oriented.positive_frame]
    pairing = [[lattice.pairing(a, b) for b in images] for a in oriented.positive_frame]
    det = determinant(pairing)
    if det == 0:
        raise LatticeError("Degenerate projection of the positive frame")
    return 1 if det > 0 else -1

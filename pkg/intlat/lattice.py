import logging
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

import numpy as np
from sympy import Matrix

from .exceptions import DimensionMismatchError, LatticeError, NotAnIsometryError, OutOfRangeError
from .linalg import signature as form_signature
from .linalg import solve, to_integers

logger = logging.getLogger(__name__)


def freeze(m):
    return tuple(tuple(int(x) for x in row) for row in m)


def as_array(m, dtype=object):
    """Exact numpy view of a matrix: Python ints in an object array."""
    return np.array([list(row) for row in m], dtype=dtype).reshape(len(m), -1 if len(m) else 0)


@dataclass(frozen=True)
class Lattice:
    gram: tuple
    label: str = field(default="L", compare=False)

    def __post_init__(self):
        gram = freeze(self.gram)
        object.__setattr__(self, "gram", gram)
        size = len(gram)
        if any(len(row) != size for row in gram):
            raise DimensionMismatchError(f"Gram matrix of {self.label} is not square")
        for i in range(size):
            if gram[i][i] % 2:
                raise LatticeError(f"{self.label} is not even: gram[{i}][{i}] = {gram[i][i]}")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError(f"Gram matrix of {self.label} is not symmetric at ({i}, {j})")

    @property
    def rank(self):
        return len(self.gram)

    @cached_property
    def matrix(self):
        return as_array(self.gram)

    def pairing(self, x, y):
        x, y = _coords(x), _coords(y)
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionMismatchError(f"Vectors of length {len(x)}, {len(y)} in a rank {self.rank} lattice")
        return sum(x[i] * sum(g * yj for g, yj in zip(self.gram[i], y)) for i in range(self.rank) if x[i])

    def dual_image(self, x):
        """gram·x, the functional (-, x) in dual-basis coordinates."""
        x = _coords(x)
        return tuple(sum(g * xj for g, xj in zip(row, x)) for row in self.gram)

    @cached_property
    def det(self):
        if not self.rank:
            return 1
        return int(Matrix([list(row) for row in self.gram]).det(method="bareiss"))

    @cached_property
    def signature(self):
        positive, negative, _ = form_signature(self.gram)
        return positive, negative

    def vector(self, coords):
        return LatVec(self, tuple(coords))

    def basis_vector(self, i):
        return LatVec(self, tuple(int(i == j) for j in range(self.rank)))

    def identity(self):
        return Isometry(self, tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)))

    def to_json(self):
        from .serializers import LatticeModel

        return LatticeModel(label=self.label, rank=self.rank, gram=[list(row) for row in self.gram])


def _coords(x):
    return x.coords if isinstance(x, LatVec) else tuple(x)


@dataclass(frozen=True)
class LatVec:
    lattice: Lattice
    coords: tuple

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.lattice.rank:
            raise DimensionMismatchError(
                f"Vector of length {len(coords)} does not live in {self.lattice.label} of rank {self.lattice.rank}"
            )

    def pairing(self, other):
        if isinstance(other, LatVec) and other.lattice != self.lattice:
            raise DimensionMismatchError(f"Cannot pair vectors of {self.lattice.label} and {other.lattice.label}")
        return self.lattice.pairing(self.coords, other)

    @property
    def norm(self):
        return self.lattice.pairing(self.coords, self.coords)

    @property
    def content(self):
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g

    def is_primitive(self):
        return self.content == 1

    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        return LatVec(self.lattice, tuple(a + b for a, b in zip(self.coords, _coords(other))))

    def __sub__(self, other):
        return LatVec(self.lattice, tuple(a - b for a, b in zip(self.coords, _coords(other))))

    def __neg__(self):
        return LatVec(self.lattice, tuple(-a for a in self.coords))

    def __rmul__(self, scalar):
        return LatVec(self.lattice, tuple(scalar * a for a in self.coords))


@dataclass(frozen=True)
class Isometry:
    lattice: Lattice
    matrix: tuple

    def __post_init__(self):
        matrix = freeze(self.matrix)
        object.__setattr__(self, "matrix", matrix)
        if not is_isometry(self.lattice, matrix):
            raise NotAnIsometryError(f"Matrix does not preserve the form of {self.lattice.label}")

    @cached_property
    def array(self):
        return as_array(self.matrix)

    @cached_property
    def det(self):
        return int(Matrix([list(row) for row in self.matrix]).det(method="bareiss"))

    def apply(self, x):
        """Image of an integral or rational coordinate vector (or LatVec)."""
        coords = _coords(x)
        image = tuple(sum(m * c for m, c in zip(row, coords)) for row in self.matrix)
        return LatVec(self.lattice, image) if isinstance(x, LatVec) else image

    def compose(self, other):
        """self ∘ other."""
        if other.lattice != self.lattice:
            raise DimensionMismatchError("Isometries of different lattices cannot be composed")
        return Isometry(self.lattice, self.array @ other.array)

    __matmul__ = compose

    def inverse(self):
        # g⁻¹ = G⁻¹·gᵀ·G
        return Isometry(self.lattice, _isometry_inverse(self.lattice, self.matrix))

    def __neg__(self):
        return Isometry(self.lattice, -self.array)

    def is_identity(self):
        return self == self.lattice.identity()


def _isometry_inverse(lattice, matrix):
    g = lattice.matrix
    rhs = (as_array(matrix).T @ g).tolist()
    return to_integers(solve(lattice.gram, rhs))


def is_isometry(lattice, m):
    """True iff mᵀ·gram·m = gram."""
    rows = [list(row) for row in m]
    if len(rows) != lattice.rank or any(len(row) != lattice.rank for row in rows):
        raise DimensionMismatchError(f"Expected a {lattice.rank}x{lattice.rank} matrix for {lattice.label}")
    if not lattice.rank:
        return True
    a = as_array(rows)
    return bool(np.array_equal(a.T @ lattice.matrix @ a, lattice.matrix))


# Building blocks


def hyperbolic_plane():
    return Lattice(((0, 1), (1, 0)), "U")


_E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))


@lru_cache(maxsize=None)
def e8_negative():
    gram = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        gram[i][j] = gram[j][i] = 1
    lattice = Lattice(gram, "E8neg")
    if lattice.det != 1:
        raise LatticeError(f"E8 Dynkin Gram has determinant {lattice.det}")
    return lattice


def rank_one(d):
    return Lattice(((d,),), f"<{d}>")


def direct_sum(a, b, label=None):
    size = a.rank + b.rank
    gram = [[0] * size for _ in range(size)]
    for i in range(a.rank):
        gram[i][:a.rank] = a.gram[i]
    for i in range(b.rank):
        gram[a.rank + i][a.rank:] = b.gram[i]
    return Lattice(gram, label or f"{a.label}+{b.label}")


def _orthogonal_sum(label, *parts):
    result = parts[0]
    for part in parts[1:]:
        result = direct_sum(result, part)
    return Lattice(result.gram, label)


@lru_cache(maxsize=None)
def k3_lattice():
    u, e8 = hyperbolic_plane(), e8_negative()
    return _orthogonal_sum("K3", u, u, u, e8, e8)


@lru_cache(maxsize=None)
def mukai_lattice():
    u = hyperbolic_plane()
    return _orthogonal_sum("Mukai", u, k3_lattice())


@lru_cache(maxsize=None)
def hilb_lattice(n):
    if n < 2:
        raise OutOfRangeError(f"Hilb(n) needs n >= 2, got {n}")
    return direct_sum(k3_lattice(), rank_one(2 - 2 * n), label=f"Hilb({n})")


_HILB_NAME = re.compile(r"^hilb(?:\((-?\d+)\)|:(-?\d+))$", re.IGNORECASE)


def make_standard(name):
    """
    Builds one of U, E8neg, K3, Mukai or Hilb(n).

    The CLI spellings `hilb:N`, `mukai` and `k3` are accepted as well.
    """
    key = name.strip()
    logger.debug(f"Building standard lattice {key}")
    match = _HILB_NAME.match(key)
    if match:
        return hilb_lattice(int(match.group(1) or match.group(2)))
    builders = {
        "u": hyperbolic_plane,
        "e8neg": e8_negative,
        "k3": k3_lattice,
        "mukai": mukai_lattice,
    }
    try:
        return builders[key.lower()]()
    except KeyError:
        raise LatticeError(f"Unknown standard lattice {name!r}") from None

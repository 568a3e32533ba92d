import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .exceptions import LatticeError, SingularLatticeError
from .lattice import Lattice
from .linalg import solve
from .snf import snf

logger = logging.getLogger(__name__)


def reduce_mod_two(q):
    return Fraction(q) % 2


@dataclass(frozen=True)
class DiscGroup:
    """
    The finite group L*/L of a nondegenerate even lattice with its
    Q/2Z-valued quadratic form.

    `lift[i]` is a dual vector (in lattice coordinates) whose class is the
    i-th generator; `coordinate_rows[i]` reads off the i-th coordinate of a
    dual vector x from gram·x, modulo `cyclic_orders[i]`.
    """

    cyclic_orders: tuple
    q_values: tuple
    lift: tuple
    coordinate_rows: tuple = field(repr=False)
    lattice: Lattice = field(repr=False)

    @property
    def order(self):
        return prod(self.cyclic_orders)

    @property
    def is_cyclic(self):
        return len(self.cyclic_orders) <= 1

    @property
    def generator(self):
        if len(self.cyclic_orders) != 1:
            raise LatticeError(f"Discriminant group of {self.lattice.label} has {len(self.cyclic_orders)} generators")
        return self.lift[0]

    def coordinates(self, x):
        """Coordinates of the class of a dual vector x (lattice coordinates, rationals allowed)."""
        y = [Fraction(v) for v in self.lattice.dual_image(x)]
        if any(v.denominator != 1 for v in y):
            raise LatticeError(f"{x} is not in the dual lattice of {self.lattice.label}")
        return tuple(
            int(sum(r * v for r, v in zip(row, y))) % d
            for row, d in zip(self.coordinate_rows, self.cyclic_orders)
        )

    def element(self, coords):
        """A dual vector representing the class with the given coordinates."""
        size = self.lattice.rank
        return tuple(
            sum((Fraction(c) * g[t] for c, g in zip(coords, self.lift)), Fraction(0)) for t in range(size)
        )

    def q(self, x):
        return reduce_mod_two(self.lattice.pairing(x, x))

    def to_json(self):
        from .serializers import DiscGroupModel

        return DiscGroupModel(orders=list(self.cyclic_orders), q=[str(q) for q in self.q_values])


def _canonical_cyclic(lattice, order, row):
    """Last dual-basis vector whose class generates a cyclic group of the given order."""
    for j in reversed(range(lattice.rank)):
        c = row[j] % order
        if gcd(c, order) == 1:
            unit = [int(t == j) for t in range(lattice.rank)]
            lift = tuple(solve(lattice.gram, unit))
            inv = pow(c, -1, order)
            return lift, tuple((inv * r) % order for r in row)
    raise LatticeError(f"No dual basis vector generates the discriminant group of {lattice.label}")


@lru_cache(maxsize=None)
def discriminant_group(lattice):
    """
    Computes L*/L from the Smith form P·gram·Q = diag(d_i).

    The generator x_i = Q[:, i]/d_i satisfies P·gram·x_i = e_i, so the rows
    of P read off coordinates. A cyclic group is presented by the last dual
    basis vector that generates it (δ/(2-2n) for Hilb(n)).
    """
    S, P, Q = snf(lattice.gram)
    diagonal = [S[i][i] for i in range(lattice.rank)]
    if any(d == 0 for d in diagonal):
        raise SingularLatticeError(f"Gram matrix of {lattice.label} is singular")

    nontrivial = [i for i, d in enumerate(diagonal) if d > 1]
    orders = tuple(diagonal[i] for i in nontrivial)
    logger.debug(f"Discriminant group of {lattice.label}: invariant factors {orders}")

    if len(nontrivial) == 1:
        lift, row = _canonical_cyclic(lattice, orders[0], P[nontrivial[0]])
        lifts, rows = (lift,), (row,)
    else:
        lifts = tuple(
            tuple(Fraction(Q[t][i], diagonal[i]) for t in range(lattice.rank)) for i in nontrivial
        )
        rows = tuple(tuple(P[i]) for i in nontrivial)

    q_values = tuple(reduce_mod_two(lattice.pairing(x, x)) for x in lifts)
    return DiscGroup(orders, q_values, lifts, rows, lattice)

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from intlat import Isometry, LatticeError, OutOfRangeError
from monodromy import hilbert_mukai_pair, mu

logger = logging.getLogger(__name__)


def _check_range(n, i):
    if n < 3 or i < 2 or 2 * i > n + 2:
        raise OutOfRangeError(f"Need n >= 3 and 2 <= i <= (n+2)/2, got n={n}, i={i}")


def master_order(n, i):
    """
    r(n, i) = (2n-2)/gcd(i-1, 2n-2) for 3 <= i <= (n+2)/2; for i = 2 it is
    2n-2 when n is odd and n-1 when n is even.
    """
    _check_range(n, i)
    modulus = 2 * n - 2
    if i == 2:
        order = modulus if n % 2 else n - 1
    else:
        order = modulus // gcd(i - 1, modulus)
    if order < 3:
        raise LatticeError(f"Order {order} for n={n}, i={i} is below 3")
    return order


def master_order_table(n):
    """[(i, r(n, i))] over the admissible range of i."""
    if n < 3:
        raise OutOfRangeError(f"Need n >= 3, got {n}")
    return [(i, master_order(n, i)) for i in range(2, (n + 2) // 2 + 1)]


@dataclass(frozen=True)
class MuKernel:
    n: int
    integral: bool
    trivial: bool
    element: Optional[Isometry] = None

    def to_json(self):
        from .serializers import MuKernelModel

        matrix = [list(row) for row in self.element.matrix] if self.element else None
        return MuKernelModel(n=self.n, integral=self.integral, trivial=self.trivial, matrix=matrix)


def mu_kernel(n):
    """
    Tries g(x) = -x + 2(x,w)/(w,w)·w on the Mukai lattice, the candidate
    generator of ker mu: it fixes w and is -id on w^⊥. It is integral only
    when (w,w) divides 2, i.e. for n = 2.
    """
    pair = hilbert_mukai_pair(n)
    lattice, w = pair.mukai, pair.w_coords
    norm = lattice.pairing(w, w)
    gw = lattice.dual_image(w)
    size = lattice.rank
    entries = [
        [Fraction(2 * w[i] * gw[j], norm) - int(i == j) for j in range(size)]
        for i in range(size)
    ]
    if any(x.denominator != 1 for row in entries for x in row):
        logger.debug(f"mu kernel candidate for n={n} is not integral")
        return MuKernel(n, integral=False, trivial=True)

    element = Isometry(lattice, [[int(x) for x in row] for row in entries])
    if not mu(element, n).is_identity():
        raise LatticeError(f"Kernel candidate for n={n} does not restrict to the identity")
    logger.debug(f"mu has kernel of order 2 for n={n}")
    return MuKernel(n, integral=True, trivial=False, element=element)

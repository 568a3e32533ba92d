import logging
from dataclasses import dataclass
from math import gcd

from sympy import divisors

from intlat import OutOfRangeError
from monodromy import euler_number
from mukai import MukaiVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PnEntry:
    """A coprime factorization r·s = 1-n with -s >= r > 0."""

    r: int
    s: int

    def __post_init__(self):
        if not 0 < self.r <= -self.s:
            raise OutOfRangeError(f"Need -s >= r > 0, got (r, s) = ({self.r}, {self.s})")
        if gcd(self.r, self.s) != 1:
            raise OutOfRangeError(f"({self.r}, {self.s}) is not coprime")

    @property
    def n(self):
        return 1 - self.r * self.s

    @property
    def complement(self):
        """(r,0,s), spanning the complement of the image of ι_{r,s}."""
        return MukaiVector.trivial(self.r, self.s)

    @property
    def delta_image(self):
        """(r,0,-s), the image of (1,0,n-1) under ι_{r,s}."""
        return MukaiVector.trivial(self.r, -self.s)

    def check(self, n):
        if self.n != n:
            raise OutOfRangeError(f"r·s = {self.r * self.s} but 1-n = {1 - n}")

    def as_pair(self):
        return (self.r, self.s)


def enumerate_pn(n):
    """All (r, s) with r·s = 1-n, gcd(r, s) = 1 and -s >= r > 0, ascending in r."""
    if n < 2:
        raise OutOfRangeError(f"P_n needs n >= 2, got {n}")
    m = n - 1
    entries = [PnEntry(r, -(m // r)) for r in divisors(m) if r * r <= m and gcd(r, m // r) == 1]
    logger.debug(f"P_{n} has {len(entries)} entries")
    return entries


def expected_count(n):
    """2^(ρ(n-1)-1), with ρ the number of distinct primes; 1 for n = 2."""
    return 2 ** max(euler_number(n - 1) - 1, 0)


def count_nonbirational(n):
    return len(enumerate_pn(n))

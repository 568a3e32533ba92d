import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from intlat import OutOfRangeError

logger = logging.getLogger(__name__)


class Comparison(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def normalizer_from_support(r, h2, h_c1, c2, support_dim):
    """l0 of a sheaf: r·h² for positive rank, h·c1 on curves, -c2 on points."""
    if r > 0:
        return r * h2
    if support_dim == 1:
        return h_c1
    if support_dim == 0:
        return -c2
    raise OutOfRangeError(f"A rank zero sheaf has support of dimension 0 or 1, got {support_dim}")


@dataclass(frozen=True)
class HilbertPoly:
    """P(n) = a2·n² + a1·n + a0 with its normalizer l0."""

    a2: Fraction
    a1: Fraction
    a0: Fraction
    l0: int

    def __post_init__(self):
        for name in ("a2", "a1", "a0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_sheaf_data(cls, r, h2, h_c1, c1_sq, c2, support_dim=2):
        """Riemann-Roch on a K3 surface with polarization h, (h,h) = h2."""
        return cls(
            a2=Fraction(r * h2, 2),
            a1=Fraction(h_c1),
            a0=Fraction(c1_sq - 2 * c2, 2) + 2 * r,
            l0=normalizer_from_support(r, h2, h_c1, c2, support_dim),
        )

    def __call__(self, n):
        return self.a2 * n * n + self.a1 * n + self.a0

    def reduced(self):
        if self.l0 <= 0:
            raise OutOfRangeError(f"Normalizer l0 must be positive, got {self.l0}")
        return (self.a2 / self.l0, self.a1 / self.l0, self.a0 / self.l0)


def gieseker_compare(p, q):
    """
    Compares p/l0(p) with q/l0(q) by eventual domination, i.e.
    lexicographically from the leading coefficient down.
    """
    left, right = p.reduced(), q.reduced()
    if left < right:
        return Comparison.LESS
    if left > right:
        return Comparison.GREATER
    return Comparison.EQUAL


def coprime_stability_shortcut(v):
    """
    True when v = (r, 0, s) has r > 0 and gcd(r, r + s) = 1.

    A subsheaf with the same normalized Hilbert polynomial then has the same
    rank and Euler characteristic, so semistable sheaves of class v are
    stable.
    """
    if not v.c.is_zero():
        return False
    return v.r > 0 and gcd(v.r, v.r + v.s) == 1


def subsheaf_comparison(v, sub_rank, sub_chi, h2):
    """
    Compares a subsheaf with trivial c1·h (rank `sub_rank`, Euler
    characteristic `sub_chi`) against a sheaf of class v = (r, 0, s).
    """
    whole = HilbertPoly(Fraction(v.r * h2, 2), 0, v.r + v.s, v.r * h2)
    part = HilbertPoly(Fraction(sub_rank * h2, 2), 0, sub_chi, sub_rank * h2)
    result = gieseker_compare(part, whole)
    logger.debug(f"Subsheaf (rank {sub_rank}, chi {sub_chi}) of {v} compares {result.value}")
    return result

import logging
from dataclasses import dataclass

from sympy import primefactors
from sympy.ntheory import sqrt_mod

from intlat import DimensionMismatchError, OutOfRangeError, discriminant_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidualAction:
    """Multiplication by `multiplier` on a cyclic discriminant group of order `modulus`."""

    multiplier: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise OutOfRangeError(f"Residual modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "multiplier", self.multiplier % self.modulus)

    def is_sign(self):
        return (self.multiplier - 1) % self.modulus == 0 or (self.multiplier + 1) % self.modulus == 0

    @property
    def sign(self):
        """+1 or -1 when the action is ±id (+1 wins when both hold), else None."""
        if (self.multiplier - 1) % self.modulus == 0:
            return 1
        if (self.multiplier + 1) % self.modulus == 0:
            return -1
        return None

    def signed(self):
        """Representative in (-modulus/2, modulus/2]."""
        m = self.multiplier
        return m - self.modulus if 2 * m > self.modulus else m

    def __mul__(self, other):
        if other.modulus != self.modulus:
            raise DimensionMismatchError("Residual actions on groups of different orders")
        return ResidualAction(self.multiplier * other.multiplier, self.modulus)


def residual_action(lattice, g):
    """The unit m with g(x) ≡ m·x on the canonical generator x of L*/L."""
    if g.lattice != lattice:
        raise DimensionMismatchError(f"Isometry of {g.lattice.label} does not act on {lattice.label}")
    disc = discriminant_group(lattice)
    if not disc.is_cyclic:
        raise OutOfRangeError(f"Discriminant group of {lattice.label} is not cyclic: {disc.cyclic_orders}")
    if not disc.cyclic_orders:
        return ResidualAction(0, 1)
    image = g.apply(disc.generator)
    (multiplier,) = disc.coordinates(image)
    return ResidualAction(multiplier, disc.cyclic_orders[0])


def euler_number(m):
    """Number of distinct primes dividing m."""
    return len(primefactors(m))


def residual_orthogonal_group(n):
    """
    All a mod 2n-2 with a² ≡ 1 mod 2(2n-2): the units acting as isometries
    of the discriminant form of Hilb(n).
    """
    if n < 2:
        raise OutOfRangeError(f"n must be at least 2, got {n}")
    modulus = 2 * n - 2
    # roots mod 2·modulus come in pairs x, x + modulus since modulus is even
    roots = sqrt_mod(1, 2 * modulus, all_roots=True)
    return sorted({int(x) % modulus for x in roots})


def is_elementary_abelian(units, modulus):
    """Closed under multiplication mod `modulus`, every element an involution, order a power of 2."""
    members = set(units)
    if 1 % modulus not in members:
        return False
    for a in members:
        if (a * a) % modulus != 1 % modulus:
            return False
        for b in members:
            if (a * b) % modulus not in members:
                return False
    size = len(members)
    return size & (size - 1) == 0


def w_index(n):
    """[O⁺Λ : W] for Λ = Hilb(n)."""
    group = residual_orthogonal_group(n)
    if 2 * n - 2 == 2:
        return 1
    return len(group) // 2

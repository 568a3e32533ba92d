"""
Truncated graded polynomial rings over Q on formal Chern classes.

Elements wrap sparse sympy polynomials. Generators carry even degrees,
formal parameters such as a rank r carry degree 0, and every product is
cut back to the truncation degree.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from intlat import DimensionMismatchError, OutOfRangeError

logger = logging.getLogger(__name__)


def _fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


@dataclass(frozen=True)
class GradedRing:
    generators: tuple
    truncation_degree: int
    parameters: tuple = ()

    def __post_init__(self):
        generators = tuple((str(name), int(degree)) for name, degree in self.generators)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "parameters", tuple(str(p) for p in self.parameters))
        for name, degree in generators:
            if degree <= 0 or degree % 2:
                raise OutOfRangeError(f"Generator {name} needs a positive even degree, got {degree}")
        if self.truncation_degree < 0 or self.truncation_degree % 2:
            raise OutOfRangeError(f"Truncation degree must be even and nonnegative, got {self.truncation_degree}")
        names = self.names
        if len(set(names)) != len(names):
            raise OutOfRangeError(f"Duplicate names among {names}")

    @property
    def names(self):
        return tuple(name for name, _ in self.generators) + self.parameters

    @cached_property
    def weights(self):
        return tuple(degree for _, degree in self.generators) + (0,) * len(self.parameters)

    @cached_property
    def poly_ring(self):
        R, *_ = ring(list(self.names), QQ)
        logger.debug(f"Graded ring on {len(self.names)} symbols truncated at degree {self.truncation_degree}")
        return R

    def degree(self, monomial):
        return sum(e * w for e, w in zip(monomial, self.weights))

    def max_factor_degree(self, monomial):
        """Largest degree of a generator dividing the monomial; 0 when only parameters occur."""
        return max((w for e, w in zip(monomial, self.weights) if e and w), default=0)

    def truncate(self, poly):
        return self.poly_ring.from_dict(
            {m: c for m, c in poly.items() if self.degree(m) <= self.truncation_degree}
        )

    def gen(self, name):
        try:
            index = self.names.index(name)
        except ValueError:
            raise OutOfRangeError(f"No generator {name!r} in {self.names}") from None
        return GradedElem(self, self.poly_ring.gens[index])

    def __getitem__(self, name):
        return self.gen(name)

    def scalar(self, value):
        value = Fraction(value)
        return GradedElem(self, self.poly_ring.ground_new(QQ(value.numerator, value.denominator)))

    def one(self):
        return self.scalar(1)

    def zero(self):
        return self.scalar(0)

    def from_terms(self, terms):
        """Builds an element from {monomial exponent tuple: rational coefficient}."""
        size = len(self.names)
        data = {}
        for monomial, coefficient in terms.items():
            if len(monomial) != size:
                raise DimensionMismatchError(f"Monomial {monomial} does not match {size} symbols")
            c = Fraction(coefficient)
            data[tuple(monomial)] = QQ(c.numerator, c.denominator)
        return GradedElem(self, self.poly_ring.from_dict(data))


@dataclass(frozen=True, eq=False)
class GradedElem:
    ring: GradedRing
    poly: PolyElement

    def __post_init__(self):
        object.__setattr__(self, "poly", self.ring.truncate(self.poly))

    def _coerce(self, other):
        if isinstance(other, GradedElem):
            if other.ring != self.ring:
                raise DimensionMismatchError("Elements of different graded rings")
            return other.poly
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other).poly
        return NotImplemented

    def __add__(self, other):
        p = self._coerce(other)
        return NotImplemented if p is NotImplemented else GradedElem(self.ring, self.poly + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce(other)
        return NotImplemented if p is NotImplemented else GradedElem(self.ring, self.poly - p)

    def __rsub__(self, other):
        p = self._coerce(other)
        return NotImplemented if p is NotImplemented else GradedElem(self.ring, p - self.poly)

    def __mul__(self, other):
        p = self._coerce(other)
        return NotImplemented if p is NotImplemented else GradedElem(self.ring, self.poly * p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)) or not other:
            raise OutOfRangeError(f"Can only divide by nonzero rationals, got {other!r}")
        return self * (1 / Fraction(other))

    def __neg__(self):
        return GradedElem(self.ring, -self.poly)

    def __pow__(self, exponent):
        if exponent < 0:
            raise OutOfRangeError(f"Negative power {exponent}")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return NotImplemented
        return self.poly == p

    __hash__ = None

    @property
    def terms(self):
        return {m: _fraction(c) for m, c in self.poly.items()}

    def is_zero(self):
        return not self.poly

    def degree(self):
        return max((self.ring.degree(m) for m in self.poly.keys()), default=0)

    def coefficient(self, monomial):
        """Coefficient of a monomial element such as c1*c2 (parameters included)."""
        if len(monomial.poly) != 1:
            raise OutOfRangeError(f"{monomial.format()} is not a monomial")
        (m,) = monomial.poly.keys()
        return self.terms.get(m, Fraction(0))

    def homogeneous(self, degree):
        return GradedElem(self.ring, self.ring.poly_ring.from_dict(
            {m: c for m, c in self.poly.items() if self.ring.degree(m) == degree}
        ))

    def modulo(self, d):
        """Drops monomials whose generator factors all have degree <= d, i.e. reduces mod A_d."""
        kept = {m: c for m, c in self.poly.items() if self.ring.max_factor_degree(m) > d}
        return GradedElem(self.ring, self.ring.poly_ring.from_dict(kept))

    def in_subring(self, d):
        return self.modulo(d).is_zero()

    def substitute(self, mapping):
        """Replaces symbols by elements or rationals of the same ring."""
        gens = self.ring.poly_ring.gens
        pairs = []
        for name, value in mapping.items():
            target = self._coerce(value)
            if target is NotImplemented:
                raise OutOfRangeError(f"Cannot substitute {value!r} for {name}")
            pairs.append((gens[self.ring.names.index(name)], target))
        return GradedElem(self.ring, self.poly.compose(pairs) if pairs else self.poly)

    def format(self):
        """Canonical text: graded by degree, then lexicographic on generator names."""
        if self.is_zero():
            return "0"
        names = self.ring.names
        order = sorted(range(len(names)), key=lambda i: names[i])

        def key(item):
            m, _ = item
            return (-self.ring.degree(m), tuple(-m[i] for i in order))

        parts = []
        for m, c in sorted(self.terms.items(), key=key):
            factors = [names[i] if m[i] == 1 else f"{names[i]}^{m[i]}" for i in order if m[i]]
            magnitude = abs(c)
            text = "*".join(factors)
            if not factors:
                text = str(magnitude)
            elif magnitude != 1:
                text = f"{magnitude}*{text}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))

        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GradedElem({self.format()})"


def chern_classes(ring_, prefix, k, suffix=""):
    """[c_1, ..., c_k] named {prefix}{i}{suffix} in the given ring."""
    return [ring_.gen(f"{prefix}{i}{suffix}") for i in range(1, k + 1)]

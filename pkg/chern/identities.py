import logging
from dataclasses import dataclass
from math import factorial

from intlat import OutOfRangeError

from .graded import GradedElem, GradedRing, chern_classes

logger = logging.getLogger(__name__)


def chern_ring(k, prefix="c"):
    """c1..ck (or ch1..chk) with deg c_i = 2i, truncated at 2k."""
    if k < 1:
        raise OutOfRangeError(f"Need at least one class, got k = {k}")
    return GradedRing(tuple((f"{prefix}{i}", 2 * i) for i in range(1, k + 1)), 2 * k)


def power_sums(elementary):
    """
    Newton's recursion p_k = Σ_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k
    for elementary classes e_1..e_k.
    """
    p = []
    for k in range(1, len(elementary) + 1):
        term = (-1) ** (k - 1) * k * elementary[k - 1]
        for i in range(1, k):
            term = term + (-1) ** (i - 1) * elementary[i - 1] * p[k - i - 1]
        p.append(term)
    return p


def elementary_from_characters(characters):
    """k e_k = Σ_{i<=k} (-1)^(i-1) e_(k-i) · i!·ch_i, with e_0 = 1."""
    if not characters:
        return []
    one = characters[0].ring.one()
    e = [one]
    for k in range(1, len(characters) + 1):
        total = characters[0].ring.zero()
        for i in range(1, k + 1):
            total = total + (-1) ** (i - 1) * factorial(i) * e[k - i] * characters[i - 1]
        e.append(total / k)
    return e[1:]


def characters_from_chern(classes):
    return [p / factorial(k) for k, p in enumerate(power_sums(classes), start=1)]


def chern_to_character(k):
    """ch_1..ch_k as polynomials in c_1..c_k."""
    ring = chern_ring(k)
    result = characters_from_chern(chern_classes(ring, "c", k))
    logger.debug(f"Chern character up to degree {2 * k}: {sum(len(x.poly) for x in result)} terms")
    return result


def character_to_chern(k):
    """c_1..c_k as polynomials in ch_1..ch_k."""
    ring = chern_ring(k, prefix="ch")
    return elementary_from_characters(chern_classes(ring, "ch", k))


def newton_round_trip(k):
    """Whether both compositions of the two conversions are the identity up to degree 2k."""
    c_ring = chern_ring(k)
    c = chern_classes(c_ring, "c", k)
    back = elementary_from_characters(characters_from_chern(c))

    ch_ring = chern_ring(k, prefix="ch")
    ch = chern_classes(ch_ring, "ch", k)
    forth = characters_from_chern(elementary_from_characters(ch))
    return back == c and forth == ch


def whitney_sum(x, y):
    """c_k(x+y) = Σ_{a+b=k} c_a(x)c_b(y) for classes c_1..c_k of x and y."""
    if len(x) != len(y):
        raise OutOfRangeError(f"Whitney sum of {len(x)} and {len(y)} classes")
    if not x:
        return []
    one = x[0].ring.one()
    cx, cy = [one] + list(x), [one] + list(y)
    return [sum((cx[a] * cy[k - a] for a in range(k + 1)), x[0].ring.zero()) for k in range(1, len(x) + 1)]


def _pair_ring(i, names, extra=(), parameters=()):
    generators = [(f"c{j}_{name}", 2 * j) for name in names for j in range(1, i + 1)]
    return GradedRing(tuple(generators) + tuple(extra), 2 * i, tuple(parameters))


def sigma_bar(classes, i):
    """c_i - c_(i-1)·c_1, and 2c_2 - c_1² for i = 2."""
    c1 = classes[0]
    if i == 2:
        return 2 * classes[1] - c1 * c1
    return classes[i - 1] - classes[i - 2] * c1


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    i: int
    holds: bool
    residual: GradedElem

    def __bool__(self):
        return self.holds

    def to_json(self):
        from .serializers import LemmaCheckModel

        return LemmaCheckModel(lemma=self.lemma, i=self.i, holds=self.holds, residual=self.residual.format())


def verify_sigma_linear(i):
    """
    Expands D(i) = σ̄(x+y) - σ̄(x) - σ̄(y) by the Whitney formula and checks
    that every monomial only involves classes of degree <= 2i-4. For i = 2
    the check is that 2c_2 - c_1² is exactly additive.
    """
    if i < 2:
        raise OutOfRangeError(f"sigma-linear needs i >= 2, got {i}")
    ring = _pair_ring(i, ("x", "y"))
    x = chern_classes(ring, "c", i, "_x")
    y = chern_classes(ring, "c", i, "_y")
    total = whitney_sum(x, y)
    residual = sigma_bar(total, i) - sigma_bar(x, i) - sigma_bar(y, i)
    holds = residual.is_zero() if i == 2 else residual.in_subring(2 * i - 4)
    logger.debug(f"sigma-linear i={i}: residual {residual.format()}")
    return LemmaCheck("sigma-linear", i, holds, residual)


def falling_binomial(top, m):
    """binom(top, m) for a ring element `top`: top(top-1)...(top-m+1)/m!."""
    result = top.ring.one()
    for t in range(m):
        result = result * (top - t)
    return result / factorial(m)


def twist_expansion(classes, line, rank, i):
    """c_i(α⊗ℓ) = Σ_j binom(r-j, i-j) c_j(α) c_1(ℓ)^(i-j)."""
    ring = line.ring
    c = [ring.one()] + list(classes)
    total = ring.zero()
    for j in range(i + 1):
        total = total + falling_binomial(rank - j, i - j) * c[j] * line ** (i - j)
    return total


def twist_leading_terms(classes, line, rank, i):
    """c_i + (r+1-i)·c_(i-1)·c_1(ℓ); for i = 2 also (r(r-1)/2)·c_1(ℓ)² and r-1 as the middle coefficient."""
    ring = line.ring
    c = [ring.one()] + list(classes)
    if i == 2:
        return c[2] + (rank - 1) * c[1] * line + rank * (rank - 1) / 2 * line * line
    return c[i] + (rank + 1 - i) * c[i - 1] * line


def verify_twist_formula(i):
    """Compares the twisted class with its leading terms modulo A_(2i-4), for a formal rank r."""
    if i < 1:
        raise OutOfRangeError(f"twist needs i >= 1, got {i}")
    ring = _pair_ring(i, ("a",), extra=(("c1_l", 2),), parameters=("r",))
    classes = chern_classes(ring, "c", i, "_a")
    line, rank = ring.gen("c1_l"), ring.gen("r")
    residual = (twist_expansion(classes, line, rank, i) - twist_leading_terms(classes, line, rank, i)).modulo(2 * i - 4)
    logger.debug(f"twist i={i}: residual {residual.format()}")
    return LemmaCheck("twist", i, residual.is_zero(), residual)


def psi_ring(i):
    generators = tuple((f"c{j}_ux", 2 * j) for j in range(1, max(i - 1, 1) + 1)) + (("c1_uw", 2),)
    return GradedRing(generators, 2 * i, ("vx",))


def psi_minus_sigma(i, n):
    """
    ψ̄ - σ̄ as a class: ((i-1)/(2n-2))·c_(i-1)(u_x)·c_1(u_w) for i >= 3, and
    (2/(2n-2))·c_1(u_w)c_1(u_x) - ((v,x)/(2n-2)²)·c_1(u_w)² for i = 2, with
    (v,x) the formal parameter vx.
    """
    if i < 2 or n < 2:
        raise OutOfRangeError(f"psi_minus_sigma needs i >= 2 and n >= 2, got i={i}, n={n}")
    ring = psi_ring(i)
    norm = 2 * n - 2
    uw = ring.gen("c1_uw")
    if i == 2:
        ux, vx = ring.gen("c1_ux"), ring.gen("vx")
        return (2 * uw * ux) / norm - vx * uw * uw / (norm * norm)
    return (i - 1) * ring.gen(f"c{i - 1}_ux") * uw / norm

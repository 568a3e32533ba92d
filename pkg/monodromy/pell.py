import logging

from sympy import integer_nthroot
from sympy.solvers.diophantine.diophantine import diop_DN

from intlat import OutOfRangeError

logger = logging.getLogger(__name__)


def fundamental_unit(m):
    """Smallest nontrivial (b, a) with b² - m·a² = 1, for m > 0 not a square."""
    solutions = diop_DN(m, 1)
    if not solutions:
        raise OutOfRangeError(f"No Pell solution for m = {m}")
    b, a = min(solutions, key=lambda s: abs(s[0]))
    return abs(int(b)), abs(int(a))


def trace_criterion(n, m):
    """
    Whether every norm one unit b + a·√m of Z[√m] has trace 2b ≡ ±2 mod 4n-4.

    Powers of the fundamental unit are walked modulo 4n-4 until they cycle
    back to 1; the unit group modulo 4n-4 is finite, so the walk ends.
    """
    if n < 2 or m < 0:
        raise OutOfRangeError(f"trace_criterion needs n >= 2 and m >= 0, got n={n}, m={m}")
    _, exact = integer_nthroot(m, 2)
    if exact:
        return True

    modulus = 4 * n - 4
    b1, a1 = fundamental_unit(m)
    one = (1 % modulus, 0)
    b, a = one
    steps = 0
    while True:
        b, a = (b * b1 + m * a * a1) % modulus, (b * a1 + a * b1) % modulus
        steps += 1
        trace = 2 * b
        if (trace - 2) % modulus and (trace + 2) % modulus:
            logger.debug(f"trace_criterion(n={n}, m={m}): unit power {steps} has trace {trace} mod {modulus}")
            return False
        if (b, a) == one:
            break
    logger.debug(f"trace_criterion(n={n}, m={m}): unit cycle of length {steps} mod {modulus}")
    return True

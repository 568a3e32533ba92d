"""
Exact linear algebra over QQ on sympy's DomainMatrix. Matrices come in and
go out as nested lists; entries come back as Fractions.
"""

import logging
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import DimensionMismatchError, SingularLatticeError

logger = logging.getLogger(__name__)


def _qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _fraction(q):
    return Fraction(int(QQ.numer(q)), int(QQ.denom(q)))


def qq_matrix(m):
    rows = [[_qq(x) for x in row] for row in m]
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise DimensionMismatchError(f"Ragged matrix with row lengths {[len(row) for row in rows]}")
    return DomainMatrix(rows, (len(rows), width), QQ)


def _square(m):
    dm = qq_matrix(m)
    rows, cols = dm.shape
    if rows != cols:
        raise DimensionMismatchError(f"Expected a square matrix, got {rows}x{cols}")
    return dm


def from_domain(dm):
    return [[_fraction(x) for x in row] for row in dm.to_list()]


def is_integral(m):
    return all(Fraction(x).denominator == 1 for row in m for x in row)


def to_integers(m):
    return tuple(tuple(int(Fraction(x)) for x in row) for row in m)


def determinant(a):
    if not len(a):
        return Fraction(1)
    return _fraction(_square(a).det())


def solve(a, b):
    """
    Solves a·x = b exactly for a square nonsingular rational matrix.

    b is either a vector or a matrix with len(a) rows; the solution has the
    same shape, with Fraction entries.
    """
    dm = _square(a)
    size = dm.shape[0]
    vector_rhs = bool(b) and not isinstance(b[0], (list, tuple))
    rhs = qq_matrix([[x] for x in b] if vector_rhs else b)
    if rhs.shape[0] != size:
        raise DimensionMismatchError(f"Right-hand side has {rhs.shape[0]} rows, expected {size}")
    if dm.det() == 0:
        raise SingularLatticeError("Matrix is not full rank.")

    solution = from_domain(dm.lu_solve(rhs))
    if vector_rhs:
        return [row[0] for row in solution]
    return solution


def inverse(a):
    dm = _square(a)
    if dm.det() == 0:
        raise SingularLatticeError("Matrix is not full rank.")
    return from_domain(dm.inv())


def _sign_changes(coefficients):
    signs = [c > 0 for c in coefficients if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def signature(gram):
    """
    Returns (positive, negative, null) counts of a symmetric rational form.

    The characteristic polynomial of a symmetric matrix has only real roots,
    so Descartes' sign counts on p(x) and p(-x) are exact.
    """
    if not len(gram):
        return 0, 0, 0
    dm = _square(gram)
    size = dm.shape[0]
    coefficients = [_fraction(c) for c in dm.charpoly()]
    null = len(coefficients) - 1 - max(k for k, c in enumerate(coefficients) if c != 0)
    positive = _sign_changes(coefficients)
    negative = _sign_changes([c * (-1) ** (size - k) for k, c in enumerate(coefficients)])
    logger.debug(f"signature of a rank {size} form: ({positive}, {negative}, {null})")
    return positive, negative, null


def is_positive_definite(gram):
    return signature(gram) == (len(gram), 0, 0)

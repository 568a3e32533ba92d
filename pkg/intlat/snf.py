"""
Integer linear algebra over Z: Smith normal form with its unimodular
transforms, integral kernels, row Hermite normal form and integral solving.

Matrices are accepted as any nested sequence (lists, tuples, numpy object
arrays) of integers and returned as tuples of tuples of Python ints.
"""

import logging
from math import gcd
from typing import NamedTuple

from .exceptions import DimensionMismatchError
from .linalg import inverse, is_integral, to_integers

logger = logging.getLogger(__name__)


class SmithForm(NamedTuple):
    S: tuple
    P: tuple
    Q: tuple

    @property
    def diagonal(self):
        return tuple(self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0)))


def _rows(m, cols=None):
    shape = getattr(m, "shape", None)
    if cols is None and shape is not None and len(shape) == 2:
        cols = shape[1]
    rows = [[int(x) for x in row] for row in m]
    width = len(rows[0]) if rows else (cols or 0)
    if any(len(row) != width for row in rows):
        raise DimensionMismatchError("Ragged integer matrix")
    return rows, width


def _identity(size):
    return [[int(i == j) for j in range(size)] for i in range(size)]


def _freeze(m):
    return tuple(tuple(row) for row in m)


class _Reducer:
    """Diagonalizes `a` in place, replaying row ops on `rows_of` and column ops on `cols_of`."""

    def __init__(self, a, width, rows_of=None, cols_of=None):
        self.a = a
        self.height = len(a)
        self.width = width
        self.rows_of = rows_of
        self.cols_of = cols_of

    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.rows_of is not None:
            self.rows_of[i], self.rows_of[j] = self.rows_of[j], self.rows_of[i]

    def add_row(self, target, source, factor):
        # row_target += factor * row_source
        a = self.a
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        if self.rows_of is not None:
            r = self.rows_of
            r[target] = [x + factor * y for x, y in zip(r[target], r[source])]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.rows_of is not None:
            self.rows_of[i] = [-x for x in self.rows_of[i]]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.cols_of is not None:
            for row in self.cols_of:
                row[i], row[j] = row[j], row[i]

    def add_col(self, target, source, factor):
        for row in self.a:
            row[target] += factor * row[source]
        if self.cols_of is not None:
            for row in self.cols_of:
                row[target] += factor * row[source]

    def _smallest(self, t):
        best = None
        for i in range(t, self.height):
            row = self.a[i]
            for j in range(t, self.width):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def diagonalize(self):
        a = self.a
        t = 0
        while t < min(self.height, self.width):
            found = self._smallest(t)
            if found is None:
                break
            _, i, j = found
            self.swap_rows(t, i)
            self.swap_cols(t, j)
            while True:
                settled = True
                for i in range(t + 1, self.height):
                    if a[i][t]:
                        self.add_row(i, t, -(a[i][t] // a[t][t]))
                        if a[i][t]:
                            self.swap_rows(t, i)
                            settled = False
                for j in range(t + 1, self.width):
                    if a[t][j]:
                        self.add_col(j, t, -(a[t][j] // a[t][t]))
                        if a[t][j]:
                            self.swap_cols(t, j)
                            settled = False
                if not settled:
                    continue
                offender = next(
                    (i for i in range(t + 1, self.height)
                     if any(a[i][j] % a[t][t] for j in range(t + 1, self.width))),
                    None,
                )
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            if a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


def snf(m, cols=None):
    """
    Smith normal form of an integer matrix.

    Args:
        m: integer matrix with r rows.
        cols: column count, only needed when m has no rows.

    Returns:
        SmithForm(S, P, Q) with P·m·Q = S, S diagonal with d_i | d_(i+1)
        and P, Q unimodular.
    """
    a, width = _rows(m, cols)
    P = _identity(len(a))
    Q = _identity(width)
    rank = _Reducer(a, width, rows_of=P, cols_of=Q).diagonalize()
    logger.debug(f"snf of {len(a)}x{width} matrix: rank {rank}")
    return SmithForm(_freeze(a), _freeze(P), _freeze(Q))


def invariant_factors(m):
    return tuple(d for d in snf(m).diagonal if d)


def _primitive_rows(a):
    """Drops zero rows, divides rows by their content and removes duplicates up to sign."""
    seen = {}
    for row in a:
        g = 0
        for x in row:
            g = gcd(g, x)
        if not g:
            continue
        lead = next(x for x in row if x)
        if lead < 0:
            g = -g
        seen.setdefault(tuple(x // g for x in row), None)
    return [list(row) for row in seen]


def kernel_basis(m, cols=None):
    """
    Integral basis of {x in Z^cols : m·x = 0}, as a tuple of vectors.

    The basis is in row Hermite normal form, so equal kernels give equal
    output.
    """
    a, width = _rows(m, cols)
    a = echelon_rows(_primitive_rows(a), width)
    Q = _identity(width)
    rank = _Reducer(a, width, cols_of=Q).diagonalize()
    basis = [[Q[i][j] for i in range(width)] for j in range(rank, width)]
    logger.debug(f"kernel of {len(a)}x{width} system has rank {len(basis)}")
    return hermite_rows(basis, width)


def echelon_rows(rows, width):
    """Integer row echelon form (no reduction above pivots); zero rows dropped."""
    a = [list(row) for row in rows]
    top = 0
    for col in range(width):
        if top == len(a):
            break
        while True:
            live = [i for i in range(top, len(a)) if a[i][col]]
            if not live:
                break
            p = min(live, key=lambda i: abs(a[i][col]))
            a[top], a[p] = a[p], a[top]
            done = True
            for i in range(top + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // a[top][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if a[top][col]:
            top += 1
    return [row for row in a[:top] if any(row)]


def hermite_rows(rows, width=None):
    """
    Row-style Hermite normal form: positive pivots, entries above each
    pivot reduced into [0, pivot). Zero rows are dropped.
    """
    if width is None:
        width = len(rows[0]) if rows else 0
    a = echelon_rows(rows, width)
    pivot_col = 0
    for r in range(len(a)):
        while not a[r][pivot_col]:
            pivot_col += 1
        if a[r][pivot_col] < 0:
            a[r] = [-x for x in a[r]]
        p = a[r][pivot_col]
        for above in range(r):
            q = a[above][pivot_col] // p
            if q:
                a[above] = [x - q * y for x, y in zip(a[above], a[r])]
    return _freeze(a)


def solve_integral(m, b, cols=None):
    """
    Returns an integer vector x with m·x = b, or None when no integral
    solution exists.
    """
    a, width = _rows(m, cols)
    if len(b) != len(a):
        raise DimensionMismatchError(f"Right-hand side has {len(b)} entries, expected {len(a)}")
    rhs = [[int(x)] for x in b]
    Q = _identity(width)
    rank = _Reducer(a, width, rows_of=rhs, cols_of=Q).diagonalize()

    y = [0] * width
    for i in range(len(a)):
        c = rhs[i][0]
        if i < rank:
            d = a[i][i]
            if c % d:
                return None
            y[i] = c // d
        elif c:
            return None
    return tuple(sum(Q[i][j] * y[j] for j in range(width)) for i in range(width))


def inverse_unimodular(m):
    inv = inverse(m)
    if not is_integral(inv):
        raise DimensionMismatchError("Matrix is not unimodular")
    return to_integers(inv)


def complete_to_unimodular(columns, rows):
    """
    Extends the given columns (a primitive sublattice basis of Z^rows) to a
    unimodular basis. Returns the extra columns.
    """
    k = len(columns)
    m = [[columns[j][i] for j in range(k)] for i in range(rows)]
    S, P, _ = snf(m)
    if any(S[i][i] != 1 for i in range(k)):
        raise DimensionMismatchError("Columns do not span a primitive sublattice")
    p_inv = inverse_unimodular(P)
    return tuple(tuple(p_inv[i][j] for i in range(rows)) for j in range(k, rows))

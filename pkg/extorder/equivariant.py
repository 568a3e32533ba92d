"""
Equivariant homomorphisms between lattices with a group action given by
generator pairs, and the extension order with the Mukai lattice in the
middle.

Unknown homomorphisms are written M = Σ t_j·A_j over a list of integer
basis matrices (all elementary matrices by default). Each generator pair
(g, h) imposes M·g = h·M; the solutions form a sublattice of Z^q that is
cut down one generator at a time.
"""

import logging
from dataclasses import asdict, dataclass, field
from functools import reduce
from math import gcd
from typing import Optional

import numpy as np

from intlat import (
    DimensionMismatchError,
    InsufficientGeneratorsError,
    LatVec,
    Lattice,
    OutOfRangeError,
    as_array,
    complete_to_unimodular,
    hermite_rows,
    inverse_unimodular,
    kernel_basis,
    solve_integral,
)
from k3_project import settings
from monodromy import hilbert_mukai_pair, reflection, sample_roots

logger = logging.getLogger(__name__)

# fewest sampled reflections mukai_middle_ext_order accepts
MIN_GENERATORS = 10


@dataclass(frozen=True)
class EquivariantSystem:
    domain: Lattice
    codomain: Lattice
    generators: tuple = ()
    basis: Optional[tuple] = None
    anchor: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(tuple(pair) for pair in self.generators))
        shape = (self.codomain.rank, self.domain.rank)
        for g, h in self.generators:
            if g.lattice != self.domain or h.lattice != self.codomain:
                raise DimensionMismatchError(
                    f"Generator acts on {g.lattice.label}/{h.lattice.label}, "
                    f"expected {self.domain.label}/{self.codomain.label}"
                )
        for matrix in (self.basis or ()) + ((self.anchor,) if self.anchor is not None else ()):
            if as_array(matrix).shape != shape:
                raise DimensionMismatchError(f"Constraint matrix of shape {as_array(matrix).shape}, expected {shape}")

    @property
    def shape(self):
        return self.codomain.rank, self.domain.rank

    def basis_stack(self):
        """The q basis matrices flattened into a q x (rows·cols) array, anchor last when present."""
        rows, cols = self.shape
        if self.basis is None:
            stack = as_array(np.identity(rows * cols, dtype=np.int64).tolist())
        else:
            stack = as_array([as_array(b).ravel().tolist() for b in self.basis])
        if self.anchor is not None:
            stack = np.vstack([stack, as_array([as_array(self.anchor).ravel().tolist()])])
        return stack

    def with_generators(self, generators):
        return EquivariantSystem(self.domain, self.codomain, tuple(generators), self.basis, self.anchor)


@dataclass(frozen=True)
class EquivariantSolution:
    """
    `homogeneous` is an integral basis (HNF, coefficients over the system
    basis) of the solutions with anchor coefficient 0. `particular` is one
    solution with anchor coefficient 1, or None when no integral one exists.
    """

    system: EquivariantSystem = field(repr=False)
    homogeneous: tuple
    particular: Optional[tuple] = None
    feasible: bool = True

    @property
    def rank(self):
        return len(self.homogeneous)

    def matrices(self):
        return [self.matrix(t) for t in self.homogeneous]

    def matrix(self, coefficients, anchor=0):
        rows, cols = self.system.shape
        t = list(coefficients) + ([anchor] if self.system.anchor is not None else [])
        flat = as_array([t]) @ self.system.basis_stack()
        return tuple(tuple(int(x) for x in row) for row in flat.reshape(rows, cols).tolist())

    def particular_matrix(self):
        return None if self.particular is None else self.matrix(self.particular, anchor=1)

    def contains(self, coefficients):
        """Whether a homogeneous coefficient vector lies in the solution lattice."""
        if not self.homogeneous:
            return not any(coefficients)
        columns = [list(col) for col in zip(*self.homogeneous)]
        return solve_integral(columns, list(coefficients), cols=len(self.homogeneous)) is not None


def _cut(coefficients, stack, generator, shape):
    """Integral combinations of the current solution rows that commute with one generator pair."""
    g, h = generator
    rows, cols = shape
    matrices = (coefficients @ stack).reshape(-1, rows, cols)
    defect = np.matmul(matrices, g.array) - np.matmul(h.array, matrices)
    equations = defect.reshape(len(coefficients), -1).T.tolist()
    combos = kernel_basis(equations, cols=len(coefficients))
    if not combos:
        return np.zeros((0, coefficients.shape[1]), dtype=object)
    return as_array(combos) @ coefficients


def equivariant_hom(system):
    """Integral solutions of M·g = h·M for all generator pairs, within the system's affine family."""
    stack = system.basis_stack()
    size = len(stack)
    coefficients = as_array(np.identity(size, dtype=np.int64).tolist())
    for index, generator in enumerate(system.generators):
        coefficients = _cut(coefficients, stack, generator, system.shape)
        logger.debug(f"After generator {index + 1}: solution rank {len(coefficients)}")
        if not len(coefficients):
            break

    solutions = [tuple(int(x) for x in row) for row in coefficients.tolist()]
    if system.anchor is None:
        return EquivariantSolution(system, hermite_rows(solutions, size) if solutions else ())

    # the last coordinate is the anchor coefficient
    anchor_values = [row[-1] for row in solutions]
    combos = kernel_basis([anchor_values], cols=len(solutions)) if solutions else ()
    homogeneous = [tuple(sum(c * row[j] for c, row in zip(combo, solutions)) for j in range(size - 1)) for combo in combos]
    homogeneous = hermite_rows(homogeneous, size - 1) if homogeneous else ()
    lift = solve_integral([anchor_values], [1], cols=len(solutions)) if solutions else None
    if lift is None:
        logger.debug("Affine family has no integral equivariant member")
        return EquivariantSolution(system, homogeneous, None, feasible=False)
    particular = tuple(sum(c * row[j] for c, row in zip(lift, solutions)) for j in range(size - 1))
    return EquivariantSolution(system, homogeneous, particular, feasible=True)


def sample_root_reflections(lattice, count, seed=None, bound=None, emphasis=()):
    """Reflections in `count` sampled roots of norm -2."""
    bound = settings.ROOT_BOUND if bound is None else bound
    return [reflection(u) for u in sample_roots(lattice, count, seed=seed, bound=bound, emphasis=emphasis)]


@dataclass(frozen=True)
class MiddleExtOrder:
    n: int
    order: int
    rank: int
    generator_count: int
    stabilized: bool

    def to_json(self):
        from .serializers import MiddleExtOrderModel

        return MiddleExtOrderModel(**asdict(self))


def middle_parametrization(n):
    """
    Basis matrices for φ = [k·I | x]·[E | e]⁻¹: Mukai -> Hilb(n), with e
    completing the complement basis E to a basis of the Mukai lattice.
    The first unknown is k, the restriction of φ to w^⊥ being k·id.
    """
    pair = hilbert_mukai_pair(n)
    e = pair.embedding
    columns = [tuple(int(x) for x in col) for col in e.T.tolist()]
    (extra,) = complete_to_unimodular(columns, pair.mukai.rank)
    full = [list(row) + [x] for row, x in zip(e.tolist(), extra)]
    full_inverse = as_array(inverse_unimodular(full))
    size = pair.hilb.rank

    restriction = as_array(np.hstack([np.identity(size, dtype=np.int64), np.zeros((size, 1), dtype=np.int64)]).tolist())
    basis = [restriction @ full_inverse]
    for j in range(size):
        unit = np.zeros((size, size + 1), dtype=np.int64)
        unit[j, size] = 1
        basis.append(as_array(unit.tolist()) @ full_inverse)
    return tuple(tuple(tuple(int(x) for x in row) for row in b.tolist()) for b in basis)


def _middle_generators(n, count, seed, bound):
    pair = hilbert_mukai_pair(n)
    roots = sample_roots(pair.hilb, count, seed=seed, bound=bound, emphasis=(pair.hilb.rank - 1,))
    generators = []
    for u in roots:
        image = LatVec(pair.mukai, tuple(int(x) for x in pair.embedding @ list(u.coords)))
        generators.append((reflection(image), reflection(u)))
    return generators


def _middle_solution(n, generators):
    pair = hilbert_mukai_pair(n)
    system = EquivariantSystem(pair.mukai, pair.hilb, tuple(generators), middle_parametrization(n))
    return equivariant_hom(system)


def mukai_middle_ext_order(n, generator_count=None, seed=None, batch=None, bound=None):
    """
    Smallest k >= 1 such that some φ: Mukai -> w^⊥, equivariant for the
    sampled reflections, restricts to k·id on w^⊥ (w = (1,0,1-n)). The
    answer is stabilized when `batch` further reflections leave the
    solution lattice unchanged.
    """
    generator_count = settings.GENERATOR_COUNT if generator_count is None else generator_count
    seed = settings.SEED if seed is None else seed
    batch = settings.GENERATOR_BATCH if batch is None else batch
    bound = settings.ROOT_BOUND if bound is None else bound
    if n < 2:
        raise OutOfRangeError(f"n must be at least 2, got {n}")
    if generator_count < MIN_GENERATORS:
        raise OutOfRangeError(f"Need at least {MIN_GENERATORS} generators, got {generator_count}")

    generators = _middle_generators(n, generator_count + batch, seed, bound)
    solution = _middle_solution(n, generators[:generator_count])
    if solution.rank > 2:
        raise InsufficientGeneratorsError(
            f"{generator_count} reflections leave a solution lattice of rank {solution.rank}; use more generators"
        )
    order = reduce(gcd, (abs(t[0]) for t in solution.homogeneous), 0)
    if order == 0:
        raise InsufficientGeneratorsError(f"No equivariant map restricts to a nonzero multiple of the identity (n={n})")

    stabilized = bool(batch) and _middle_solution(n, generators).homogeneous == solution.homogeneous
    logger.debug(f"mukai-middle n={n}: order {order}, rank {solution.rank}, stabilized {stabilized}")
    return MiddleExtOrder(n, order, solution.rank, generator_count, stabilized)

"""
Primitive isometric embeddings Hilb(n) -> Mukai lattice and their
orbits under the isometry group of the Mukai lattice.

An embedding E with complement generator c, (c,c) = N = 2n-2, is glued
along an isomorphism between the discriminant groups of Hilb(n) and of
the line Z·c. Let x be any Mukai vector with (x, E·λ) = (g, λ) for all λ,
g the canonical generator δ/(2-2n) of Hilb(n)*/Hilb(n). Then (x, c) mod N
is the glue image of g. It is well defined up to the sign of c, and two
embeddings lie in one orbit exactly when these classes agree.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, reduce

from intlat import (
    DimensionMismatchError,
    Lattice,
    LatticeError,
    NotAnIsometryError,
    NotPrimitiveError,
    as_array,
    discriminant_group,
    hilb_lattice,
    invariant_factors,
    kernel_basis,
    mukai_lattice,
    solve_integral,
)
from intlat.lattice import freeze
from monodromy import hilb_degree, reflection, sample_roots
from mukai import MukaiVector

from .pn import PnEntry, enumerate_pn

logger = logging.getLogger(__name__)

DELTA = 22


@dataclass(frozen=True)
class Embedding:
    source: Lattice
    target: Lattice
    matrix: tuple

    def __post_init__(self):
        matrix = freeze(self.matrix)
        object.__setattr__(self, "matrix", matrix)
        if len(matrix) != self.target.rank or any(len(row) != self.source.rank for row in matrix):
            raise DimensionMismatchError(
                f"Expected a {self.target.rank}x{self.source.rank} matrix for {self.source.label} -> {self.target.label}"
            )
        e = self.array
        if not (e.T @ self.target.matrix @ e == self.source.matrix).all():
            raise NotAnIsometryError(f"Matrix does not embed {self.source.label} isometrically")
        factors = invariant_factors(matrix)
        if len(factors) != self.source.rank or any(d != 1 for d in factors):
            raise NotPrimitiveError(f"Image of {self.source.label} is not primitive: invariant factors {factors}")

    @cached_property
    def array(self):
        return as_array(self.matrix)

    @property
    def n(self):
        return hilb_degree(self.source)

    def image(self, coords):
        return tuple(int(x) for x in self.array @ list(coords))

    def postcompose(self, g):
        """g ∘ E for an isometry g of the target."""
        if g.lattice != self.target:
            raise DimensionMismatchError(f"Isometry of {g.lattice.label} does not act on {self.target.label}")
        return Embedding(self.source, self.target, g.array @ self.array)

    def to_json(self):
        from .serializers import EmbeddingModel

        c = complement_vector(self)
        return EmbeddingModel(n=self.n, complement=c.to_json(), complement_norm=c.pairing(c), glue_class=orbit_invariant(self))


def iota(n, entry):
    """
    ι_{r,s}: the identity on the K3 summand and δ ↦ (r,0,-s), whose
    Mukai coordinates are (r, s).
    """
    entry = entry if isinstance(entry, PnEntry) else PnEntry(*entry)
    entry.check(n)
    source, target = hilb_lattice(n), mukai_lattice()
    matrix = [[0] * source.rank for _ in range(target.rank)]
    for i in range(DELTA):
        matrix[i + 2][i] = 1
    matrix[0][DELTA], matrix[1][DELTA] = entry.delta_image.coordinates()[:2]
    return Embedding(source, target, matrix)


def complement_generator(embedding):
    """Generator c of the orthogonal complement, first nonzero coordinate positive."""
    e = embedding.array
    rows = (e.T @ embedding.target.matrix).tolist()
    kernel = kernel_basis(rows, cols=embedding.target.rank)
    if len(kernel) != 1:
        raise LatticeError(f"Complement of the image has rank {len(kernel)}, expected 1")
    (c,) = kernel
    if next(x for x in c if x) < 0:
        c = tuple(-x for x in c)
    return c


def orbit_invariant(embedding):
    """The glue class k mod 2n-2 of the canonical generator, normalized to min(k, N-k)."""
    c = complement_generator(embedding)
    target = embedding.target
    modulus = target.pairing(c, c)
    disc = discriminant_group(embedding.source)
    if disc.order != abs(modulus):
        raise LatticeError(
            f"Complement has norm {modulus} but the discriminant group of {embedding.source.label} has order {disc.order}"
        )

    functional = tuple(int(v) for v in embedding.source.dual_image(disc.generator))
    rows = (embedding.array.T @ target.matrix).tolist()
    x = solve_integral(rows, functional, cols=target.rank)
    if x is None:
        raise NotPrimitiveError("Canonical discriminant generator does not lift to the target")
    k = target.pairing(x, c) % abs(modulus)
    k = min(k, abs(modulus) - k)
    logger.debug(f"Embedding of {embedding.source.label} with complement {c}: glue class {k} mod {abs(modulus)}")
    return k


def same_orbit(e1, e2):
    if e1.source != e2.source or e1.target != e2.target:
        raise DimensionMismatchError(
            f"Cannot compare embeddings {e1.source.label} -> {e1.target.label} and {e2.source.label} -> {e2.target.label}"
        )
    return orbit_invariant(e1) == orbit_invariant(e2)


def classify(embedding):
    """The entry of P_n whose ι lies in the orbit of the embedding."""
    n = embedding.n
    k = orbit_invariant(embedding)
    for entry in enumerate_pn(n):
        if orbit_invariant(iota(n, entry)) == k:
            return entry
    raise LatticeError(f"Glue class {k} does not match any entry of P_{n}")


def complement_vector(embedding):
    """The complement generator as a Mukai vector."""
    return MukaiVector.from_coordinates(complement_generator(embedding))


def mukai_isometry_from_reflections(count, seed=None, bound=3):
    """A product of `count` reflections in sampled roots of the Mukai lattice."""
    mukai = mukai_lattice()
    if count < 1:
        return mukai.identity()
    roots = sample_roots(mukai, count, seed=seed, bound=bound, emphasis=(0, 1))
    return reduce(lambda a, b: a @ b, (reflection(u) for u in roots), mukai.identity())


from fractions import Fraction
from unittest import TestCase

import numpy as np
from hypothesis import given
from hypothesis.strategies import integers, lists
from sympy import Matrix

from intlat import (
    DimensionMismatchError,
    Isometry,
    LatticeError,
    OutOfRangeError,
    SingularLatticeError,
    as_array,
    direct_sum,
    discriminant_group,
    e8_negative,
    hermite_rows,
    hilb_lattice,
    hyperbolic_plane,
    invariant_factors,
    is_isometry,
    k3_lattice,
    kernel_basis,
    make_standard,
    mukai_lattice,
    rank_one,
    snf,
    solve_integral,
)
from intlat import linalg
from intlat.lattice import Lattice


def _det(m):
    return int(Matrix([list(row) for row in m]).det(method="bareiss"))


def _signed_block_permutation(k, rng):
    """Random isometry of U^k: permute the planes, swap or negate inside each plane."""
    size = 2 * k
    m = [[0] * size for _ in range(size)]
    for source, target in enumerate(rng.permutation(k)):
        sign = int(rng.choice([-1, 1]))
        swap = bool(rng.integers(0, 2))
        for a in range(2):
            b = 1 - a if swap else a
            m[2 * target + b][2 * source + a] = sign
    return m


class StandardLatticeTests(TestCase):
    def test_hyperbolic_plane(self):
        u = make_standard("U")
        self.assertEqual(u.rank, 2)
        self.assertEqual(u.det, -1)
        self.assertEqual(u.signature, (1, 1))

    def test_e8_negative(self):
        e8 = make_standard("E8neg")
        self.assertEqual(e8.rank, 8)
        self.assertEqual(e8.det, 1)
        self.assertEqual(e8.signature, (0, 8))

    def test_k3(self):
        self.assertEqual(k3_lattice().rank, 22)
        self.assertEqual(k3_lattice().signature, (3, 19))
        self.assertEqual(abs(k3_lattice().det), 1)

    def test_mukai(self):
        mukai = make_standard("Mukai")
        self.assertEqual(mukai.rank, 24)
        self.assertEqual(mukai.signature, (4, 20))
        self.assertEqual(mukai.det, 1)

    def test_hilb_seven(self):
        hilb = make_standard("Hilb(7)")
        self.assertEqual(hilb.rank, 23)
        self.assertEqual(abs(hilb.det), 12)
        self.assertEqual(hilb.gram[22][22], -12)
        self.assertEqual(hilb.signature, (3, 20))

    def test_cli_spellings(self):
        self.assertEqual(make_standard("hilb:7"), hilb_lattice(7))
        self.assertEqual(make_standard("mukai"), mukai_lattice())
        self.assertEqual(make_standard("k3"), k3_lattice())

    def test_rejects_small_n(self):
        with self.assertRaises(OutOfRangeError):
            make_standard("Hilb(1)")

    def test_rejects_unknown_name(self):
        with self.assertRaises(LatticeError):
            make_standard("D4")

    def test_rejects_odd_gram(self):
        with self.assertRaises(LatticeError):
            Lattice(((1, 0), (0, 2)))

    def test_rejects_asymmetric_gram(self):
        with self.assertRaises(LatticeError):
            Lattice(((0, 1), (2, 0)))

    def test_json(self):
        model = hyperbolic_plane().to_json()
        self.assertEqual(model.model_dump(), {"label": "U", "rank": 2, "gram": [[0, 1], [1, 0]]})


class DirectSumTests(TestCase):
    def test_two_planes(self):
        lattice = direct_sum(hyperbolic_plane(), hyperbolic_plane())
        self.assertEqual(lattice.rank, 4)
        self.assertEqual(lattice.signature, (2, 2))
        self.assertEqual(lattice.label, "U+U")

    def test_k3_plus_delta_is_hilb(self):
        self.assertEqual(direct_sum(k3_lattice(), rank_one(-12)).gram, hilb_lattice(7).gram)

    def test_two_e8(self):
        lattice = direct_sum(e8_negative(), e8_negative())
        self.assertEqual(lattice.det, 1)
        self.assertEqual(lattice.signature, (0, 16))


class SmithFormTests(TestCase):
    def test_coprime_diagonal(self):
        S, _, _ = snf([[2, 0], [0, 3]])
        self.assertEqual(S, ((1, 0), (0, 6)))

    def test_unimodular(self):
        self.assertEqual(snf(hyperbolic_plane().gram).diagonal, (1, 1))

    def test_hilb_three(self):
        self.assertEqual(snf(hilb_lattice(3).gram).diagonal, (1,) * 22 + (4,))

    def test_random_round_trip(self):
        rng = np.random.default_rng(1729)
        for _ in range(1000):
            rows, cols = (int(x) for x in rng.integers(1, 13, size=2))
            m = rng.integers(-20, 21, size=(rows, cols)).tolist()
            S, P, Q = snf(m)
            product = np.array(P, dtype=object) @ np.array(m, dtype=object) @ np.array(Q, dtype=object)
            self.assertEqual(product.tolist(), [list(row) for row in S])
            self.assertIn(_det(P), (1, -1))
            self.assertIn(_det(Q), (1, -1))
            diagonal = [S[i][i] for i in range(min(rows, cols))]
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        self.assertEqual(S[i][j], 0)
            for a, b in zip(diagonal, diagonal[1:]):
                if b:
                    self.assertEqual(b % a, 0)
                self.assertGreaterEqual(a, 0)

    def test_empty_system(self):
        S, P, Q = snf([], cols=3)
        self.assertEqual(S, ())
        self.assertEqual(Q, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def test_invariant_factors(self):
        self.assertEqual(invariant_factors([[4, 0], [0, 6]]), (2, 12))


class IntegerLinearAlgebraTests(TestCase):
    def test_kernel_basis_matches_rank(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            m = rng.integers(-5, 6, size=(4, 7)).tolist()
            basis = kernel_basis(m)
            self.assertEqual(len(basis), 7 - Matrix(m).rank())
            for vector in basis:
                self.assertEqual([sum(a * x for a, x in zip(row, vector)) for row in m], [0] * 4)
            # integral basis: the kernel vectors span a saturated sublattice
            if basis:
                self.assertEqual(set(invariant_factors(basis)), {1})

    def test_kernel_without_constraints(self):
        self.assertEqual(kernel_basis([], cols=2), ((1, 0), (0, 1)))

    def test_hermite_rows(self):
        self.assertEqual(hermite_rows([[2, 4], [1, 3]]), ((1, 1), (0, 2)))

    def test_solve_integral(self):
        m = [[2, 3, 5], [1, -1, 4]]
        x = solve_integral(m, [10, 4])
        self.assertEqual([sum(a * v for a, v in zip(row, x)) for row in m], [10, 4])

    def test_solve_integral_without_solution(self):
        self.assertIsNone(solve_integral([[2, 4]], [1]))
        self.assertIsNone(solve_integral([[1, 0], [1, 0]], [1, 2]))


symmetric_entries = lists(integers(-4, 4), min_size=10, max_size=10)


def _symmetric(entries):
    m = [[0] * 4 for _ in range(4)]
    it = iter(entries)
    for i in range(4):
        for j in range(i, 4):
            m[i][j] = m[j][i] = next(it)
    return m


class RationalLinearAlgebraTests(TestCase):
    def test_solve(self):
        self.assertEqual(linalg.solve([[2, 1], [1, 3]], [1, 0]), [Fraction(3, 5), Fraction(-1, 5)])
        self.assertEqual(linalg.solve([[2, 0], [0, 4]], [[1, 0], [0, 1]]), [[Fraction(1, 2), 0], [0, Fraction(1, 4)]])

    def test_inverse(self):
        a = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
        product = (as_array(a) @ as_array(linalg.inverse(a))).tolist()
        self.assertEqual(product, [[int(i == j) for j in range(3)] for i in range(3)])

    def test_singular(self):
        with self.assertRaises(SingularLatticeError):
            linalg.solve([[1, 2], [2, 4]], [1, 0])
        with self.assertRaises(SingularLatticeError):
            linalg.inverse([[0, 0], [0, 0]])

    def test_shapes(self):
        with self.assertRaises(DimensionMismatchError):
            linalg.solve([[1, 2, 3], [4, 5, 6]], [1, 0])
        with self.assertRaises(DimensionMismatchError):
            linalg.solve([[1, 0], [0, 1]], [1, 0, 0])
        with self.assertRaises(DimensionMismatchError):
            linalg.determinant([[1, 0], [0]])

    def test_determinant(self):
        self.assertEqual(linalg.determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(linalg.determinant([[Fraction(1, 2), 1], [0, 4]]), 2)
        self.assertEqual(linalg.determinant([]), 1)

    def test_signature(self):
        self.assertEqual(linalg.signature(hyperbolic_plane().gram), (1, 1, 0))
        self.assertEqual(linalg.signature(e8_negative().gram), (0, 8, 0))
        self.assertEqual(linalg.signature([[1, 1], [1, 1]]), (1, 0, 1))
        self.assertEqual(linalg.signature([[0, 0], [0, 0]]), (0, 0, 2))
        self.assertEqual(linalg.signature([]), (0, 0, 0))

    def test_positive_definite(self):
        self.assertTrue(linalg.is_positive_definite([[2, 1], [1, 2]]))
        self.assertFalse(linalg.is_positive_definite([[1, 2], [2, 1]]))
        self.assertFalse(linalg.is_positive_definite([[1, 0], [0, 0]]))

    def test_integral_helpers(self):
        self.assertTrue(linalg.is_integral([[Fraction(4, 2), 1]]))
        self.assertFalse(linalg.is_integral([[Fraction(1, 2)]]))
        self.assertEqual(linalg.to_integers([[Fraction(4, 2), -1]]), ((2, -1),))

    @given(symmetric_entries)
    def test_signature_agrees_with_rank_and_det(self, entries):
        m = _symmetric(entries)
        positive, negative, null = linalg.signature(m)
        self.assertEqual(positive + negative + null, 4)
        self.assertEqual(positive + negative, Matrix(m).rank())
        if not null:
            self.assertEqual((-1) ** negative, 1 if _det(m) > 0 else -1)


class DiscriminantTests(TestCase):
    def test_mukai_is_unimodular(self):
        disc = discriminant_group(mukai_lattice())
        self.assertEqual(disc.cyclic_orders, ())
        self.assertEqual(disc.order, 1)

    def test_hilb_sweep(self):
        for n in range(2, 201):
            disc = discriminant_group(hilb_lattice(n))
            self.assertEqual(disc.cyclic_orders, (2 * n - 2,))
            self.assertEqual(disc.q_values[0], Fraction(-1, 2 * n - 2) % 2)

    def test_hilb_seven_generator_is_delta_over_twelve(self):
        disc = discriminant_group(hilb_lattice(7))
        self.assertEqual(disc.generator, (Fraction(0),) * 22 + (Fraction(-1, 12),))
        self.assertEqual(disc.q_values[0], Fraction(23, 12))
        self.assertEqual(disc.to_json().q, ["23/12"])

    def test_order_is_determinant(self):
        lattices = [
            direct_sum(hyperbolic_plane(), direct_sum(rank_one(-4), rank_one(6))),
            direct_sum(rank_one(2), rank_one(2)),
            direct_sum(e8_negative(), rank_one(-30)),
            Lattice(((2, 1), (1, 4))),
        ]
        for lattice in lattices:
            disc = discriminant_group(lattice)
            self.assertEqual(disc.order, abs(lattice.det))
        self.assertEqual(discriminant_group(lattices[0]).cyclic_orders, (2, 12))

    def test_singular_gram(self):
        with self.assertRaises(SingularLatticeError):
            discriminant_group(Lattice(((2, 2), (2, 2))))

    def test_coordinates_of_generator(self):
        disc = discriminant_group(hilb_lattice(5))
        self.assertEqual(disc.coordinates(disc.generator), (1,))
        self.assertEqual(disc.coordinates(disc.element((3,))), (3,))

    @given(lists(integers(-9, 9), min_size=23, max_size=23))
    def test_q_independent_of_lift(self, shift):
        disc = discriminant_group(hilb_lattice(7))
        x = disc.generator
        moved = tuple(a + b for a, b in zip(x, shift))
        self.assertEqual(disc.q(moved), disc.q(x))
        self.assertEqual(disc.coordinates(moved), disc.coordinates(x))

    @given(integers(-40, 40))
    def test_q_is_quadratic(self, a):
        disc = discriminant_group(direct_sum(rank_one(-4), rank_one(6)))
        for x, q in zip(disc.lift, disc.q_values):
            self.assertEqual(disc.q(tuple(a * t for t in x)), (a * a * q) % 2)


class IsometryTests(TestCase):
    def test_trivial_isometries(self):
        u = hyperbolic_plane()
        self.assertTrue(is_isometry(u, [[1, 0], [0, 1]]))
        self.assertTrue(is_isometry(u, [[-1, 0], [0, -1]]))
        self.assertTrue(is_isometry(u, [[0, 1], [1, 0]]))
        self.assertFalse(is_isometry(u, [[1, 1], [0, 1]]))

    def test_dimension_mismatch(self):
        with self.assertRaises(LatticeError):
            is_isometry(hyperbolic_plane(), [[1, 0, 0]])

    def test_closed_under_composition_and_inverse(self):
        rng = np.random.default_rng(11)
        u3 = direct_sum(direct_sum(hyperbolic_plane(), hyperbolic_plane()), hyperbolic_plane())
        for _ in range(100):
            g = Isometry(u3, _signed_block_permutation(3, rng))
            h = Isometry(u3, _signed_block_permutation(3, rng))
            self.assertTrue(is_isometry(u3, (g @ h).matrix))
            self.assertTrue((g @ g.inverse()).is_identity())
            self.assertIn(g.det, (1, -1))

    def test_primitivity_preserved(self):
        rng = np.random.default_rng(5)
        u3 = direct_sum(direct_sum(hyperbolic_plane(), hyperbolic_plane()), hyperbolic_plane())
        v = u3.vector((2, 3, 0, 5, 7, 1))
        for _ in range(20):
            g = Isometry(u3, _signed_block_permutation(3, rng))
            self.assertTrue(g.apply(v).is_primitive())
            self.assertFalse(g.apply(2 * v).is_primitive())

    @given(
        lists(integers(-5, 5), min_size=22, max_size=22),
        lists(integers(-5, 5), min_size=22, max_size=22),
        lists(integers(-5, 5), min_size=22, max_size=22),
        integers(-7, 7),
    )
    def test_pairing_is_symmetric_bilinear(self, x, y, z, a):
        k3 = k3_lattice()
        x, y, z = k3.vector(x), k3.vector(y), k3.vector(z)
        self.assertEqual(x.pairing(y), y.pairing(x))
        self.assertEqual((x + a * y).pairing(z), x.pairing(z) + a * y.pairing(z))
        self.assertEqual(x.norm % 2, 0)

from fractions import Fraction
from unittest import TestCase

from hypothesis import given
from hypothesis.strategies import builds, integers, lists

from intlat import (
    LatticeError,
    NotPrimitiveError,
    OutOfRangeError,
    SingularLatticeError,
    discriminant_group,
    hilb_lattice,
    k3_lattice,
    mukai_lattice,
)
from mukai import (
    Comparison,
    HilbertPoly,
    MukaiVector,
    chi,
    complement_basis,
    coprime_stability_shortcut,
    dimension,
    gieseker_compare,
    is_effective,
    mukai_pairing,
    orthogonal_complement,
    subsheaf_comparison,
)

mukai_vectors = builds(
    MukaiVector,
    integers(-6, 6),
    lists(integers(-4, 4), min_size=22, max_size=22),
    integers(-6, 6),
)

polynomials = builds(
    HilbertPoly,
    integers(-5, 5),
    integers(-5, 5),
    integers(-5, 5),
    integers(1, 4),
)


class MukaiPairingTests(TestCase):
    def test_ideal_sheaf_vector(self):
        for n in range(2, 12):
            v = MukaiVector.trivial(1, 1 - n)
            self.assertEqual(mukai_pairing(v, v), 2 * n - 2)
            self.assertEqual(dimension(v), 2 * n)

    def test_point_class_is_isotropic(self):
        point = MukaiVector.trivial(0, 1)
        self.assertEqual(mukai_pairing(point, point), 0)

    def test_rank_two(self):
        v = MukaiVector.parse("(2,0,-3)")
        self.assertEqual(v.pairing(v), 12)

    def test_coordinates_reproduce_pairing(self):
        v = MukaiVector(2, k3_lattice().basis_vector(0), -3)
        w = MukaiVector(1, k3_lattice().basis_vector(1), 5)
        self.assertEqual(mukai_lattice().pairing(v.coordinates(), w.coordinates()), mukai_pairing(v, w))
        self.assertEqual(MukaiVector.from_coordinates(v.coordinates()), v)

    def test_mismatched_lattices(self):
        v = MukaiVector.trivial(1, 0)
        w = MukaiVector(1, hilb_lattice(2).vector((0,) * 23), 0)
        with self.assertRaises(LatticeError):
            mukai_pairing(v, w)

    def test_parse_rejects_nonzero_c(self):
        with self.assertRaises(LatticeError):
            MukaiVector.parse("(1,2,3)")

    def test_json(self):
        self.assertEqual(MukaiVector.trivial(1, -6).to_json().model_dump()["s"], -6)

    @given(mukai_vectors, mukai_vectors, mukai_vectors, integers(-5, 5))
    def test_symmetric_bilinear_even(self, u, v, w, a):
        combined = MukaiVector(u.r + a * v.r, u.c + a * v.c, u.s + a * v.s)
        self.assertEqual(mukai_pairing(u, v), mukai_pairing(v, u))
        self.assertEqual(mukai_pairing(combined, w), mukai_pairing(u, w) + a * mukai_pairing(v, w))
        self.assertEqual(mukai_pairing(u, u) % 2, 0)


class EulerCharacteristicTests(TestCase):
    def test_examples(self):
        self.assertEqual(chi(MukaiVector.trivial(1, 1)), 2)
        self.assertEqual(chi(MukaiVector.trivial(0, 1)), 1)
        self.assertEqual(MukaiVector.trivial(2, -3).chi, -1)


class EffectivenessTests(TestCase):
    def test_ideal_sheaves(self):
        for n in range(2, 10):
            self.assertTrue(is_effective(MukaiVector.trivial(1, 1 - n), False))

    def test_point_class(self):
        self.assertTrue(is_effective(MukaiVector.trivial(0, 1), True))
        self.assertFalse(is_effective(MukaiVector.trivial(0, -1), True))

    def test_zero_vector(self):
        self.assertFalse(is_effective(MukaiVector.trivial(0, 0), True))

    def test_rank_zero_needs_effective_divisor(self):
        curve = MukaiVector(0, k3_lattice().vector((1, 1) + (0,) * 20), 0)
        self.assertTrue(is_effective(curve, True))
        self.assertFalse(is_effective(curve, False))

    def test_too_negative(self):
        self.assertFalse(is_effective(MukaiVector(1, k3_lattice().vector((1, -2) + (0,) * 20), 1), True))


class OrthogonalComplementTests(TestCase):
    def test_complement_is_hilb(self):
        for n in range(2, 13):
            v = MukaiVector.trivial(1, 1 - n)
            complement = orthogonal_complement(v)
            self.assertEqual(complement.rank, 23)
            self.assertEqual(complement.gram, hilb_lattice(n).gram)
            self.assertEqual(abs(complement.det), 2 * n - 2)
            self.assertEqual(discriminant_group(complement).cyclic_orders, (2 * n - 2,))

    def test_signature(self):
        self.assertEqual(orthogonal_complement(MukaiVector.trivial(1, -6)).signature, (3, 20))

    def test_hilb_two(self):
        disc = discriminant_group(orthogonal_complement(MukaiVector.trivial(1, -1)))
        self.assertEqual(disc.cyclic_orders, (2,))

    def test_basis_is_orthogonal_and_k3_first(self):
        v = MukaiVector.trivial(2, -3)
        basis = complement_basis(v)
        mukai = mukai_lattice()
        for vec in basis:
            self.assertEqual(mukai.pairing(vec, v.coordinates()), 0)
        self.assertTrue(all(vec[0] == 0 and vec[1] == 0 for vec in basis[:22]))

    def test_general_c(self):
        v = MukaiVector(1, k3_lattice().basis_vector(0), 1)
        self.assertEqual(mukai_pairing(v, v), -2)
        self.assertEqual(abs(orthogonal_complement(v).det), 2)

    def test_isotropic_vector(self):
        with self.assertRaises(SingularLatticeError):
            orthogonal_complement(MukaiVector.trivial(1, 0))

    def test_zero_and_imprimitive(self):
        with self.assertRaises(NotPrimitiveError):
            orthogonal_complement(MukaiVector.trivial(0, 0))
        with self.assertRaises(NotPrimitiveError):
            orthogonal_complement(MukaiVector.trivial(2, -4))


class GiesekerTests(TestCase):
    def test_examples(self):
        p = HilbertPoly(1, 0, 1, 1)
        q = HilbertPoly(1, 1, 0, 1)
        self.assertEqual(gieseker_compare(p, q), Comparison.LESS)
        self.assertEqual(gieseker_compare(q, p), Comparison.GREATER)
        self.assertEqual(gieseker_compare(p, p), Comparison.EQUAL)

    def test_normalization(self):
        self.assertEqual(gieseker_compare(HilbertPoly(2, 2, 2, 2), HilbertPoly(1, 1, 1, 1)), Comparison.EQUAL)

    def test_nonpositive_normalizer(self):
        with self.assertRaises(OutOfRangeError):
            gieseker_compare(HilbertPoly(1, 0, 0, 0), HilbertPoly(1, 0, 0, 1))

    def test_riemann_roch(self):
        poly = HilbertPoly.from_sheaf_data(r=2, h2=2, h_c1=0, c1_sq=0, c2=5)
        self.assertEqual((poly.a2, poly.a1, poly.a0, poly.l0), (Fraction(2), Fraction(0), Fraction(-1), 4))
        self.assertEqual(poly(3), 17)
        self.assertEqual(HilbertPoly.from_sheaf_data(0, 2, 3, 0, 0, support_dim=1).l0, 3)
        self.assertEqual(HilbertPoly.from_sheaf_data(0, 2, 0, 0, -4, support_dim=0).l0, 4)

    def test_same_slope_subsheaf_is_smaller(self):
        v = MukaiVector.trivial(2, -3)
        self.assertTrue(coprime_stability_shortcut(v))
        # an ideal sheaf of three points: rank 1, chi = -1
        self.assertEqual(subsheaf_comparison(v, 1, -1, 2), Comparison.LESS)
        self.assertEqual(subsheaf_comparison(v, 2, -1, 2), Comparison.EQUAL)

    def test_coprimality(self):
        self.assertFalse(coprime_stability_shortcut(MukaiVector.trivial(2, -4)))
        self.assertTrue(coprime_stability_shortcut(MukaiVector.trivial(1, -6)))
        self.assertFalse(coprime_stability_shortcut(MukaiVector.trivial(0, 1)))

    @given(polynomials, polynomials, polynomials)
    def test_total_preorder(self, p, q, r):
        pq, qp = gieseker_compare(p, q), gieseker_compare(q, p)
        mirror = {Comparison.LESS: Comparison.GREATER, Comparison.GREATER: Comparison.LESS,
                  Comparison.EQUAL: Comparison.EQUAL}
        self.assertEqual(qp, mirror[pq])
        if pq != Comparison.GREATER and gieseker_compare(q, r) != Comparison.GREATER:
            self.assertNotEqual(gieseker_compare(p, r), Comparison.GREATER)

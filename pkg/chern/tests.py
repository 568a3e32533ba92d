from fractions import Fraction
from math import factorial
from unittest import TestCase

from hypothesis import given
from hypothesis.strategies import integers, lists

from chern import (
    GradedRing,
    character_to_chern,
    chern_classes,
    chern_ring,
    chern_to_character,
    falling_binomial,
    newton_round_trip,
    psi_minus_sigma,
    psi_ring,
    verify_sigma_linear,
    verify_twist_formula,
    whitney_sum,
)
from intlat import DimensionMismatchError, OutOfRangeError

coefficients = lists(integers(-3, 3), min_size=7, max_size=7)


def _element(ring, coeffs):
    c1, c2, c3 = chern_classes(ring, "c", 3)
    basis = [ring.one(), c1, c2, c1 * c1, c3, c1 * c2, c1 * c1 * c1]
    return sum((a * b for a, b in zip(coeffs, basis)), ring.zero())


class GradedRingTests(TestCase):
    def setUp(self):
        self.ring = chern_ring(3)
        self.c1, self.c2, self.c3 = chern_classes(self.ring, "c", 3)

    def test_truncation(self):
        self.assertTrue((self.c3 * self.c1).is_zero())
        self.assertEqual((self.c1 * self.c2).degree(), 6)

    def test_modulo(self):
        self.assertEqual((self.c1 * self.c1 + self.c2).modulo(2), self.c2)
        self.assertTrue((self.c1 * self.c1).in_subring(2))
        self.assertFalse(self.c2.in_subring(2))

    def test_format(self):
        self.assertEqual(chern_to_character(2)[1].format(), "1/2*c1^2 - c2")
        self.assertEqual(self.ring.zero().format(), "0")
        self.assertEqual((3 - self.c1).format(), "-c1 + 3")

    def test_from_terms(self):
        x = self.ring.from_terms({(2, 0, 0): Fraction(1, 2), (0, 1, 0): -1})
        self.assertEqual(x, Fraction(1, 2) * self.c1 * self.c1 - self.c2)
        self.assertTrue(self.ring.from_terms({(1, 0, 1): 5}).is_zero())
        with self.assertRaises(DimensionMismatchError):
            self.ring.from_terms({(1, 0): 1})

    def test_coefficient(self):
        x = Fraction(1, 3) * self.c1 * self.c2 - self.c3
        self.assertEqual(x.coefficient(self.c1 * self.c2), Fraction(1, 3))
        self.assertEqual(x.coefficient(self.c3), -1)
        self.assertEqual(x.coefficient(self.c1), 0)

    def test_rejects_odd_degrees(self):
        with self.assertRaises(OutOfRangeError):
            GradedRing((("c1", 3),), 6)
        with self.assertRaises(OutOfRangeError):
            GradedRing((("c1", 2),), 5)

    def test_mixed_rings(self):
        with self.assertRaises(DimensionMismatchError):
            self.c1 + chern_ring(2).gen("c1")

    def test_unknown_generator(self):
        with self.assertRaises(OutOfRangeError):
            self.ring.gen("c9")

    @given(coefficients, coefficients, coefficients)
    def test_commutative_and_associative(self, a, b, c):
        x, y, z = (_element(self.ring, coeffs) for coeffs in (a, b, c))
        self.assertEqual(x * y, y * x)
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)

    def test_falling_binomial(self):
        ring = GradedRing((("c1", 2),), 2, ("r",))
        r = ring.gen("r")
        self.assertEqual(falling_binomial(r, 2).substitute({"r": 5}), 10)
        self.assertEqual(falling_binomial(r - 3, 0), 1)


class NewtonTests(TestCase):
    def test_low_degrees(self):
        ring = chern_ring(3)
        c1, c2, c3 = chern_classes(ring, "c", 3)
        ch1, ch2, ch3 = chern_to_character(3)
        self.assertEqual(ch1, c1)
        self.assertEqual(ch2, c1 * c1 / 2 - c2)
        self.assertEqual(ch3, (c1 ** 3 - 3 * c1 * c2 + 3 * c3) / 6)

    def test_leading_coefficients(self):
        ring = chern_ring(8)
        c = chern_classes(ring, "c", 8)
        for i, ch in enumerate(chern_to_character(8), start=1):
            self.assertEqual(ch.coefficient(c[i - 1]), Fraction((-1) ** (i - 1), factorial(i - 1)))

    def test_denominators_divide_factorial(self):
        for i, ch in enumerate(chern_to_character(8), start=1):
            for coefficient in ch.terms.values():
                self.assertEqual(factorial(i) % coefficient.denominator, 0)

    def test_inverse(self):
        ring = chern_ring(2, prefix="ch")
        ch1, ch2 = chern_classes(ring, "ch", 2)
        c1, c2 = character_to_chern(2)
        self.assertEqual(c1, ch1)
        self.assertEqual(c2, ch1 * ch1 / 2 - ch2)

    def test_round_trip(self):
        self.assertTrue(newton_round_trip(12))

    def test_rejects_empty(self):
        with self.assertRaises(OutOfRangeError):
            chern_to_character(0)


class WhitneyTests(TestCase):
    def test_associative(self):
        k = 4
        ring = GradedRing(tuple((f"c{j}_{v}", 2 * j) for v in "xyz" for j in range(1, k + 1)), 2 * k)
        x, y, z = (chern_classes(ring, "c", k, f"_{v}") for v in "xyz")
        self.assertEqual(whitney_sum(x, whitney_sum(y, z)), whitney_sum(whitney_sum(x, y), z))

    def test_first_classes_add(self):
        ring = GradedRing((("c1_x", 2), ("c2_x", 4), ("c1_y", 2), ("c2_y", 4)), 4)
        x, y = chern_classes(ring, "c", 2, "_x"), chern_classes(ring, "c", 2, "_y")
        c1, c2 = whitney_sum(x, y)
        self.assertEqual(c1, x[0] + y[0])
        self.assertEqual(c2, x[1] + x[0] * y[0] + y[1])


class SigmaLinearTests(TestCase):
    def test_degree_three_residual(self):
        check = verify_sigma_linear(3)
        self.assertTrue(check)
        ring = check.residual.ring
        x, y = ring.gen("c1_x"), ring.gen("c1_y")
        self.assertEqual(check.residual, -(x + y) * x * y)

    def test_range(self):
        for i in range(3, 9):
            self.assertTrue(verify_sigma_linear(i), i)

    def test_degree_four_has_middle_terms(self):
        residual = verify_sigma_linear(4).residual
        ring = residual.ring
        self.assertEqual(residual.coefficient(ring.gen("c2_x") * ring.gen("c2_y")), 1)

    def test_degree_two_is_additive(self):
        check = verify_sigma_linear(2)
        self.assertTrue(check)
        self.assertTrue(check.residual.is_zero())

    def test_rejects_small_i(self):
        with self.assertRaises(OutOfRangeError):
            verify_sigma_linear(1)

    def test_json(self):
        self.assertEqual(verify_sigma_linear(3).to_json().residual, "-c1_x^2*c1_y - c1_x*c1_y^2")


class TwistTests(TestCase):
    def test_range(self):
        for i in range(1, 9):
            self.assertTrue(verify_twist_formula(i), i)

    def test_low_degrees_are_exact(self):
        for i in (1, 2):
            self.assertTrue(verify_twist_formula(i).residual.is_zero())

    def test_rejects_zero(self):
        with self.assertRaises(OutOfRangeError):
            verify_twist_formula(0)


class PsiMinusSigmaTests(TestCase):
    def test_coefficient(self):
        x = psi_minus_sigma(3, 4)
        ring = psi_ring(3)
        self.assertEqual(x.coefficient(ring.gen("c2_ux") * ring.gen("c1_uw")), Fraction(1, 3))
        self.assertEqual(len(x.terms), 1)

    def test_warm_up_case(self):
        x = psi_minus_sigma(2, 3)
        self.assertEqual(len(x.terms), 2)
        ring = psi_ring(2)
        uw = ring.gen("c1_uw")
        self.assertEqual(x.substitute({"c1_ux": uw, "vx": 0}), uw * uw / 2)

    def test_rejects_small_n(self):
        with self.assertRaises(OutOfRangeError):
            psi_minus_sigma(3, 1)

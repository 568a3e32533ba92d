from functools import lru_cache, reduce
from math import prod
from unittest import TestCase

from hypothesis import given
from hypothesis.strategies import integers, lists
from sympy import primefactors

from intlat import (
    DimensionMismatchError,
    InsufficientGeneratorsError,
    LatVec,
    LatticeError,
    NotAnIsometryError,
    NotInWError,
    OutOfRangeError,
    e8_negative,
    hilb_lattice,
    mukai_lattice,
)
from monodromy import (
    OrientedLattice,
    ResidualAction,
    ext_to_mukai,
    fundamental_unit,
    hilbert_mukai_pair,
    in_W,
    is_elementary_abelian,
    mu,
    orientation_character,
    reflection,
    residual_action,
    residual_orthogonal_group,
    residual_sign_of_extension,
    sample_roots,
    signed_reflection,
    trace_criterion,
    w_index,
)

DELTA = 22


def _unit(lattice, i, scale=1):
    return tuple(scale * int(i == j) for j in range(lattice.rank))


def _hilb_vector(lattice, **entries):
    coords = [0] * lattice.rank
    for key, value in entries.items():
        coords[DELTA if key == "delta" else int(key[1:])] = value
    return LatVec(lattice, tuple(coords))


def _polarization(lattice, degree):
    """h = e + (degree/2)·f in the first hyperbolic plane, (h,h) = degree."""
    return _hilb_vector(lattice, e0=1, e1=degree // 2)


def _degree_example(degree):
    """The signed reflection in w0 = 2h + δ on Hilb(7)."""
    lattice = hilb_lattice(7)
    w0 = 2 * _polarization(lattice, degree) + _hilb_vector(lattice, delta=1)
    return signed_reflection(w0)


def _extend(n, u):
    pair = hilbert_mukai_pair(n)
    coords = pair.embedding @ list(u.coords)
    return LatVec(pair.mukai, tuple(int(x) for x in coords))


def _random_word(roots, indices):
    return reduce(lambda a, b: a @ b, (reflection(roots[i]) for i in indices))


@lru_cache(maxsize=None)
def _isometry_pool(n):
    """-id, reflections in sampled roots, and the integral signed reflections in a·e + b·f + c·δ."""
    hilb = hilb_lattice(n)
    pool = [-hilb.identity()]
    pool += [reflection(u) for u in sample_roots(hilb, 3, seed=n, emphasis=(DELTA,))]
    for a in range(-2, 3):
        for b in range(-2, 3):
            for c in (1, 2):
                try:
                    pool.append(signed_reflection(_hilb_vector(hilb, e0=a, e1=b, delta=c)))
                except LatticeError:
                    continue
    return tuple(pool)


class ReflectionTests(TestCase):
    def setUp(self):
        self.lattice = hilb_lattice(7)

    def test_negative_root_is_negated(self):
        u = _hilb_vector(self.lattice, e0=1, e1=-1)
        self.assertEqual(u.norm, -2)
        rho = reflection(u)
        self.assertEqual(rho.apply(u), -u)
        self.assertTrue((rho @ rho).is_identity())

    def test_positive_root_is_fixed_and_complement_negated(self):
        u = _hilb_vector(self.lattice, e0=1, e1=1)
        rho = reflection(u)
        self.assertEqual(rho.apply(u), u)
        other = self.lattice.basis_vector(2)
        self.assertEqual(rho.apply(other), -other)
        self.assertTrue((rho @ rho).is_identity())

    def test_rejects_non_roots(self):
        with self.assertRaises(OutOfRangeError):
            reflection(_hilb_vector(self.lattice, e0=1, e1=-2))
        with self.assertRaises(OutOfRangeError):
            signed_reflection(self.lattice.basis_vector(0))

    def test_non_integral_reflection(self):
        with self.assertRaises(NotAnIsometryError):
            signed_reflection(_hilb_vector(self.lattice, e0=1, e1=-3))

    def test_sampled_roots(self):
        roots = sample_roots(self.lattice, 20, seed=3, emphasis=(DELTA,))
        self.assertEqual(len(roots), 20)
        self.assertTrue(all(u.norm == -2 for u in roots))
        self.assertEqual(len({u.coords for u in roots}), 20)
        self.assertEqual(roots, sample_roots(self.lattice, 20, seed=3, emphasis=(DELTA,)))

    def test_sampling_without_hyperbolic_planes(self):
        roots = sample_roots(e8_negative(), 5, seed=1)
        self.assertTrue(all(u.norm == -2 for u in roots))

    def test_sampling_gives_up(self):
        with self.assertRaises(InsufficientGeneratorsError):
            sample_roots(e8_negative(), 5, seed=1, norm=-100)


class OrientationTests(TestCase):
    def test_identity_and_minus_identity(self):
        hilb, mukai = hilb_lattice(4), mukai_lattice()
        self.assertEqual(orientation_character(OrientedLattice.standard(hilb), hilb.identity()), 1)
        self.assertEqual(orientation_character(OrientedLattice.standard(hilb), -hilb.identity()), -1)
        self.assertEqual(orientation_character(OrientedLattice.standard(mukai), -mukai.identity()), 1)

    def test_reflection_characters(self):
        hilb = hilb_lattice(3)
        oriented = OrientedLattice.standard(hilb)
        negative = reflection(_hilb_vector(hilb, e0=1, e1=-1))
        positive = reflection(_hilb_vector(hilb, e0=1, e1=1))
        self.assertEqual(orientation_character(oriented, negative), 1)
        self.assertEqual(orientation_character(oriented, positive), 1)
        self.assertEqual(orientation_character(oriented, -positive), -1)

    def test_character_is_multiplicative(self):
        hilb = hilb_lattice(5)
        oriented = OrientedLattice.standard(hilb)
        roots = sample_roots(hilb, 6, seed=11, emphasis=(DELTA,))
        elements = [reflection(u) for u in roots] + [-hilb.identity()]
        for a in elements:
            for b in elements:
                self.assertEqual(
                    orientation_character(oriented, a @ b),
                    orientation_character(oriented, a) * orientation_character(oriented, b),
                )

    def test_frame_must_match_signature(self):
        hilb = hilb_lattice(2)
        with self.assertRaises(LatticeError):
            OrientedLattice(hilb, (_unit(hilb, 0),))


class ResidualTests(TestCase):
    def test_identity(self):
        hilb = hilb_lattice(7)
        self.assertEqual(residual_action(hilb, hilb.identity()), ResidualAction(1, 12))
        self.assertEqual(residual_action(hilb, -hilb.identity()).signed(), -1)

    def test_degree_two_example(self):
        f = _degree_example(2)
        lattice = f.lattice
        h, delta = _polarization(lattice, 2), _hilb_vector(lattice, delta=1)
        self.assertEqual(f.apply(delta), -12 * h - 5 * delta)
        action = residual_action(lattice, f)
        self.assertEqual(action.signed(), -5)
        self.assertFalse(action.is_sign())

    def test_degree_four_example(self):
        action = residual_action(hilb_lattice(7), _degree_example(4))
        self.assertEqual(action.multiplier, (-7) % 12)
        self.assertFalse(action.is_sign())

    def test_reflections_act_trivially(self):
        hilb = hilb_lattice(6)
        for u in sample_roots(hilb, 10, seed=5, emphasis=(DELTA,)):
            self.assertEqual(residual_action(hilb, reflection(u)).multiplier, 1)

    def test_wrong_lattice(self):
        with self.assertRaises(DimensionMismatchError):
            residual_action(hilb_lattice(3), hilb_lattice(4).identity())

    def test_action_composition(self):
        a, b = ResidualAction(5, 12), ResidualAction(7, 12)
        self.assertEqual((a * b).multiplier, 11)
        self.assertEqual((a * b).sign, -1)
        with self.assertRaises(DimensionMismatchError):
            a * ResidualAction(1, 10)

    def test_modulus_two_prefers_plus(self):
        self.assertEqual(ResidualAction(1, 2).sign, 1)


class ReflectionWordTests(TestCase):
    def test_pool_has_non_sign_multipliers(self):
        hilb = hilb_lattice(7)
        multipliers = {residual_action(hilb, g).multiplier for g in _isometry_pool(7)}
        self.assertIn(7, multipliers)
        self.assertIn(11, multipliers)

    @given(integers(2, 12), lists(integers(0, 10 ** 6), min_size=1, max_size=5))
    def test_residual_and_orientation_are_multiplicative(self, n, picks):
        hilb = hilb_lattice(n)
        oriented = OrientedLattice.standard(hilb)
        pool = _isometry_pool(n)
        word = [pool[i % len(pool)] for i in picks]
        product = reduce(lambda a, b: a @ b, word)

        residual = residual_action(hilb, product)
        self.assertEqual(residual, reduce(lambda a, b: a * b, (residual_action(hilb, g) for g in word)))
        self.assertIn(residual.multiplier, residual_orthogonal_group(n))
        self.assertEqual(
            orientation_character(oriented, product),
            prod(orientation_character(oriented, g) for g in word),
        )


class ResidualGroupTests(TestCase):
    def test_small_cases(self):
        self.assertEqual(residual_orthogonal_group(7), [1, 5, 7, 11])
        self.assertEqual(residual_orthogonal_group(2), [1])
        self.assertEqual(len(residual_orthogonal_group(6)), 2)

    def test_order_is_power_of_two(self):
        for n in range(2, 5001):
            group = residual_orthogonal_group(n)
            self.assertEqual(len(group), 2 ** len(primefactors(n - 1)), n)

    def test_elementary_abelian(self):
        for n in range(2, 400):
            self.assertTrue(is_elementary_abelian(residual_orthogonal_group(n), 2 * n - 2), n)

    def test_w_index(self):
        self.assertEqual([w_index(n) for n in range(2, 7)], [1] * 5)
        self.assertEqual(w_index(7), 2)
        self.assertEqual(w_index(31), 4)
        for n in range(3, 5001):
            self.assertEqual(w_index(n), 2 ** (len(primefactors(n - 1)) - 1), n)

    def test_moduli_beyond_machine_integers(self):
        for n in (2 ** 40 + 1, 10 ** 12 + 1, 3 * 5 * 7 * 11 * 13 * 10 ** 9 + 1):
            group = residual_orthogonal_group(n)
            self.assertEqual(len(group), 2 ** len(primefactors(n - 1)), n)
            for a in group:
                self.assertLess(a, 2 * n - 2)
                self.assertEqual(a * a % (4 * n - 4), 1)
        self.assertEqual(residual_orthogonal_group(2 ** 40 + 1), [1, 2 ** 41 - 1])

    def test_rejects_small_n(self):
        with self.assertRaises(OutOfRangeError):
            residual_orthogonal_group(1)


class MembershipTests(TestCase):
    def test_reflection_words_are_members(self):
        hilb = hilb_lattice(7)
        oriented = OrientedLattice.standard(hilb)
        roots = sample_roots(hilb, 12, seed=7, emphasis=(DELTA,))
        for length in range(1, 7):
            word = _random_word(roots, [(length * k) % len(roots) for k in range(1, length + 1)])
            result = in_W(oriented, word)
            self.assertTrue(result)
            self.assertIsNotNone(result.extension)

    def test_examples_are_not_members(self):
        hilb = hilb_lattice(7)
        oriented = OrientedLattice.standard(hilb)
        for degree in (2, 4):
            result = in_W(oriented, _degree_example(degree))
            self.assertFalse(result)
            self.assertEqual(result.orientation, 1)
            self.assertIsNone(result.extension)

    def test_minus_identity_is_not_a_member(self):
        hilb = hilb_lattice(7)
        result = in_W(OrientedLattice.standard(hilb), -hilb.identity())
        self.assertFalse(result)
        self.assertEqual(result.orientation, -1)


class ExtensionTests(TestCase):
    def test_identity(self):
        for n in (2, 3, 7):
            hilb = hilb_lattice(n)
            self.assertTrue(ext_to_mukai(hilb.identity()).is_identity())
            self.assertTrue(mu(mukai_lattice().identity(), n).is_identity())

    def test_reflection_in_delta(self):
        hilb = hilb_lattice(2)
        rho = reflection(_hilb_vector(hilb, delta=1))
        gtilde = ext_to_mukai(rho)
        pair = hilbert_mukai_pair(2)
        self.assertEqual(gtilde.apply(pair.w_coords), pair.w_coords)
        self.assertEqual(mu(gtilde, 2), rho)

    def test_reflections_extend_to_reflections(self):
        hilb = hilb_lattice(5)
        for u in sample_roots(hilb, 8, seed=2, emphasis=(DELTA,)):
            rho = reflection(u)
            gtilde = reflection(_extend(5, u))
            self.assertEqual(ext_to_mukai(rho), gtilde)
            self.assertEqual(mu(gtilde, 5), rho)
            self.assertEqual(residual_sign_of_extension(gtilde, 5), 1)

    def test_orientation_reversing_extension(self):
        # s_x for a positive root x of w^⊥ fixes w and has η̃ = -1
        hilb = hilb_lattice(4)
        x = _hilb_vector(hilb, e0=1, e1=1)
        gtilde = -reflection(_extend(4, x))
        self.assertEqual(residual_sign_of_extension(gtilde, 4), 1)
        g = mu(gtilde, 4)
        self.assertEqual(g, reflection(x))
        self.assertEqual(ext_to_mukai(g), -gtilde)
        self.assertEqual(residual_sign_of_extension(ext_to_mukai(g), 4), -1)

    def test_round_trips_on_words(self):
        n = 6
        hilb = hilb_lattice(n)
        roots = sample_roots(hilb, 6, seed=13, emphasis=(DELTA,))
        for k in range(1, 6):
            g = _random_word(roots, range(k))
            self.assertEqual(mu(ext_to_mukai(g), n), g)

    def test_kernel_for_n_two(self):
        pair = hilbert_mukai_pair(2)
        rho_w = reflection(LatVec(pair.mukai, pair.w_coords))
        self.assertTrue(mu(rho_w, 2).is_identity())

    def test_examples_do_not_extend(self):
        for degree in (2, 4):
            with self.assertRaises(NotInWError):
                ext_to_mukai(_degree_example(degree))
        with self.assertRaises(NotInWError):
            ext_to_mukai(-hilb_lattice(3).identity())


class TraceCriterionTests(TestCase):
    def test_examples(self):
        self.assertTrue(trace_criterion(3, 2))
        self.assertFalse(trace_criterion(7, 2))

    def test_squares_and_zero(self):
        for m in (0, 1, 4, 9, 16):
            self.assertTrue(trace_criterion(7, m))

    def test_fundamental_units(self):
        self.assertEqual(fundamental_unit(2), (3, 2))
        self.assertEqual(fundamental_unit(61), (1766319049, 226153980))

    def test_odd_trace_modulo_four(self):
        # 2 + √3 has trace 4 ≡ 0 mod 4
        self.assertFalse(trace_criterion(2, 3))

    def test_rejects_negative(self):
        with self.assertRaises(OutOfRangeError):
            trace_criterion(3, -1)

from unittest import TestCase

from sympy import Matrix, primefactors

from intlat import (
    DimensionMismatchError,
    NotAnIsometryError,
    NotPrimitiveError,
    OutOfRangeError,
    hilb_lattice,
    invariant_factors,
    mukai_lattice,
)
from moduli import (
    Embedding,
    PnEntry,
    classify,
    complement_generator,
    complement_vector,
    count_nonbirational,
    enumerate_pn,
    example7_report,
    expected_count,
    iota,
    mukai_isometry_from_reflections,
    orbit_invariant,
    same_orbit,
)
from mukai import MukaiVector


def _pairs(n):
    return [entry.as_pair() for entry in enumerate_pn(n)]


def _delta_embedding(n, a, b):
    """K3 identically, δ to the Mukai coordinates (a, b)."""
    matrix = [[0] * 23 for _ in range(24)]
    for i in range(22):
        matrix[i + 2][i] = 1
    matrix[0][22], matrix[1][22] = a, b
    return Embedding(hilb_lattice(n), mukai_lattice(), matrix)


class PnTests(TestCase):
    def test_examples(self):
        self.assertEqual(_pairs(7), [(1, -6), (2, -3)])
        self.assertEqual(_pairs(2), [(1, -1)])
        self.assertEqual(_pairs(31), [(1, -30), (2, -15), (3, -10), (5, -6)])

    def test_counts(self):
        self.assertEqual([count_nonbirational(n) for n in range(2, 7)], [1] * 5)
        self.assertEqual(count_nonbirational(7), 2)
        self.assertEqual(count_nonbirational(211), 8)

    def test_sweep(self):
        for n in range(2, 20001):
            entries = enumerate_pn(n)
            self.assertEqual(len(entries), expected_count(n), n)
            self.assertEqual(len(entries), 2 ** max(len(primefactors(n - 1)) - 1, 0), n)
            self.assertEqual(len(set(entries)), len(entries))
            for entry in entries:
                self.assertEqual(entry.r * entry.s, 1 - n)

    def test_entry_invariants(self):
        with self.assertRaises(OutOfRangeError):
            PnEntry(2, -2)
        with self.assertRaises(OutOfRangeError):
            PnEntry(3, -2)
        with self.assertRaises(OutOfRangeError):
            PnEntry(0, -1)

    def test_rejects_small_n(self):
        with self.assertRaises(OutOfRangeError):
            enumerate_pn(1)

    def test_mukai_vectors(self):
        entry = PnEntry(2, -3)
        self.assertEqual(entry.n, 7)
        self.assertEqual(entry.complement, MukaiVector.trivial(2, -3))
        self.assertEqual(entry.delta_image, MukaiVector.trivial(2, 3))


class EmbeddingTests(TestCase):
    def test_complement_of_iota(self):
        c = complement_vector(iota(7, PnEntry(1, -6)))
        self.assertEqual(c, MukaiVector.trivial(1, -6))
        self.assertEqual(c.pairing(c), 12)
        c = complement_vector(iota(2, (1, -1)))
        self.assertEqual(c, MukaiVector.trivial(1, -1))
        self.assertEqual(c.pairing(c), 2)

    def test_image_is_primitive(self):
        for n in range(2, 51):
            for entry in enumerate_pn(n):
                embedding = iota(n, entry)
                self.assertEqual(set(invariant_factors(embedding.matrix)), {1})
                self.assertEqual(complement_vector(embedding), entry.complement)

    def test_image_and_complement_have_index_n(self):
        for n in (2, 7, 31):
            for entry in enumerate_pn(n):
                embedding = iota(n, entry)
                c = complement_generator(embedding)
                columns = [list(row) + [x] for row, x in zip(embedding.matrix, c)]
                self.assertEqual(abs(Matrix(columns).det()), 2 * n - 2)
                self.assertEqual(mukai_lattice().pairing(embedding.image(hilb_lattice(n).basis_vector(22).coords), c), 0)

    def test_rejects_wrong_entry(self):
        with self.assertRaises(OutOfRangeError):
            iota(7, (1, -5))

    def test_rejects_non_isometric_matrix(self):
        with self.assertRaises(NotAnIsometryError):
            _delta_embedding(7, 1, -5)

    def test_rejects_imprimitive_image(self):
        with self.assertRaises(NotPrimitiveError):
            _delta_embedding(5, 2, -2)

    def test_json(self):
        model = iota(7, (2, -3)).to_json()
        self.assertEqual(model.complement_norm, 12)
        self.assertEqual(model.complement.r, 2)


class OrbitTests(TestCase):
    def test_same_embedding(self):
        e = iota(7, (1, -6))
        self.assertTrue(same_orbit(e, e))

    def test_distinct_entries(self):
        self.assertFalse(same_orbit(iota(7, (1, -6)), iota(7, (2, -3))))

    def test_glue_classes(self):
        self.assertEqual(orbit_invariant(iota(7, (1, -6))), 1)
        self.assertEqual(orbit_invariant(iota(7, (2, -3))), 5)

    def test_invariant_under_mukai_isometries(self):
        for seed in range(4):
            g = mukai_isometry_from_reflections(5, seed=seed)
            for entry in enumerate_pn(7):
                e = iota(7, entry)
                moved = e.postcompose(g)
                self.assertTrue(same_orbit(e, moved))
                self.assertEqual(classify(moved), entry)

    def test_minus_identity(self):
        e = iota(31, (3, -10))
        self.assertTrue(same_orbit(e, e.postcompose(-mukai_lattice().identity())))

    def test_number_of_classes(self):
        for n in (2, 7, 31, 211):
            entries = enumerate_pn(n)
            classes = {orbit_invariant(iota(n, entry)) for entry in entries}
            self.assertEqual(len(classes), len(entries))

    def test_mismatched_sources(self):
        with self.assertRaises(DimensionMismatchError):
            same_orbit(iota(7, (1, -6)), iota(3, (1, -2)))

    def test_trivial_isometry(self):
        self.assertTrue(mukai_isometry_from_reflections(0).is_identity())


class GenusTwoExampleTests(TestCase):
    def setUp(self):
        self.report = example7_report()
        self.cases = {case.degree: case for case in self.report.cases}

    def test_degree_two(self):
        case = self.cases[2]
        self.assertEqual(case.w0_norm, -4)
        expected = [-12, -12] + [0] * 20 + [-5]
        self.assertEqual(case.delta_image, expected)
        self.assertTrue(case.is_isometry)
        self.assertEqual(case.orientation, 1)
        self.assertEqual(case.residual_signed, -5)
        self.assertEqual(case.modulus, 12)
        self.assertFalse(case.in_w)
        self.assertIsNotNone(case.ext_error)

    def test_degree_four(self):
        case = self.cases[4]
        self.assertEqual(case.w0_norm, 4)
        self.assertEqual((case.residual + 7) % 12, 0)
        self.assertEqual(case.orientation, 1)
        self.assertFalse(case.in_w)
        self.assertIsNotNone(case.ext_error)

    def test_json(self):
        self.assertIn("cases", self.report.model_dump())

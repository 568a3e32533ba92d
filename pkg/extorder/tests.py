from unittest import TestCase

from intlat import (
    DimensionMismatchError,
    OutOfRangeError,
    direct_sum,
    e8_negative,
    hilb_lattice,
    hyperbolic_plane,
    mukai_lattice,
)
from extorder import (
    EquivariantSystem,
    FinCyclicExt,
    cyclic_ext_order,
    equivariant_hom,
    master_order,
    master_order_table,
    mu_kernel,
    mukai_middle_ext_order,
    sample_root_reflections,
    splitting_search,
)
from extorder.equivariant import MIN_GENERATORS


def _identity(size):
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def _scaled(m, k):
    return tuple(tuple(k * x for x in row) for row in m)


class CyclicExtensionTests(TestCase):
    def test_examples(self):
        self.assertEqual(cyclic_ext_order(12, 1), 1)
        self.assertEqual(cyclic_ext_order(6, 4), 2)
        self.assertEqual(cyclic_ext_order(7, 0), 7)
        self.assertEqual(cyclic_ext_order(-6, 4), 2)
        self.assertEqual(FinCyclicExt(9, 6).order, 3)

    def test_rejects_zero(self):
        with self.assertRaises(OutOfRangeError):
            cyclic_ext_order(0, 5)
        with self.assertRaises(OutOfRangeError):
            splitting_search(0, 5)

    def test_matches_splitting_search(self):
        for d in range(1, 61):
            for e in range(1, 61):
                self.assertEqual(splitting_search(d, e), cyclic_ext_order(d, e), (d, e))
        self.assertEqual(splitting_search(6, 0), 6)

    def test_search_limit(self):
        with self.assertRaises(OutOfRangeError):
            splitting_search(200, 100, limit=10_000)


class EquivariantHomTests(TestCase):
    def setUp(self):
        self.lattice = direct_sum(hyperbolic_plane(), e8_negative())
        self.reflections = sample_root_reflections(self.lattice, 30, seed=17)
        self.pairs = tuple((g, g) for g in self.reflections)

    def test_no_generators_on_hilb_two(self):
        hilb = hilb_lattice(2)
        solution = equivariant_hom(EquivariantSystem(hilb, hilb))
        self.assertEqual(solution.rank, 23 * 23)

    def test_rigidity_on_u_plus_e8_negative(self):
        solution = equivariant_hom(EquivariantSystem(self.lattice, self.lattice, self.pairs))
        self.assertEqual(solution.rank, 1)
        self.assertEqual(solution.matrices(), [_identity(10)])

    def test_more_generators_shrink_the_solutions_on_u_plus_e8_negative(self):
        system = EquivariantSystem(self.lattice, self.lattice, self.pairs[:4])
        few = equivariant_hom(system)
        many = equivariant_hom(system.with_generators(self.pairs))
        self.assertGreater(few.rank, many.rank)
        for vector in many.homogeneous:
            self.assertTrue(few.contains(vector))

    def test_infeasible_affine_family(self):
        corner = [[0] * 10 for _ in range(10)]
        corner[0][0] = 1
        system = EquivariantSystem(self.lattice, self.lattice, self.pairs, basis=(_identity(10),), anchor=corner)
        solution = equivariant_hom(system)
        self.assertFalse(solution.feasible)
        self.assertEqual(solution.rank, 1)

    def test_feasible_affine_family(self):
        identity = _identity(10)
        system = EquivariantSystem(
            self.lattice, self.lattice, self.pairs, basis=(_scaled(identity, 2),), anchor=_scaled(identity, 3)
        )
        solution = equivariant_hom(system)
        self.assertTrue(solution.feasible)
        particular = solution.particular_matrix()
        self.assertEqual(particular, _scaled(identity, particular[0][0]))
        self.assertEqual(particular[0][0] % 2, 1)

    def test_dimension_checks(self):
        other = hilb_lattice(2)
        with self.assertRaises(DimensionMismatchError):
            EquivariantSystem(other, other, self.pairs[:1])
        with self.assertRaises(DimensionMismatchError):
            EquivariantSystem(self.lattice, self.lattice, (), basis=(_identity(3),))

    def test_rigidity_on_e8_negative(self):
        e8 = e8_negative()
        pairs = tuple((g, g) for g in sample_root_reflections(e8, 15, seed=1))
        self.assertEqual(equivariant_hom(EquivariantSystem(e8, e8, pairs)).matrices()[0], _identity(8))


class MukaiMiddleTests(TestCase):
    def test_small_n(self):
        for n in (2, 3, 4):
            result = mukai_middle_ext_order(n, generator_count=48, seed=20240611, batch=12)
            self.assertEqual(result.order, 2 * n - 2, n)
            self.assertEqual(result.rank, 1)
            self.assertTrue(result.stabilized)

    def test_too_few_generators(self):
        for count in (0, 3, MIN_GENERATORS - 1):
            with self.assertRaises(OutOfRangeError):
                mukai_middle_ext_order(3, generator_count=count, seed=1, batch=0)

    def test_json(self):
        model = mukai_middle_ext_order(2, generator_count=48, seed=5, batch=0).to_json()
        self.assertEqual(model.order, 2)
        self.assertFalse(model.stabilized)


class MasterOrderTests(TestCase):
    def test_examples(self):
        self.assertEqual(master_order(3, 2), 4)
        self.assertEqual(master_order(7, 4), 4)
        self.assertEqual(master_order(4, 3), 3)
        self.assertEqual(master_order(4, 2), 3)

    def test_table(self):
        self.assertEqual(master_order_table(7), [(2, 12), (3, 6), (4, 4)])

    def test_lower_bound(self):
        for n in range(3, 501):
            for i, order in master_order_table(n):
                self.assertGreaterEqual(order, 3, (n, i))

    def test_out_of_range(self):
        for n, i in ((2, 2), (7, 1), (7, 5), (4, 4)):
            with self.assertRaises(OutOfRangeError):
                master_order(n, i)


class MuKernelTests(TestCase):
    def test_degree_two(self):
        kernel = mu_kernel(2)
        self.assertTrue(kernel.integral)
        self.assertFalse(kernel.trivial)
        self.assertEqual(kernel.element.lattice, mukai_lattice())
        self.assertFalse(kernel.element.is_identity())

    def test_trivial_kernels(self):
        for n in (3, 4, 10):
            kernel = mu_kernel(n)
            self.assertFalse(kernel.integral)
            self.assertTrue(kernel.trivial)
            self.assertIsNone(kernel.to_json().matrix)

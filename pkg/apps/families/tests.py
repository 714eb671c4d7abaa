import importlib
import random
import time
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from unittest import mock

from django.test import SimpleTestCase

from apps.arithmetic.singularities import QuotientSingularity as Q
from apps.arithmetic.weights import WeightSystem
from apps.families.domain import Basket
from apps.families.services import (
    basket, coordinate_point_singularity, edge_singularities, entry_number,
    get_catalog, is_quasismooth_general, monomials_of_degree,
)
from apps.families.services.enumeration import enumerate_families
from core.exceptions import AmbiguousType, EdgeInX, Fano95Error, NotQuasismooth

# (n, weights, degree) as stated case by case for the families.
ENTRY_ANCHORS = [
    (1, (1, 1, 1, 1), 4), (2, (1, 1, 1, 2), 5), (3, (1, 1, 1, 3), 6),
    (4, (1, 1, 2, 2), 6), (5, (1, 1, 2, 3), 7), (6, (1, 1, 2, 4), 8),
    (7, (1, 2, 2, 3), 8), (8, (1, 1, 3, 4), 9), (9, (1, 2, 3, 3), 9),
    (10, (1, 1, 3, 5), 10), (11, (1, 2, 2, 5), 10), (12, (1, 2, 3, 4), 10),
    (13, (1, 2, 3, 5), 11), (14, (1, 1, 4, 6), 12), (15, (1, 2, 3, 6), 12),
    (16, (1, 2, 4, 5), 12), (17, (1, 3, 4, 4), 12), (18, (2, 2, 3, 5), 12),
    (19, (2, 3, 3, 4), 12), (20, (1, 3, 4, 5), 13), (21, (1, 2, 4, 7), 14),
    (23, (2, 3, 4, 5), 14), (24, (1, 2, 5, 7), 15), (25, (1, 3, 4, 7), 15),
    (26, (1, 3, 5, 6), 15), (27, (2, 3, 5, 5), 15), (29, (1, 2, 5, 8), 16),
    (30, (1, 3, 4, 8), 16), (31, (1, 4, 5, 6), 16), (32, (2, 3, 4, 7), 16),
    (33, (2, 3, 5, 7), 17), (35, (1, 3, 5, 9), 18), (36, (1, 4, 6, 7), 18),
    (38, (2, 3, 5, 8), 18), (40, (3, 4, 5, 7), 19), (41, (1, 4, 5, 10), 20),
    (42, (2, 3, 5, 10), 20), (43, (2, 4, 5, 9), 20), (44, (2, 5, 6, 7), 20),
    (45, (3, 4, 5, 8), 20), (46, (1, 3, 7, 10), 21), (47, (1, 5, 7, 8), 21),
    (48, (2, 3, 7, 9), 21), (49, (3, 5, 6, 7), 21), (50, (1, 3, 7, 11), 22),
    (51, (1, 4, 6, 11), 22), (54, (1, 6, 8, 9), 24), (55, (2, 3, 7, 12), 24),
    (56, (2, 3, 8, 11), 24), (58, (3, 4, 7, 10), 24), (60, (4, 5, 6, 9), 24),
    (61, (4, 5, 7, 9), 25), (62, (1, 5, 7, 13), 26), (63, (2, 3, 8, 13), 26),
    (64, (2, 5, 6, 13), 26), (65, (2, 5, 9, 11), 27), (67, (1, 4, 9, 14), 28),
    (68, (3, 4, 7, 14), 28), (69, (4, 6, 7, 11), 28), (71, (1, 6, 8, 15), 30),
    (74, (3, 4, 10, 13), 30), (76, (5, 6, 8, 11), 30), (77, (2, 5, 9, 16), 32),
    (79, (3, 5, 11, 14), 33), (80, (3, 4, 10, 17), 34), (82, (1, 5, 12, 18), 36),
    (83, (3, 4, 11, 18), 36), (85, (3, 5, 11, 19), 38), (91, (4, 5, 13, 22), 44),
]

KCUBE_ANCHORS = {
    2: Fraction(5, 2), 4: Fraction(3, 2), 6: Fraction(1), 7: Fraction(2, 3),
    8: Fraction(3, 4), 9: Fraction(1, 2), 10: Fraction(2, 3), 12: Fraction(5, 12),
    13: Fraction(11, 30), 14: Fraction(1, 2), 15: Fraction(1, 3), 16: Fraction(3, 10),
    19: Fraction(1, 6), 20: Fraction(13, 60), 21: Fraction(1, 4), 23: Fraction(7, 60),
    24: Fraction(3, 14), 25: Fraction(5, 28), 26: Fraction(1, 6), 29: Fraction(1, 5),
    31: Fraction(2, 15), 32: Fraction(2, 21), 36: Fraction(3, 28), 38: Fraction(3, 40),
    40: Fraction(19, 420), 43: Fraction(1, 18), 44: Fraction(1, 21), 50: Fraction(2, 21),
    51: Fraction(1, 12), 58: Fraction(1, 35), 62: Fraction(2, 35), 63: Fraction(1, 24),
    65: Fraction(3, 110), 67: Fraction(1, 18), 68: Fraction(1, 42), 69: Fraction(1, 66),
    71: Fraction(1, 24), 74: Fraction(1, 52), 77: Fraction(1, 45), 79: Fraction(1, 70),
    82: Fraction(1, 30), 85: Fraction(2, 165), 91: Fraction(1, 130),
}

# Singularity lists keyed by (r, a) of 1/r(1,a,r-a).
BASKET_ANCHORS = {
    2: {(2, 1): 1},
    3: {},
    4: {(2, 1): 3},
    6: {(2, 1): 2},
    7: {(2, 1): 4, (3, 1): 1},
    8: {(4, 1): 1},
    9: {(2, 1): 1, (3, 1): 3},
    10: {(3, 1): 1},
    11: {(2, 1): 5},
    12: {(2, 1): 2, (3, 1): 1, (4, 1): 1},
    13: {(2, 1): 1, (3, 1): 1, (5, 2): 1},
    14: {(2, 1): 1},
    15: {(2, 1): 2, (3, 1): 2},
    16: {(2, 1): 3, (5, 1): 1},
    17: {(4, 1): 3},
    18: {(2, 1): 6, (5, 2): 1},
    19: {(2, 1): 3, (3, 1): 4},
    20: {(3, 1): 1, (4, 1): 1, (5, 1): 1},
    23: {(2, 1): 3, (3, 1): 1, (4, 1): 1, (5, 2): 1},
    25: {(4, 1): 1, (7, 3): 1},
    26: {(3, 1): 2, (6, 1): 1},
    27: {(2, 1): 1, (5, 2): 3},
    29: {(2, 1): 2, (5, 2): 1},
    30: {(3, 1): 1, (4, 1): 2},
    31: {(2, 1): 1, (5, 1): 1, (6, 1): 1},
    32: {(2, 1): 4, (3, 1): 1, (7, 3): 1},
    36: {(2, 1): 1, (4, 1): 1, (7, 1): 1},
    38: {(2, 1): 2, (5, 2): 1, (8, 3): 1},
    40: {(3, 1): 1, (4, 1): 1, (5, 2): 1, (7, 3): 1},
    43: {(2, 1): 5, (9, 4): 1},
    44: {(2, 1): 3, (6, 1): 1, (7, 2): 1},
    47: {(5, 2): 1, (8, 1): 1},
    48: {(2, 1): 1, (3, 1): 2, (9, 2): 1},
    49: {(3, 1): 3, (5, 2): 1, (6, 1): 1},
    51: {(2, 1): 1, (4, 1): 1, (6, 1): 1},
    56: {(2, 1): 3, (11, 3): 1},
    58: {(2, 1): 1, (7, 3): 1, (10, 3): 1},
    60: {(2, 1): 2, (3, 1): 1, (5, 1): 1, (9, 4): 1},
    64: {(2, 1): 4, (5, 2): 1, (6, 1): 1},
    65: {(2, 1): 1, (5, 1): 1, (11, 2): 1},
    68: {(2, 1): 1, (3, 1): 1, (7, 3): 2},
    74: {(2, 1): 1, (4, 1): 1, (13, 3): 1},
    79: {(5, 1): 1, (14, 3): 1},
    80: {(2, 1): 1, (3, 1): 1, (4, 1): 1, (10, 3): 1},
    82: {(5, 2): 1, (6, 1): 1},
    91: {(2, 1): 1, (5, 2): 1, (13, 4): 1},
}


def brute_force_monomials(weights, d):
    ranges = [range(d // w + 1) for w in weights]
    return [e for e in product(*ranges) if sum(k * w for k, w in zip(e, weights)) == d]


class MonomialTests(SimpleTestCase):
    '''Test suite for monomial enumeration.'''

    def test_examples(self):
        '''Test the documented monomial lists.'''
        self.assertEqual(
            monomials_of_degree((2, 2), 8),
            [(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)],
        )
        self.assertEqual(monomials_of_degree((3, 6), 15), [(1, 2), (3, 1), (5, 0)])
        self.assertEqual(monomials_of_degree((7,), 13), [])

    def test_degree_zero_is_the_constant(self):
        '''Test that only the constant monomial has degree 0.'''
        self.assertEqual(monomials_of_degree((2, 3, 5), 0), [(0, 0, 0)])

    def test_matches_brute_force(self):
        '''Test against an independent exhaustive enumeration.'''
        rng = random.Random(42)
        for _ in range(50):
            weights = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 4)))
            d = rng.randint(0, 30)
            self.assertEqual(monomials_of_degree(weights, d), brute_force_monomials(weights, d))


class QuasismoothnessTests(SimpleTestCase):
    '''Test suite for the combinatorial quasismoothness criterion.'''

    def test_examples(self):
        '''Test the documented quasismoothness verdicts.'''
        self.assertTrue(is_quasismooth_general(WeightSystem((1, 1, 1, 2))))
        self.assertFalse(is_quasismooth_general(WeightSystem((1, 2, 3, 7))))
        self.assertTrue(is_quasismooth_general(WeightSystem((2, 3, 3, 4))))


class EnumerationTests(SimpleTestCase):
    '''Test suite for the enumeration and numbering of families.'''

    def setUp(self):
        self.catalog = get_catalog(100)

    def test_exactly_95_families(self):
        '''Test the family count and the maximal degree.'''
        self.assertEqual(len(self.catalog), 95)
        self.assertEqual(self.catalog.max_degree, 66)

    def test_numbering_is_a_bijection(self):
        '''Test that entry numbers run 1..95 in catalog order.'''
        self.assertEqual([family.n for family in self.catalog], list(range(1, 96)))
        self.assertEqual(len({family.weights for family in self.catalog}), 95)

    def test_order_is_degree_then_weights(self):
        '''Test the total order of entries.'''
        keys = [(family.d, family.weights.a) for family in self.catalog]
        self.assertEqual(keys, sorted(keys))

    def test_entry_anchors(self):
        '''Test every stated (n, weights, degree) triple.'''
        for n, weights, degree in ENTRY_ANCHORS:
            family = self.catalog.family(n)
            self.assertEqual(family.weights.a, weights, f'entry {n}')
            self.assertEqual(family.d, degree, f'entry {n}')

    def test_degree_twelve_block(self):
        '''Test that entries 14-19 are the six degree 12 families.'''
        weights = [self.catalog.family(n).weights.a for n in range(14, 20)]
        self.assertEqual(weights, [
            (1, 1, 4, 6), (1, 2, 3, 6), (1, 2, 4, 5), (1, 3, 4, 4), (2, 2, 3, 5), (2, 3, 3, 4),
        ])

    def test_no_triple_shares_a_factor(self):
        '''Test that every family has isolated singularities.'''
        for family in self.catalog:
            for triple in combinations(family.weights.a, 3):
                self.assertEqual(gcd(*triple), 1)

    def test_kcube_anchors(self):
        '''Test stated anticanonical degrees.'''
        for n, expected in KCUBE_ANCHORS.items():
            self.assertEqual(self.catalog.family(n).kcube, expected, f'entry {n}')

    def test_entry_number_lookup(self):
        '''Test the weights-to-entry lookup.'''
        self.assertEqual(entry_number(WeightSystem((1, 2, 2, 3)), self.catalog), 7)
        self.assertEqual(entry_number((1, 1, 1, 1, 1), self.catalog), 1)
        self.assertIsNone(entry_number((1, 1, 1, 5), self.catalog))
        self.assertIsNone(entry_number((2, 2, 2, 5), self.catalog))

    def test_bound_below_66_is_refused(self):
        '''Test that a bound that cannot contain every family is rejected.'''
        with self.assertRaises(Fano95Error):
            enumerate_families(65)

    def test_enumeration_is_fast(self):
        '''Test that a fresh enumeration up to degree 100 stays under five seconds.'''
        start = time.perf_counter()
        families = enumerate_families(100)
        self.assertLess(time.perf_counter() - start, 5)
        self.assertEqual(len(families), 95)


class BasketTests(SimpleTestCase):
    '''Test suite for singularity baskets.'''

    def setUp(self):
        self.catalog = get_catalog(100)

    def family(self, n):
        return self.catalog.family(n)

    def test_coordinate_points(self):
        '''Test singularities at coordinate vertices.'''
        n8, n23 = self.family(8), self.family(23)
        self.assertEqual(coordinate_point_singularity(n8, 4), Q(4, 1))
        self.assertIsNone(coordinate_point_singularity(n8, 3))
        self.assertEqual(coordinate_point_singularity(n23, 4), Q(5, 2))

    def test_coordinate_point_without_witness(self):
        '''Test that a vertex with no witnessing monomial is reported.'''
        with self.assertRaises(NotQuasismooth):
            coordinate_point_singularity(WeightSystem((1, 2, 3, 7)), 4)

    def test_witnesses_that_disagree(self):
        '''Test that two witnesses giving different types are reported.'''
        # P_4 on No. 7 has one witness per weight-2 coordinate; genuine ones always agree
        family = self.family(7)
        self.assertEqual(coordinate_point_singularity(family, 4), Q(3, 1))
        with mock.patch.object(
            importlib.import_module('apps.families.services.basket'), 'normalize_quotient',
            side_effect=[Q(3, 1), Q(2, 1)],
        ):
            with self.assertRaises(AmbiguousType):
                coordinate_point_singularity(family, 4)

    def test_edges(self):
        '''Test singular points along one-dimensional strata.'''
        self.assertEqual(edge_singularities(self.family(7), (2, 3)), (4, Q(2, 1)))
        self.assertEqual(edge_singularities(self.family(17), (3, 4)), (3, Q(4, 1)))
        self.assertEqual(edge_singularities(self.family(26), (2, 4)), (2, Q(3, 1)))

    def test_edge_contained_in_hypersurface(self):
        '''Test that an edge with no monomial of degree d is an error.'''
        with self.assertRaises(EdgeInX):
            edge_singularities(WeightSystem((1, 3, 4, 6)), (2, 4))
        with self.assertRaises(EdgeInX):
            edge_singularities(WeightSystem((1, 3, 3, 4)), (2, 3))

    def test_golden_baskets(self):
        '''Test full baskets against every stated singularity list.'''
        for n, counts in BASKET_ANCHORS.items():
            expected = Basket.from_counts({Q(r, a): c for (r, a), c in counts.items()})
            self.assertEqual(self.family(n).basket, expected, f'entry {n}')
            self.assertEqual(basket(self.family(n)), expected, f'entry {n}')

    def test_equal_weight_edges(self):
        '''Test that equal weights a2 = a3 give d/a2 points of type 1/a2(1,1,a2-1).'''
        for n in (7, 11, 19):
            family = self.family(n)
            a2 = family.weights.a[1]
            self.assertEqual(family.weights.a[2], a2)
            count, singularity = edge_singularities(family, (2, 3))
            self.assertEqual(count, family.d // a2)
            self.assertEqual(singularity, Q(a2, 1))

    def test_every_basket_is_terminal(self):
        '''Test that every family has a nonempty-or-smooth terminal basket.'''
        smooth = [family.n for family in self.catalog if not family.basket]
        self.assertEqual(smooth, [1, 3])
        for family in self.catalog:
            for entry in family.basket:
                self.assertGreaterEqual(entry.count, 1)

    def test_basket_rendering(self):
        '''Test the compact basket rendering.'''
        self.assertEqual(str(self.family(7).basket), '1/3(1,1,2)×1, 1/2(1,1,1)×4')
        self.assertEqual(self.family(7).basket.total, 5)

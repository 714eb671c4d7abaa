import random
from fractions import Fraction
from math import gcd

from django.test import SimpleTestCase

from apps.arithmetic.singularities import QuotientSingularity as Q
from apps.blowups.services import (
    KNOWN_IDENTITIES, DivisorClass, TowerContext, evaluate_identity,
    full_expansion, kawamata_blowup, triple_product,
)
from apps.families.services import get_catalog
from core.exceptions import DimensionMismatch, Fano95Error


def random_class(rng, rank):
    return DivisorClass.from_vector(
        Fraction(rng.randint(-12, 12), rng.randint(1, 12)) for _ in range(rank)
    )


class KawamataBlowupTests(SimpleTestCase):
    '''Test suite for the Kawamata blow-up of terminal points.'''

    def test_one_fifth_point(self):
        '''Test all data of the blow-up of 1/5(1,2,3).'''
        result = kawamata_blowup(Q(5, 2))
        self.assertEqual(result.drop, Fraction(1, 30))
        self.assertEqual(result.discrepancy, Fraction(1, 5))
        self.assertEqual(result.e_cube, Fraction(25, 6))
        self.assertEqual(result.exceptional_weights, (1, 2, 3))
        self.assertEqual(result.children, (Q(2, 1), Q(3, 1)))

    def test_half_point_has_no_children(self):
        '''Test the blow-up of 1/2(1,1,1).'''
        result = kawamata_blowup(Q(2, 1))
        self.assertEqual(result.drop, Fraction(1, 2))
        self.assertEqual(result.discrepancy, Fraction(1, 2))
        self.assertEqual(result.e_cube, Fraction(4))
        self.assertEqual(result.children, ())

    def test_drops(self):
        '''Test the anticanonical drop of deeper points.'''
        self.assertEqual(kawamata_blowup(Q(9, 4)).drop, Fraction(1, 180))
        self.assertEqual(kawamata_blowup(Q(8, 3)).drop, Fraction(1, 120))

    def test_children_anchors(self):
        '''Test induced singularities on the exceptional divisor.'''
        anchors = {
            Q(5, 2): (Q(2, 1), Q(3, 1)),
            Q(9, 4): (Q(4, 1), Q(5, 1)),
            Q(8, 3): (Q(3, 1), Q(5, 2)),
            Q(7, 2): (Q(2, 1), Q(5, 2)),
            Q(7, 3): (Q(3, 1), Q(4, 1)),
            Q(11, 2): (Q(2, 1), Q(9, 2)),
            Q(13, 3): (Q(3, 1), Q(10, 3)),
            Q(13, 4): (Q(4, 1), Q(9, 4)),
            Q(4, 1): (Q(3, 1),),
            Q(6, 1): (Q(5, 1),),
        }
        for point, children in anchors.items():
            self.assertEqual(kawamata_blowup(point).children, children, str(point))

    def test_exceptional_cube_matches_drop(self):
        '''Test (1/r)^3 E^3 = 1/(r a (r-a)) for every terminal type up to index 50.'''
        for r in range(2, 51):
            for a in range(1, r // 2 + 1):
                if gcd(a, r) != 1:
                    continue
                result = kawamata_blowup(Q(r, a))
                self.assertEqual(Fraction(1, r) ** 3 * result.e_cube, result.drop)
                for child in result.children:
                    self.assertLess(child.r, r)

    def test_every_basket_point_expands_to_nothing(self):
        '''Test that repeated blow-ups of every basket point terminate.'''
        for family in get_catalog(100):
            for entry in family.basket:
                reached = full_expansion(entry.singularity)
                self.assertEqual(reached[0], entry.singularity)
                for point in reached:
                    for child in kawamata_blowup(point).children:
                        self.assertLess(child.r, point.r)
                        self.assertGreater(kawamata_blowup(child).drop, kawamata_blowup(point).drop)


class TripleProductTests(SimpleTestCase):
    '''Test suite for triple products on blow-up towers.'''

    def test_known_identities(self):
        '''Test every catalogued identity at k = 1.'''
        expected = {
            'n23': Fraction(-1, 4), 'n27': Fraction(-3, 10), 'n40': Fraction(-1, 12),
            'n44': Fraction(-2, 3), 'n48': Fraction(-1, 6), 'n56': Fraction(0),
        }
        self.assertEqual(set(KNOWN_IDENTITIES), set(expected))
        for name, value in expected.items():
            computed, stated = evaluate_identity(name)
            self.assertEqual(computed, value, name)
            self.assertEqual(stated, value, name)

    def test_unknown_identity(self):
        '''Test that an unknown identity name is a domain error.'''
        with self.assertRaises(Fano95Error):
            evaluate_identity('n99')

    def test_explicit_product(self):
        '''Test a product given directly by coefficient vectors.'''
        context = TowerContext(Fraction(1, 18), (Fraction(81, 14), Fraction(4)))
        first = DivisorClass(7, (Fraction(-7, 9), Fraction(-1, 2)))
        other = DivisorClass(1, (Fraction(-1, 9), Fraction(-1, 2)))
        self.assertEqual(triple_product(first, other, other, context), Fraction(-1, 6))

    def test_zero_classes(self):
        '''Test that zero classes have zero product.'''
        context = TowerContext(Fraction(1, 12), (Fraction(4),))
        zero = DivisorClass(0, (0,))
        self.assertEqual(triple_product(zero, zero, zero, context), 0)

    def test_dimension_mismatch(self):
        '''Test that classes must match the tower rank.'''
        context = TowerContext(Fraction(1, 12), (Fraction(4),))
        with self.assertRaises(DimensionMismatch):
            triple_product(DivisorClass(1), DivisorClass(1, (0,)), DivisorClass(1, (0,)), context)

    def test_non_positive_exceptional_cube(self):
        '''Test that exceptional self-intersections must be positive.'''
        with self.assertRaises(Fano95Error):
            TowerContext(Fraction(1), (Fraction(0),))

    def test_symmetric_and_trilinear(self):
        '''Test symmetry, additivity and scaling on random inputs.'''
        rng = random.Random(23)
        for _ in range(100):
            rank = rng.randint(1, 5)
            context = TowerContext(
                Fraction(rng.randint(1, 30), rng.randint(1, 500)),
                tuple(Fraction(rng.randint(1, 200), rng.randint(1, 30)) for _ in range(rank - 1)),
            )
            a, a2, b, c = (random_class(rng, rank) for _ in range(4))
            scale = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            value = triple_product(a, b, c, context)

            self.assertEqual(triple_product(b, a, c, context), value)
            self.assertEqual(triple_product(c, b, a, context), value)
            self.assertEqual(triple_product(a + a2, b, c, context),
                             value + triple_product(a2, b, c, context))
            self.assertEqual(triple_product(a.scaled(scale), b, c, context), scale * value)
            self.assertEqual(
                triple_product(a.scaled(scale), b.scaled(scale), c.scaled(scale), context),
                scale ** 3 * value,
            )

import random
from fractions import Fraction
from math import gcd

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from apps.arithmetic.rationals import as_rational, format_rational, parse_rational
from apps.arithmetic.singularities import QuotientSingularity, normalize_quotient
from apps.arithmetic.weights import WeightSystem, minus_k_cubed
from core.exceptions import InvalidWeightSystem, NonTerminal


def random_terminal_type(rng, max_index=60):
    r = rng.randint(2, max_index)
    a = rng.choice([a for a in range(1, r // 2 + 1) if gcd(a, r) == 1])
    return QuotientSingularity(r, a)


class RationalTests(SimpleTestCase):
    '''Test suite for exact rational parsing and formatting.'''

    def test_format_drops_unit_denominator(self):
        '''Test that integers are written without a denominator.'''
        self.assertEqual(format_rational(Fraction(4)), '4')
        self.assertEqual(format_rational(Fraction(-6, 4)), '-3/2')

    def test_parse_reduces_to_lowest_terms(self):
        '''Test that parsed values are stored in lowest terms.'''
        value = parse_rational('10/4')
        self.assertEqual((value.numerator, value.denominator), (5, 2))

    def test_parse_rejects_floats_and_zero_denominators(self):
        '''Test that decimal notation and zero denominators are refused.'''
        for text in ('0.5', '1/0', '1e3', '', '1//2'):
            with self.assertRaises(ValidationError):
                parse_rational(text)

    def test_as_rational_refuses_float(self):
        '''Test that floats never enter exact arithmetic.'''
        with self.assertRaises(TypeError):
            as_rational(0.5)

    def test_string_round_trip(self):
        '''Test lossless round trip through the string form.'''
        rng = random.Random(7)
        for _ in range(200):
            value = Fraction(rng.randint(-10 ** 12, 10 ** 12), rng.randint(1, 10 ** 9))
            self.assertEqual(parse_rational(format_rational(value)), value)


class WeightSystemTests(SimpleTestCase):
    '''Test suite for weight systems and anticanonical degrees.'''

    def test_degree_is_sum_of_weights(self):
        '''Test that the degree is the sum of the four weights.'''
        weights = WeightSystem((1, 2, 3, 7))
        self.assertEqual(weights.d, 13)
        self.assertEqual(weights.ambient, (1, 1, 2, 3, 7))

    def test_minus_k_cubed_examples(self):
        '''Test anticanonical degrees stated for several families.'''
        cases = {
            (1, 1, 1, 2): Fraction(5, 2),
            (1, 1, 1, 1): Fraction(4),
            (3, 4, 5, 7): Fraction(19, 420),
            (2, 5, 9, 11): Fraction(3, 110),
        }
        for weights, expected in cases.items():
            self.assertEqual(minus_k_cubed(WeightSystem(weights)), expected)

    def test_rejects_common_triple_factor(self):
        '''Test that a triple with a common factor is rejected.'''
        with self.assertRaises(InvalidWeightSystem) as ctx:
            WeightSystem((1, 2, 4, 6))
        self.assertIn('has a triple (2, 4, 6) with common factor', str(ctx.exception))

    def test_string_form(self):
        '''Test the ambient rendering with its degree.'''
        self.assertEqual(str(WeightSystem((1, 2, 3, 7))), 'P(1,1,2,3,7) degree 13')

    def test_rejects_unsorted_weights(self):
        '''Test that weights must be ascending.'''
        with self.assertRaises(InvalidWeightSystem):
            WeightSystem((2, 1, 1, 1))
        self.assertFalse(WeightSystem.is_valid((0, 1, 1, 1)))

    def test_minus_k_cubed_is_positive(self):
        '''Test positivity over random valid weight systems.'''
        rng = random.Random(11)
        checked = 0
        while checked < 100:
            weights = tuple(sorted(rng.randint(1, 30) for _ in range(4)))
            if not WeightSystem.is_valid(weights):
                continue
            self.assertGreater(minus_k_cubed(WeightSystem(weights)), 0)
            checked += 1


class NormalizeQuotientTests(SimpleTestCase):
    '''Test suite for the canonical form of cyclic quotient points.'''

    def test_examples(self):
        '''Test the documented normalization examples.'''
        self.assertEqual(normalize_quotient(2, (1, 1, 1)), QuotientSingularity(2, 1))
        self.assertEqual(normalize_quotient(5, (1, 2, 3)), QuotientSingularity(5, 2))
        self.assertEqual(normalize_quotient(3, (1, 2, 1)), QuotientSingularity(3, 1))

    def test_non_terminal(self):
        '''Test that 1/7(1,2,4) has no terminal form.'''
        with self.assertRaises(NonTerminal):
            normalize_quotient(7, (1, 2, 4))

    def test_non_isolated_point_is_not_terminal(self):
        '''Test that a weight divisible by the index is rejected.'''
        with self.assertRaises(NonTerminal):
            normalize_quotient(4, (1, 2, 2))

    def test_string_form(self):
        '''Test the 1/r(1,a,r-a) rendering.'''
        self.assertEqual(str(QuotientSingularity(9, 4)), '1/9(1,4,5)')
        self.assertEqual(QuotientSingularity(9, 4).weights, (1, 4, 5))

    def test_non_canonical_construction_rejected(self):
        '''Test that a > r - a cannot be constructed directly.'''
        with self.assertRaises(NonTerminal) as ctx:
            QuotientSingularity(5, 3)
        self.assertEqual(str(ctx.exception), '1/5(1,3,2) is not a canonical terminal type')

    def test_idempotent(self):
        '''Test that canonical types normalize to themselves.'''
        rng = random.Random(3)
        for _ in range(100):
            point = random_terminal_type(rng)
            self.assertEqual(normalize_quotient(point.r, point.weights), point)

    def test_unit_invariance(self):
        '''Test independence of the chosen unit on random terminal inputs.'''
        rng = random.Random(1995)
        for _ in range(100):
            point = random_terminal_type(rng)
            raw = list(point.weights)
            rng.shuffle(raw)
            for unit in range(1, point.r):
                if gcd(unit, point.r) != 1:
                    continue
                scaled = [unit * w + point.r * rng.randint(0, 3) for w in raw]
                self.assertEqual(normalize_quotient(point.r, scaled), point)

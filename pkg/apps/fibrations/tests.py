import random
import time
from fractions import Fraction

from django.test import SimpleTestCase

from apps.arithmetic.singularities import QuotientSingularity as Q
from apps.arithmetic.weights import WeightSystem, minus_k_cubed
from apps.blowups.services import anticanonical_class, anticanonical_cube, kawamata_blowup
from apps.families.domain import Basket, FanoFamily
from apps.families.services import get_catalog
from apps.fibrations.domain import BlowupChain, ChainEvent
from apps.fibrations.services import (
    ChainSearch, admissible_centers, classify_all, factors_through_natural_projection,
    fibration_targets, find_chains, has_elliptic_fibration, zero_degree_centers,
)
from core.exceptions import InvalidChain, UnknownFamily

ZERO_DEGREE_FAMILIES = (
    14, 22, 28, 34, 37, 39, 52, 53, 57, 59, 66, 70, 72, 73, 78, 81, 86, 88, 89, 90, 92, 94, 95,
)


def event(point, *children):
    return ChainEvent(point, tuple(children))


def random_chain(rng, family):
    '''Random forest on the family's basket, never overshooting -K^3.'''
    left = family.kcube
    pending = [(point, None) for point in family.basket.points()]
    chosen = []
    while pending:
        point, parent = pending.pop(rng.randrange(len(pending)))
        result = kawamata_blowup(point)
        if result.drop > left or rng.random() < 0.4:
            continue
        left -= result.drop
        node = {'point': point, 'children': []}
        (parent['children'] if parent else chosen).append(node)
        pending.extend((child, node) for child in result.children)

    def build(node):
        return event(node['point'], *(build(child) for child in node['children']))

    return BlowupChain.build(family, [build(node) for node in chosen])


class ChainTypeTests(SimpleTestCase):
    '''Test suite for blow-up chain invariants.'''

    def setUp(self):
        self.catalog = get_catalog(100)

    def test_children_must_come_from_the_blowup(self):
        '''Test that an event only blows up points of its exceptional divisor.'''
        with self.assertRaises(InvalidChain):
            event(Q(5, 2), event(Q(4, 1)))
        with self.assertRaises(InvalidChain):
            event(Q(5, 2), event(Q(2, 1)), event(Q(2, 1)))

    def test_basket_multiplicity_is_respected(self):
        '''Test that a chain cannot use more points than the basket has.'''
        with self.assertRaises(InvalidChain):
            BlowupChain.build(self.catalog.family(14), [event(Q(2, 1)), event(Q(2, 1))])
        with self.assertRaises(InvalidChain):
            BlowupChain.build(self.catalog.family(14), [event(Q(3, 1))])

    def test_running_kcube_never_negative(self):
        '''Test that overshooting -K^3 is refused.'''
        with self.assertRaises(InvalidChain):
            BlowupChain.build(self.catalog.family(60), [event(Q(2, 1))])

    def test_canonical_order(self):
        '''Test that permuted roots give the same chain.'''
        family = self.catalog.family(7)
        first = BlowupChain.build(family, [event(Q(2, 1)), event(Q(3, 1))])
        second = BlowupChain.build(family, [event(Q(3, 1)), event(Q(2, 1))])
        self.assertEqual(first, second)

    def test_anticanonical_class(self):
        '''Test -K on the top of a tower.'''
        n43 = BlowupChain.build(self.catalog.family(43), [event(Q(9, 4), event(Q(5, 1)))])
        self.assertEqual(anticanonical_class(n43).coefficients,
                         (Fraction(1), Fraction(-1, 9), Fraction(-1, 5)))
        n14 = BlowupChain.build(self.catalog.family(14), [event(Q(2, 1))])
        self.assertEqual(anticanonical_class(n14).coefficients, (Fraction(1), Fraction(-1, 2)))
        empty = BlowupChain.build(self.catalog.family(14), [])
        self.assertEqual(anticanonical_class(empty).coefficients, (Fraction(1),))

    def test_tower_that_overshoots(self):
        '''Test -K on a tower of No. 43 whose drops exceed -K^3.'''
        family = self.catalog.family(43)
        roots = (event(Q(9, 4), event(Q(4, 1))),)
        chain = BlowupChain(kcube=family.kcube, roots=roots)
        self.assertEqual(anticanonical_class(chain).coefficients,
                         (Fraction(1), Fraction(-1, 9), Fraction(-1, 4)))
        self.assertEqual(chain.total_drop, Fraction(16, 180))
        self.assertEqual(anticanonical_cube(chain), Fraction(-1, 30))
        with self.assertRaises(InvalidChain):
            BlowupChain.build(family, list(roots))

    def test_depth(self):
        '''Test the depth of events and chains.'''
        tower = event(Q(11, 3), event(Q(8, 3), event(Q(5, 2))))
        self.assertEqual(tower.depth, 3)
        self.assertEqual(tower.children[0].depth, 2)
        self.assertEqual(event(Q(2, 1)).depth, 1)
        chain = BlowupChain.build(self.catalog.family(56), [tower])
        self.assertEqual(chain.depth, 3)
        self.assertEqual(len(chain), 3)
        self.assertEqual(BlowupChain.build(self.catalog.family(14), []).depth, 0)

    def test_drop_sum_matches_triple_product(self):
        '''Test (-K)^3 on the tower against -K^3 minus the drops on random chains.'''
        rng = random.Random(2000)
        families = [family for family in self.catalog if family.basket]
        for _ in range(250):
            chain = random_chain(rng, rng.choice(families))
            self.assertEqual(anticanonical_cube(chain), chain.kcube - chain.total_drop)
            self.assertGreaterEqual(chain.running_kcube, 0)


class ChainSearchTests(SimpleTestCase):
    '''Test suite for the search for zero-chains.'''

    def setUp(self):
        self.catalog = get_catalog(100)

    def chains(self, n):
        return find_chains(self.catalog.family(n))

    def test_single_half_point(self):
        '''Test that family 14 has exactly one chain.'''
        chains = self.chains(14)
        self.assertEqual(len(chains), 1)
        self.assertEqual(chains[0].roots, (event(Q(2, 1)),))

    def test_two_chains_on_family_9(self):
        '''Test the two chains of family 9.'''
        roots = {chain.roots for chain in self.chains(9)}
        self.assertEqual(roots, {
            (event(Q(2, 1)),),
            (event(Q(3, 1)), event(Q(3, 1)), event(Q(3, 1))),
        })

    def test_nested_chains(self):
        '''Test chains that blow up points on exceptional divisors.'''
        self.assertIn((event(Q(5, 1), event(Q(4, 1))),), [chain.roots for chain in self.chains(31)])
        self.assertIn(
            (event(Q(11, 3), event(Q(8, 3), event(Q(5, 2)))),),
            [chain.roots for chain in self.chains(56)],
        )

    def test_family_without_chain(self):
        '''Test that family 60 has no chain.'''
        self.assertEqual(self.chains(60), [])

    def test_equal_weight_points_collapse(self):
        '''Test that the d/a2 choices of one 1/a2 point collapse to one chain.'''
        for n in (7, 11, 19):
            family = self.catalog.family(n)
            a2 = family.weights.a[1]
            single = [
                chain for chain in find_chains(family)
                if [root.singularity for root in chain.roots].count(Q(a2, 1)) == 1
            ]
            self.assertTrue(single, f'entry {n}')
            self.assertIn(family.d // a2, [chain.multiplicity for chain in single], f'entry {n}')

    def test_repeated_types_are_deduplicated(self):
        '''Test canonical collapse on a synthetic basket of repeated types.'''
        weights = WeightSystem((1, 1, 1, 1))
        family = FanoFamily(
            n=0, weights=weights, kcube=Fraction(1),
            basket=Basket.from_counts({Q(2, 1): 4, Q(3, 1): 3}),
        )
        chains = ChainSearch(family).run()
        self.assertEqual(len(chains), len({chain.roots for chain in chains}))
        by_roots = {chain.roots: chain.multiplicity for chain in chains}
        self.assertEqual(by_roots[(event(Q(2, 1)), event(Q(2, 1)))], 6)
        self.assertEqual(by_roots[(event(Q(2, 1)), event(Q(3, 1)), event(Q(3, 1)), event(Q(3, 1)))], 4)
        self.assertEqual(by_roots[(event(Q(3, 1)), event(Q(3, 1)), event(Q(3, 1), event(Q(2, 1))))], 3)

    def test_every_chain_is_anticanonically_trivial(self):
        '''Test that every zero-chain gives (-K)^3 = 0 on its tower.'''
        for family in self.catalog:
            search = ChainSearch(family)
            chains = search.run()
            self.assertGreater(search.visited, 0)
            for chain in chains:
                self.assertEqual(chain.running_kcube, 0)
                self.assertEqual(anticanonical_cube(chain), 0)
                for point in chain.events():
                    self.assertIsNotNone(point.blowup)

    def test_search_over_all_families_is_fast(self):
        '''Test that fresh searches on every family finish under ten seconds.'''
        start = time.perf_counter()
        found = [ChainSearch(family).run() for family in self.catalog]
        self.assertLess(time.perf_counter() - start, 10)
        self.assertEqual(sum(1 for chains in found if not chains), 8)


class ClassificationTests(SimpleTestCase):
    '''Test suite for the fibration classification.'''

    def setUp(self):
        self.catalog = get_catalog(100)

    def test_partition(self):
        '''Test the families without chains and without fibrations.'''
        result = classify_all(self.catalog)
        self.assertEqual(result.no_chain, frozenset({1, 2, 3, 60, 75, 84, 87, 93}))
        self.assertEqual(result.no_fibration, frozenset({3, 60, 75, 84, 87, 93}))
        self.assertEqual(len(result.fibered), 89)
        for n in range(4, 60):
            self.assertTrue(result.chains[n], f'entry {n}')

    def test_has_elliptic_fibration(self):
        '''Test single-family fibration verdicts.'''
        self.assertFalse(has_elliptic_fibration(3, self.catalog))
        self.assertTrue(has_elliptic_fibration(1, self.catalog))
        self.assertTrue(has_elliptic_fibration(17, self.catalog))
        with self.assertRaises(UnknownFamily):
            has_elliptic_fibration(96, self.catalog)

    def test_targets(self):
        '''Test the catalogued base surfaces.'''
        self.assertEqual(fibration_targets(26, self.catalog), [(1, 1, 3), (1, 1, 6)])
        self.assertEqual(fibration_targets(49, self.catalog), [(1, 3, 5), (1, 3, 6)])
        self.assertEqual(fibration_targets(3, self.catalog), [])
        self.assertEqual(fibration_targets(18, self.catalog), [(1, 2, 2)])

    def test_natural_projection_only(self):
        '''Test that natural-projection families list exactly that base.'''
        several = {1, 2, 7, 9, 11, 17, 19, 20, 26, 30, 31, 36, 44, 49, 51, 64}
        for family in self.catalog:
            flag = factors_through_natural_projection(family.n, self.catalog)
            if family.n in several or family.n in {3, 60, 75, 84, 87, 93}:
                self.assertFalse(flag, f'entry {family.n}')
            else:
                self.assertTrue(flag, f'entry {family.n}')
                a1, a2 = family.weights.a[:2]
                self.assertEqual(fibration_targets(family.n, self.catalog), [(1, a1, a2)])

    def test_zero_degree_centers(self):
        '''Test families where every admissible center is already a zero-chain.'''
        for n in ZERO_DEGREE_FAMILIES:
            family = self.catalog.family(n)
            centers = admissible_centers(family)
            self.assertTrue(centers, f'entry {n}')
            self.assertEqual(zero_degree_centers(family), centers, f'entry {n}')

    def test_admissible_centers_examples(self):
        '''Test admissible centers on families 60 and 7.'''
        self.assertEqual(admissible_centers(self.catalog.family(60)), [Q(9, 4)])
        self.assertEqual(zero_degree_centers(self.catalog.family(60)), [])
        self.assertEqual(admissible_centers(self.catalog.family(7)), [Q(3, 1), Q(2, 1)])

    def test_chains_start_from_minus_k_cubed(self):
        '''Test that chains start from the family's anticanonical degree.'''
        family = self.catalog.family(31)
        for chain in find_chains(family):
            self.assertEqual(chain.kcube, minus_k_cubed(family.weights))

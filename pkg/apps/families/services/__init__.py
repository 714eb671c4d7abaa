from functools import lru_cache

from django.conf import settings

from apps.arithmetic.weights import WeightSystem
from core.exceptions import InvalidWeightSystem, UnknownFamily

from .basket import basket, coordinate_point_singularity, edge_singularities
from .enumeration import enumerate_families
from .monomials import has_monomial, is_quasismooth_general, monomials_of_degree


class FamilyCatalog:
    '''
    The enumerated families, indexed by entry number and by weights.
    '''

    def __init__(self, families):
        self.families = tuple(families)
        self._by_weights = {family.weights.a: family for family in self.families}

    def __len__(self):
        return len(self.families)

    def __iter__(self):
        return iter(self.families)

    @property
    def max_degree(self) -> int:
        return max(family.d for family in self.families)

    def family(self, n):
        if not 1 <= n <= len(self.families):
            raise UnknownFamily(f'no family with entry number {n} (valid: 1..{len(self.families)})')
        return self.families[n - 1]

    def entry_number(self, weights):
        '''Entry number of the family with these weights, or None.'''
        key = _weight_key(weights)
        family = self._by_weights.get(key) if key is not None else None
        return family.n if family is not None else None


def _weight_key(weights):
    if isinstance(weights, WeightSystem):
        return weights.a
    weights = tuple(weights)
    if len(weights) == 5 and weights[0] == 1:
        weights = weights[1:]
    try:
        return WeightSystem(weights).a
    except InvalidWeightSystem:
        return None


@lru_cache(maxsize=None)
def _catalog_for(d_max):
    return FamilyCatalog(enumerate_families(d_max))


def get_catalog(d_max=None) -> FamilyCatalog:
    '''Catalog at the configured enumeration bound, built once per process.'''
    if d_max is None:
        d_max = settings.FANO95_DMAX
    return _catalog_for(d_max)


def entry_number(weights, catalog=None):
    return (catalog or get_catalog()).entry_number(weights)


__all__ = [
    'FamilyCatalog', 'get_catalog', 'entry_number', 'enumerate_families',
    'basket', 'coordinate_point_singularity', 'edge_singularities',
    'monomials_of_degree', 'has_monomial', 'is_quasismooth_general',
]

import logging
from collections import Counter
from itertools import combinations
from math import gcd

from apps.arithmetic.singularities import normalize_quotient
from apps.families.domain import Basket
from core.exceptions import AmbiguousType, EdgeInX, NotQuasismooth

from .monomials import monomials_of_degree

logger = logging.getLogger(__name__)


def _weight_system(family):
    return getattr(family, 'weights', family)


def coordinate_point_singularity(family, i):
    '''
    Quotient type of the general member at the coordinate vertex P_i.

    Args:
        family: FanoFamily or WeightSystem
        i: index into the five ambient weights (0 is the weight-1 variable)

    Returns:
        QuotientSingularity, or None when x_i^(d/w_i) keeps the vertex off X
    '''
    weights = _weight_system(family)
    ambient, d = weights.ambient, weights.d
    w_i = ambient[i]
    if w_i < 2:
        raise ValueError(f'coordinate {i} has weight 1 and is never singular')
    if d % w_i == 0:
        return None

    types = set()
    for j, w_j in enumerate(ambient):
        if j == i or (d - w_j) % w_i or d - w_j < w_i:
            continue
        others = [ambient[k] for k in range(len(ambient)) if k not in (i, j)]
        types.add(normalize_quotient(w_i, others))

    if not types:
        raise NotQuasismooth(f'{weights}: no monomial x_{i}^k x_j of degree {d}')
    if len(types) > 1:
        found = ', '.join(sorted(str(t) for t in types))
        raise AmbiguousType(f'{weights}: vertex {i} has types {found}')
    return types.pop()


def edge_singularities(family, pair):
    '''
    Singular points in the interior of the edge joining two coordinate vertices.

    Returns:
        (count, QuotientSingularity): torus zeros of the restricted binary form
        and their common type
    '''
    weights = _weight_system(family)
    ambient, d = weights.ambient, weights.d
    i, j = pair
    g = gcd(ambient[i], ambient[j])
    if g < 2:
        raise ValueError(f'edge {pair} has trivial stabilizer')

    monomials = monomials_of_degree((ambient[i], ambient[j]), d)
    if not monomials:
        raise EdgeInX(f'{weights}: edge {pair} lies on the hypersurface')
    others = [ambient[k] for k in range(len(ambient)) if k not in (i, j)]
    return len(monomials) - 1, normalize_quotient(g, others)


def basket(family) -> Basket:
    '''Coordinate-vertex and edge contributions, merged into a Basket.'''
    weights = _weight_system(family)
    ambient = weights.ambient
    points = Counter()

    for i in range(1, len(ambient)):
        if ambient[i] < 2:
            continue
        singularity = coordinate_point_singularity(weights, i)
        if singularity is not None:
            points[singularity] += 1

    for i, j in combinations(range(1, len(ambient)), 2):
        if gcd(ambient[i], ambient[j]) < 2:
            continue
        # a lone monomial is a vertex power: no points inside the edge
        if len(monomials_of_degree((ambient[i], ambient[j]), weights.d)) == 1:
            continue
        count, singularity = edge_singularities(weights, (i, j))
        points[singularity] += count

    result = Basket.from_counts(points)
    logger.debug("Basket of %s: %s", weights, result or 'smooth')
    return result

import logging

from apps.arithmetic.weights import WeightSystem, minus_k_cubed
from apps.families.domain import FanoFamily
from core.exceptions import Fano95Error, InvalidWeightSystem, SingularityError
from core.utils import log_duration

from .basket import basket
from .monomials import is_quasismooth_general

logger = logging.getLogger(__name__)

MIN_DMAX = 66


def candidate_weights(d_max):
    '''Ascending 4-tuples of positive weights with sum at most d_max.'''
    for a1 in range(1, d_max // 4 + 1):
        for a2 in range(a1, (d_max - a1) // 3 + 1):
            for a3 in range(a2, (d_max - a1 - a2) // 2 + 1):
                for a4 in range(a3, d_max - a1 - a2 - a3 + 1):
                    yield (a1, a2, a3, a4)


def _vertices_quasismooth(weights):
    '''Quasismoothness at the coordinate vertices only; a fast pre-filter.'''
    ambient = (1,) + weights
    d = sum(weights)
    for i, w in enumerate(ambient):
        if w < 2 or d % w == 0:
            continue
        if not any(j != i and d - v >= w and (d - v) % w == 0 for j, v in enumerate(ambient)):
            return False
    return True


def _accept(weights):
    try:
        system = WeightSystem(weights)
    except InvalidWeightSystem:
        return None
    if not is_quasismooth_general(system):
        logger.debug("Rejected %s: not quasismooth", weights)
        return None
    try:
        return system, basket(system)
    except SingularityError as exc:
        logger.debug("Rejected %s: %s", weights, exc)
        return None


def enumerate_families(d_max=100):
    '''
    Every quasismooth terminal Fano hypersurface with degree at most d_max.

    Families are ordered by degree, then lexicographically by weights, and
    numbered from 1 in that order.
    '''
    if d_max < MIN_DMAX:
        raise Fano95Error(f'enumeration bound must be at least {MIN_DMAX}, got {d_max}')

    accepted = []
    with log_duration(logger, f'Enumerated families up to degree {d_max}'):
        for weights in candidate_weights(d_max):
            if not _vertices_quasismooth(weights):
                continue
            result = _accept(weights)
            if result is not None:
                accepted.append(result)

    accepted.sort(key=lambda item: (item[0].d, item[0].a))
    families = [
        FanoFamily(n=n, weights=system, kcube=minus_k_cubed(system), basket=family_basket)
        for n, (system, family_basket) in enumerate(accepted, start=1)
    ]
    logger.info("Found %s families with degree at most %s", len(families), d_max)
    return families

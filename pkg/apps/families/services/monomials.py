from functools import lru_cache
from itertools import combinations


def monomials_of_degree(weights, d):
    '''
    All exponent vectors e >= 0 with sum(e_i * w_i) == d, lexicographically ascending.

    Args:
        weights: positive integer weights, one per variable
        d: target degree (>= 0)

    Returns:
        List of exponent tuples
    '''
    weights = tuple(weights)
    if not weights:
        raise ValueError('at least one weight is required')
    if any(w < 1 for w in weights):
        raise ValueError(f'weights must be positive: {weights}')
    if d < 0:
        return []
    return list(_exponents(weights, d))


def _exponents(weights, d):
    head, tail = weights[0], weights[1:]
    if not tail:
        if d % head == 0:
            yield (d // head,)
        return
    for k in range(d // head + 1):
        for rest in _exponents(tail, d - k * head):
            yield (k,) + rest


def has_monomial(weights, d) -> bool:
    '''True when some monomial in variables of these weights has degree d.'''
    if d < 0:
        return False
    if d == 0:
        return True
    return _representable(tuple(sorted(set(weights), reverse=True)), d)


@lru_cache(maxsize=None)
def _representable(weights, d):
    if d == 0:
        return True
    if not weights:
        return False
    head, tail = weights[0], weights[1:]
    return any(_representable(tail, d - k * head) for k in range(d // head + 1))


def is_quasismooth_general(weights) -> bool:
    '''
    Combinatorial quasismoothness of the general member of |O(d)|.

    For every nonempty set I of variables, either a degree-d monomial uses
    only variables of I, or at least |I| distinct variables e outside I
    admit a degree-d monomial (monomial in I) * x_e.
    '''
    ambient, d = weights.ambient, weights.d
    indices = range(len(ambient))
    for size in range(1, len(ambient) + 1):
        for subset in combinations(indices, size):
            subset_weights = [ambient[i] for i in subset]
            if has_monomial(subset_weights, d):
                continue
            witnesses = sum(
                1 for e in indices
                if e not in subset and has_monomial(subset_weights, d - ambient[e])
            )
            if witnesses < size:
                return False
    return True

from apps.families.services import get_catalog

# Entry numbers, not computed: which bases the constructions land on.
CURVE_CENTER_FAMILIES = frozenset({1, 2})
NO_FIBRATION_FAMILIES = frozenset({3, 60, 75, 84, 87, 93})
SECOND_PROJECTION_FAMILIES = frozenset({7, 9, 20, 30, 36, 44, 49, 51, 64})
EXTRA_TARGETS = {
    1: ((1, 1, 1),),
    2: ((1, 1, 1),),
    17: ((1, 1, 4),),
    26: ((1, 1, 6),),
    31: ((1, 1, 6),),
}
# Families with a fibration that does not factor through P(1,a1,a2).
SEVERAL_FIBRATION_FAMILIES = frozenset({1, 2, 7, 9, 11, 17, 19, 20, 26, 30, 31, 36, 44, 49, 51, 64})


def natural_projection_base(family):
    '''P(1,a1,a2), the target of the projection forgetting the last two coordinates.'''
    a1, a2 = family.weights.a[:2]
    return (1, a1, a2)


def fibration_targets(n, catalog=None):
    '''Weights of the base surfaces of the known elliptic fibrations of family n.'''
    family = (catalog or get_catalog()).family(n)
    if n in NO_FIBRATION_FAMILIES:
        return []

    targets = []
    if n not in CURVE_CENTER_FAMILIES:
        targets.append(natural_projection_base(family))
    if n in SECOND_PROJECTION_FAMILIES:
        a1, a3 = family.weights.a[0], family.weights.a[2]
        targets.append((1, a1, a3))
    targets.extend(EXTRA_TARGETS.get(n, ()))

    unique = []
    for target in targets:
        if target not in unique:
            unique.append(target)
    return unique

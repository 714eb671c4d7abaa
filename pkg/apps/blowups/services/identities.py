from dataclasses import dataclass
from fractions import Fraction as F

from core.exceptions import Fano95Error

from .intersection import DivisorClass, TowerContext, triple_product


@dataclass(frozen=True)
class IntersectionIdentity:
    '''A displayed triple product on a specific tower, with its stated value at k = 1.'''

    family: int
    description: str
    context: TowerContext
    classes: tuple
    expected: F

    def evaluate(self):
        return triple_product(*self.classes, self.context)


def _classes(first, other):
    return (DivisorClass.from_vector(first), DivisorClass.from_vector(other), DivisorClass.from_vector(other))


KNOWN_IDENTITIES = {
    'n23': IntersectionIdentity(
        family=23,
        description='(-3K - F/2)(-K - F/2)^2 after blowing up 1/5(1,2,3) and then a 1/2 point',
        context=TowerContext(F(1, 12), (F(4),)),
        classes=_classes((3, F(-1, 2)), (1, F(-1, 2))),
        expected=F(-1, 4),
    ),
    'n27': IntersectionIdentity(
        family=27,
        description='(-3K - F/2)(-K - F/2)^2 after blowing up 1/5(1,2,3) and then a 1/2 point',
        context=TowerContext(F(1, 15), (F(4),)),
        classes=_classes((3, F(-1, 2)), (1, F(-1, 2))),
        expected=F(-3, 10),
    ),
    'n40': IntersectionIdentity(
        family=40,
        description='(-7K - 2E/5 - 2G/3)(-K - E/5 - G/3)^2 over 1/5(1,2,3) and its 1/3 child',
        context=TowerContext(F(19, 420), (F(25, 6), F(9, 2))),
        classes=_classes((7, F(-2, 5), F(-2, 3)), (1, F(-1, 5), F(-1, 3))),
        expected=F(-1, 12),
    ),
    'n44': IntersectionIdentity(
        family=44,
        description='(-10K - F)(-K - F/2)^2 after blowing up 1/7(1,2,5) and then a 1/2 point',
        context=TowerContext(F(1, 30), (F(4),)),
        classes=_classes((10, -1), (1, F(-1, 2))),
        expected=F(-2, 3),
    ),
    'n48': IntersectionIdentity(
        family=48,
        description='(-7K - 7E/9 - G/2)(-K - E/9 - G/2)^2 over 1/9(1,2,7) and a 1/2 point',
        context=TowerContext(F(1, 18), (F(81, 14), F(4))),
        classes=_classes((7, F(-7, 9), F(-1, 2)), (1, F(-1, 9), F(-1, 2))),
        expected=F(-1, 6),
    ),
    'n56': IntersectionIdentity(
        family=56,
        description='(-8K - 8E/11 - 2G/3)(-K - E/11 - G/3)^2 over 1/11(1,3,8) and its 1/3 child',
        context=TowerContext(F(1, 22), (F(121, 24), F(9, 2))),
        classes=_classes((8, F(-8, 11), F(-2, 3)), (1, F(-1, 11), F(-1, 3))),
        expected=F(0),
    ),
}


def evaluate_identity(name):
    '''Returns (computed, stated) for a catalogued identity.'''
    try:
        identity = KNOWN_IDENTITIES[name]
    except KeyError:
        known = ', '.join(sorted(KNOWN_IDENTITIES))
        raise Fano95Error(f'unknown identity {name!r} (known: {known})')
    return identity.evaluate(), identity.expected

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from core.exceptions import InvalidWeightSystem


@dataclass(frozen=True, order=True)
class WeightSystem:
    '''
    Weights (a1, a2, a3, a4) of P(1,a1,a2,a3,a4), with degree d = a1+a2+a3+a4.

    The hypersurface is anticanonically embedded, so the degree is never
    stored independently of the weights.
    '''

    a: tuple
    d: int = field(init=False, compare=False)

    def __post_init__(self):
        weights = tuple(int(w) for w in self.a)
        object.__setattr__(self, 'a', weights)
        object.__setattr__(self, 'd', sum(weights))
        self._validate()

    def _validate(self):
        if len(self.a) != 4:
            raise InvalidWeightSystem(f'expected four weights, got {self.a}')
        if any(w < 1 for w in self.a):
            raise InvalidWeightSystem(f'weights must be positive: {self.a}')
        if list(self.a) != sorted(self.a):
            raise InvalidWeightSystem(f'weights must be ascending: {self.a}')
        if gcd(*self.a) != 1:
            raise InvalidWeightSystem(f'{self.a} is not well formed')
        for triple in combinations(self.a, 3):
            if gcd(*triple) != 1:
                raise InvalidWeightSystem(
                    f'{self.a} has a triple {triple} with common factor; singular locus is not isolated'
                )

    @classmethod
    def is_valid(cls, weights) -> bool:
        try:
            cls(tuple(weights))
        except InvalidWeightSystem:
            return False
        return True

    @property
    def ambient(self) -> tuple:
        '''All five weights, leading 1 included.'''
        return (1,) + self.a

    def __str__(self):
        return f"P({','.join(str(w) for w in self.ambient)}) degree {self.d}"


def minus_k_cubed(weights: WeightSystem) -> Fraction:
    '''Anticanonical degree d / (a1*a2*a3*a4).'''
    return Fraction(weights.d, prod(weights.a))

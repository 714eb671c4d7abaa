from dataclasses import dataclass
from fractions import Fraction

from apps.arithmetic.rationals import Rational, as_rational
from core.exceptions import DimensionMismatch, Fano95Error


@dataclass(frozen=True)
class TowerContext:
    '''
    Orthogonal basis of a tower of Kawamata blow-ups.

    D0 is the pullback of the base class; E1..Ek are the full pullbacks of
    the exceptional divisors to the top of the tower. Mixed products vanish,
    so only the self-triple-products are stored.
    '''

    d0_cube: Rational
    e_cubes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'd0_cube', as_rational(self.d0_cube))
        e_cubes = tuple(as_rational(value) for value in self.e_cubes)
        if any(value <= 0 for value in e_cubes):
            raise Fano95Error(f'exceptional self-intersections must be positive: {e_cubes}')
        object.__setattr__(self, 'e_cubes', e_cubes)

    @property
    def rank(self) -> int:
        '''Number of basis classes, D0 included.'''
        return len(self.e_cubes) + 1


@dataclass(frozen=True)
class DivisorClass:
    '''Coefficients (c0; c1..ck) over the basis D0, E1..Ek.'''

    c0: Rational
    c: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'c0', as_rational(self.c0))
        object.__setattr__(self, 'c', tuple(as_rational(value) for value in self.c))

    @classmethod
    def from_vector(cls, coefficients):
        coefficients = tuple(coefficients)
        if not coefficients:
            raise DimensionMismatch('a divisor class needs at least the D0 coefficient')
        return cls(coefficients[0], coefficients[1:])

    @property
    def coefficients(self) -> tuple:
        return (self.c0,) + self.c

    def __len__(self):
        return len(self.c) + 1

    def scaled(self, factor):
        factor = as_rational(factor)
        return DivisorClass(self.c0 * factor, tuple(value * factor for value in self.c))

    def __add__(self, other):
        if len(self) != len(other):
            raise DimensionMismatch(f'cannot add classes of rank {len(self)} and {len(other)}')
        return DivisorClass(self.c0 + other.c0, tuple(x + y for x, y in zip(self.c, other.c)))


def triple_product(first, second, third, context) -> Fraction:
    '''A.B.C = A0 B0 C0 D0^3 + sum_i Ai Bi Ci Ei^3.'''
    for divisor in (first, second, third):
        if len(divisor) != context.rank:
            raise DimensionMismatch(
                f'class of rank {len(divisor)} does not fit a tower of rank {context.rank}'
            )
    total = first.c0 * second.c0 * third.c0 * context.d0_cube
    for x, y, z, e_cube in zip(first.c, second.c, third.c, context.e_cubes):
        total += x * y * z * e_cube
    return total


def tower_context(chain) -> TowerContext:
    '''Basis data for a blow-up chain: base -K^3 and one E^3 per event, in preorder.'''
    return TowerContext(
        d0_cube=chain.kcube,
        e_cubes=tuple(event.blowup.e_cube for event in chain.events()),
    )


def anticanonical_class(chain) -> DivisorClass:
    '''-K at the top of the tower: -K_X pulled back, minus (1/r_i) E_i per event.'''
    return DivisorClass(
        Fraction(1),
        tuple(-event.blowup.discrepancy for event in chain.events()),
    )


def anticanonical_cube(chain) -> Fraction:
    minus_k = anticanonical_class(chain)
    return triple_product(minus_k, minus_k, minus_k, tower_context(chain))

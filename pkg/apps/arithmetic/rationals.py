from fractions import Fraction
from numbers import Rational as _RationalABC

from core.validators import parse_rational

Rational = Fraction

__all__ = ['Rational', 'as_rational', 'format_rational', 'parse_rational']


def as_rational(value) -> Rational:
    '''
    Coerce an int, Fraction or "num/den" string to an exact Fraction.

    Floats are refused: every quantity in the engine is exact.
    '''
    if isinstance(value, bool):
        raise TypeError('booleans are not rationals')
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f'expected an exact rational, got {type(value).__name__}')


def format_rational(value: Rational) -> str:
    '''"num/den" in lowest terms, or "num" when the denominator is 1.'''
    return str(as_rational(value))

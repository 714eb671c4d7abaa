from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from apps.arithmetic.singularities import QuotientSingularity, normalize_quotient


@dataclass(frozen=True)
class BlowupResult:
    '''Numerical data of the Kawamata blow-up of one terminal point.'''

    singularity: QuotientSingularity
    drop: Fraction
    discrepancy: Fraction
    e_cube: Fraction
    exceptional_weights: tuple
    children: tuple


@lru_cache(maxsize=None)
def kawamata_blowup(singularity: QuotientSingularity) -> BlowupResult:
    '''
    Weighted blow-up with weights (1, a, r-a) of a point 1/r(1,a,r-a).

    The exceptional divisor is P(1,a,r-a). New singular points sit at its
    two vertices of index a and r-a, whenever that index exceeds 1.
    '''
    r, a, b = singularity.r, singularity.a, singularity.b
    children = []
    if a >= 2:
        children.append(normalize_quotient(a, (1, -r, b)))
    if b >= 2:
        children.append(normalize_quotient(b, (1, a, -r)))
    return BlowupResult(
        singularity=singularity,
        drop=Fraction(1, r * a * b),
        discrepancy=Fraction(1, r),
        e_cube=Fraction(r * r, a * b),
        exceptional_weights=(1, a, b),
        children=tuple(sorted(children)),
    )


def full_expansion(singularity):
    '''Every point reached by repeatedly blowing up this one and its children.'''
    reached, pending = [], [singularity]
    while pending:
        point = pending.pop()
        reached.append(point)
        pending.extend(kawamata_blowup(point).children)
    return reached

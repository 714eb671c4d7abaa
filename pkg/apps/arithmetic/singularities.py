from dataclasses import dataclass
from math import gcd

from core.exceptions import NonTerminal


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    '''
    Terminal cyclic quotient point of type 1/r(1,a,r-a).

    Stored in canonical form: gcd(a, r) = 1 and a <= r - a.
    '''

    r: int
    a: int

    def __post_init__(self):
        if self.r < 2:
            raise NonTerminal(f'index must be at least 2, got {self.r}')
        if not 1 <= self.a <= self.r - self.a or gcd(self.a, self.r) != 1:
            raise NonTerminal(f'1/{self.r}(1,{self.a},{self.r - self.a}) is not a canonical terminal type')

    @property
    def b(self) -> int:
        return self.r - self.a

    @property
    def weights(self) -> tuple:
        return (1, self.a, self.b)

    def __str__(self):
        return f'1/{self.r}(1,{self.a},{self.b})'


def normalize_quotient(r: int, raw_weights) -> QuotientSingularity:
    '''
    Bring the weights of a cyclic quotient point to the form 1/r(1,a,r-a).

    Scans the units of Z/r for one that turns some entry into 1 while the
    other two become a pair of units summing to 0 mod r. The canonical
    representative does not depend on which unit succeeds.
    '''
    if r < 2:
        raise NonTerminal(f'index must be at least 2, got {r}')
    raw = tuple(int(w) % r for w in raw_weights)
    if len(raw) != 3:
        raise NonTerminal(f'expected three weights, got {raw}')

    for unit in range(1, r):
        if gcd(unit, r) != 1:
            continue
        image = [(unit * w) % r for w in raw]
        for position, value in enumerate(image):
            if value != 1:
                continue
            x, y = (image[k] for k in range(3) if k != position)
            if x and y and (x + y) % r == 0 and gcd(x, r) == 1:
                return QuotientSingularity(r, min(x, y))

    raise NonTerminal(f'1/{r}{raw} is not a terminal quotient singularity')

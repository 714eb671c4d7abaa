from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from apps.arithmetic.singularities import QuotientSingularity
from apps.blowups.services.kawamata import kawamata_blowup
from core.exceptions import InvalidChain


@dataclass(frozen=True, order=True)
class ChainEvent:
    '''
    One Kawamata blow-up in a chain, with the blow-ups of its own children.

    Children are kept sorted so that equal forests compare equal.
    '''

    singularity: QuotientSingularity
    children: tuple = ()

    def __post_init__(self):
        children = tuple(sorted(self.children))
        object.__setattr__(self, 'children', children)
        available = self.blowup.children
        types = [child.singularity for child in children]
        if len(set(types)) != len(types) or any(t not in available for t in types):
            found = [str(t) for t in types]
            allowed = [str(t) for t in available]
            raise InvalidChain(
                f'children {found} are not distinct points of the blow-up of {self.singularity} (available: {allowed})'
            )

    @property
    def blowup(self):
        return kawamata_blowup(self.singularity)

    @property
    def r(self) -> int:
        return self.singularity.r

    @property
    def a(self) -> int:
        return self.singularity.a

    def walk(self):
        '''This event, then its descendants, in preorder.'''
        yield self
        for child in self.children:
            yield from child.walk()

    @property
    def depth(self) -> int:
        return 1 + max((child.depth for child in self.children), default=0)

    def __str__(self):
        if not self.children:
            return str(self.singularity)
        if len(self.children) == 1:
            return f'{self.singularity} -> {self.children[0]}'
        inner = '; '.join(str(child) for child in self.children)
        return f'{self.singularity} -> {{{inner}}}'


@dataclass(frozen=True)
class BlowupChain:
    '''
    Forest of blow-ups of basket points and their induced points.

    multiplicity counts the labelled choices of basket points that give this
    same canonical forest.
    '''

    kcube: Fraction
    roots: tuple
    multiplicity: int = 1

    @classmethod
    def build(cls, family, roots, multiplicity=1):
        roots = tuple(sorted(roots))
        used = Counter(root.singularity for root in roots)
        available = family.basket.as_counter()
        for singularity, count in used.items():
            if count > available[singularity]:
                raise InvalidChain(
                    f'No. {family.n} has {available[singularity]} point(s) of type {singularity}, chain uses {count}'
                )
        if multiplicity < 1:
            raise InvalidChain(f'multiplicity must be positive, got {multiplicity}')
        chain = cls(kcube=family.kcube, roots=roots, multiplicity=multiplicity)
        if chain.running_kcube < 0:
            raise InvalidChain(f'chain {chain} overshoots -K^3 = {family.kcube} of No. {family.n}')
        return chain

    def events(self):
        for root in self.roots:
            yield from root.walk()

    def __len__(self):
        return sum(1 for _ in self.events())

    @property
    def total_drop(self) -> Fraction:
        return sum((event.blowup.drop for event in self.events()), Fraction(0))

    @property
    def running_kcube(self) -> Fraction:
        return self.kcube - self.total_drop

    @property
    def depth(self) -> int:
        return max((root.depth for root in self.roots), default=0)

    def __str__(self):
        return f"[{' + '.join(str(root) for root in self.roots)}]"


@dataclass(frozen=True)
class PendingPoint:
    '''A singular point that may still be blown up; key locates it in the forest.'''

    singularity: QuotientSingularity
    key: tuple

    @property
    def parent(self):
        return self.key[:-1] or None

    @property
    def drop(self) -> Fraction:
        return kawamata_blowup(self.singularity).drop


@dataclass(frozen=True)
class SearchState:
    available: tuple
    kcube_left: Fraction

    @property
    def min_drop(self):
        return min((point.drop for point in self.available), default=None)

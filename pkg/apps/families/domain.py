from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from apps.arithmetic.singularities import QuotientSingularity
from apps.arithmetic.weights import WeightSystem


@dataclass(frozen=True)
class BasketEntry:
    singularity: QuotientSingularity
    count: int

    @property
    def r(self) -> int:
        return self.singularity.r

    @property
    def a(self) -> int:
        return self.singularity.a

    def __str__(self):
        return f'{self.singularity}×{self.count}'


def _entry_order(entry):
    return (-entry.r, entry.a)


@dataclass(frozen=True)
class Basket:
    '''
    Multiset of singularity types on a general member of a family.

    Entries are merged by type and ordered by descending index, then by a.
    '''

    entries: tuple = ()

    @classmethod
    def from_points(cls, points):
        return cls.from_counts(Counter(points))

    @classmethod
    def from_counts(cls, counts):
        merged = Counter()
        for singularity, count in dict(counts).items():
            if count < 0:
                raise ValueError(f'negative count for {singularity}')
            merged[singularity] += count
        entries = [BasketEntry(s, c) for s, c in merged.items() if c > 0]
        return cls(tuple(sorted(entries, key=_entry_order)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def count(self, singularity) -> int:
        for entry in self.entries:
            if entry.singularity == singularity:
                return entry.count
        return 0

    @property
    def total(self) -> int:
        '''Number of singular points counted with multiplicity.'''
        return sum(entry.count for entry in self.entries)

    def points(self) -> list:
        return [entry.singularity for entry in self.entries for _ in range(entry.count)]

    def as_counter(self) -> Counter:
        return Counter({entry.singularity: entry.count for entry in self.entries})

    def __str__(self):
        return ', '.join(str(entry) for entry in self.entries)


@dataclass(frozen=True)
class FanoFamily:
    '''One of the anticanonically embedded Fano hypersurfaces, with its entry number.'''

    n: int
    weights: WeightSystem
    kcube: Fraction
    basket: Basket

    @property
    def d(self) -> int:
        return self.weights.d

    @property
    def ambient(self) -> tuple:
        return self.weights.ambient

    def __str__(self):
        return f'No. {self.n}: {self.weights}'

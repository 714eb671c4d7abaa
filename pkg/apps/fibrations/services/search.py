import logging
from collections import Counter
from functools import lru_cache

from apps.blowups.services.kawamata import kawamata_blowup
from apps.fibrations.domain import BlowupChain, ChainEvent, PendingPoint, SearchState

logger = logging.getLogger(__name__)


class ChainSearch:
    '''
    Depth-first search for blow-up chains that bring -K^3 to exactly zero.

    Every basket point is labelled, so the search walks labelled subsets:
    at each state the first pending point is either skipped or blown up, in
    which case its children join the pending points. Labelled solutions are
    then collapsed to canonical forests, counting how many collapse together.
    '''

    def __init__(self, family):
        self.family = family
        self.visited = 0
        self._solutions = Counter()

    def run(self):
        initial = tuple(
            PendingPoint(singularity, (slot,))
            for slot, singularity in enumerate(self.family.basket.points())
        )
        self._explore(SearchState(initial, self.family.kcube), chosen=())
        chains = [
            BlowupChain.build(self.family, roots, multiplicity=count)
            for roots, count in self._solutions.items()
        ]
        chains.sort(key=lambda chain: (len(chain), chain.roots))
        logger.debug("No. %s: %s chain(s), %s states visited", self.family.n, len(chains), self.visited)
        return chains

    def _explore(self, state, chosen):
        self.visited += 1
        if state.kcube_left == 0:
            if chosen:
                self._solutions[self._canonical_roots(chosen)] += 1
            return
        if not state.available or state.min_drop > state.kcube_left:
            return

        head, rest = state.available[0], state.available[1:]
        self._explore(SearchState(rest, state.kcube_left), chosen)

        result = kawamata_blowup(head.singularity)
        if result.drop <= state.kcube_left:
            children = tuple(
                PendingPoint(child, head.key + (index,))
                for index, child in enumerate(result.children)
            )
            self._explore(
                SearchState(rest + children, state.kcube_left - result.drop),
                chosen + (head,),
            )

    @staticmethod
    def _canonical_roots(chosen):
        by_parent = {}
        for point in chosen:
            by_parent.setdefault(point.parent, []).append(point)

        def build(point):
            return ChainEvent(point.singularity, tuple(build(child) for child in by_parent.get(point.key, ())))

        return tuple(sorted(build(point) for point in by_parent.get(None, ())))


@lru_cache(maxsize=None)
def _chains_for(family):
    return tuple(ChainSearch(family).run())


def find_chains(family):
    '''All canonical blow-up chains of the family whose total drop equals -K^3.'''
    return list(_chains_for(family))

import logging
from dataclasses import dataclass

from apps.families.services import get_catalog
from core.exceptions import ClassificationMismatch
from core.utils import log_duration

from .catalog import CURVE_CENTER_FAMILIES, NO_FIBRATION_FAMILIES, SEVERAL_FIBRATION_FAMILIES
from .search import find_chains

logger = logging.getLogger(__name__)

EXPECTED_NO_CHAIN = CURVE_CENTER_FAMILIES | NO_FIBRATION_FAMILIES


@dataclass(frozen=True)
class Classification:
    chains: dict
    no_chain: frozenset
    no_fibration: frozenset

    @property
    def fibered(self):
        return frozenset(self.chains) - self.no_fibration


def has_elliptic_fibration(n, catalog=None) -> bool:
    '''
    True when a zero-chain exists for family n.

    Families 1 and 2 have no such chain; their fibrations come from
    projecting away from a curve and are recorded as known.
    '''
    family = (catalog or get_catalog()).family(n)
    return bool(find_chains(family)) or n in CURVE_CENTER_FAMILIES


def factors_through_natural_projection(n, catalog=None) -> bool:
    '''True when family n is fibered and every fibration factors through P(1,a1,a2).'''
    return has_elliptic_fibration(n, catalog) and n not in SEVERAL_FIBRATION_FAMILIES


def classify_all(catalog=None) -> Classification:
    '''Run the chain search on every family and check the resulting partition.'''
    catalog = catalog or get_catalog()
    with log_duration(logger, f'Classified {len(catalog)} families'):
        chains = {family.n: tuple(find_chains(family)) for family in catalog}

    no_chain = frozenset(n for n, found in chains.items() if not found)
    no_fibration = no_chain - CURVE_CENTER_FAMILIES
    if no_chain != EXPECTED_NO_CHAIN:
        raise ClassificationMismatch(
            f'families without chains are {sorted(no_chain)}, expected {sorted(EXPECTED_NO_CHAIN)}'
        )
    if no_fibration != NO_FIBRATION_FAMILIES:
        raise ClassificationMismatch(
            f'families without fibrations are {sorted(no_fibration)}, expected {sorted(NO_FIBRATION_FAMILIES)}'
        )
    logger.info("%s of %s families carry an elliptic fibration", len(catalog) - len(no_fibration), len(catalog))
    return Classification(chains=chains, no_chain=no_chain, no_fibration=no_fibration)

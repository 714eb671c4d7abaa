import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from django.conf import settings

from apps.families.domain import FanoFamily
from apps.families.services import get_catalog
from apps.fibrations.services import fibration_targets, find_chains, has_elliptic_fibration
from core.exceptions import ExportError
from core.utils import log_duration

from ..serializers import FamilyRecordSerializer
from .renderers import BaseCatalogRenderer, CsvRenderer, JsonRenderer, RendererFactory, TableRenderer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyRecord:
    '''Everything the database stores about one family.'''

    family: FanoFamily
    chains: tuple
    targets: tuple
    has_fibration: bool

    @property
    def n(self) -> int:
        return self.family.n

    @property
    def weights(self) -> list:
        return list(self.family.ambient)

    @property
    def degree(self) -> int:
        return self.family.d

    @property
    def kcube(self):
        return self.family.kcube

    @property
    def basket(self):
        return self.family.basket


def build_record(family, catalog=None):
    catalog = catalog or get_catalog()
    return FamilyRecord(
        family=family,
        chains=tuple(find_chains(family)),
        targets=tuple(tuple(target) for target in fibration_targets(family.n, catalog)),
        has_fibration=has_elliptic_fibration(family.n, catalog),
    )


@lru_cache(maxsize=None)
def _database_for(d_max):
    catalog = get_catalog(d_max)
    with log_duration(logger, f'Built database of {len(catalog)} families'):
        return tuple(build_record(family, catalog) for family in catalog)


def get_database(d_max=None):
    '''FamilyRecords for every family, in entry-number order.'''
    if d_max is None:
        d_max = settings.FANO95_DMAX
    return _database_for(d_max)


def export_database(path=None, records=None):
    '''Writes the database as JSON and returns the path written.'''
    path = Path(path or settings.FANO95_EXPORT_PATH)
    records = get_database() if records is None else records
    document = RendererFactory.get_renderer('json').render(records)
    try:
        path.write_text(document, encoding='utf-8')
    except OSError as exc:
        raise ExportError(f'cannot write {path}: {exc}')
    logger.info("Exported %s families to %s", len(records), path)
    return path


def load_database(path):
    '''Reads an exported database back, checking every record.'''
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ExportError(f'cannot read {path}: {exc}')

    serializer = FamilyRecordSerializer(data=payload, many=True)
    if not serializer.is_valid():
        raise ExportError(f'{path} is not a family database: {serializer.errors}')
    return tuple(serializer.save())


__all__ = [
    'FamilyRecord', 'build_record', 'get_database', 'export_database', 'load_database',
    'BaseCatalogRenderer', 'TableRenderer', 'JsonRenderer', 'CsvRenderer', 'RendererFactory',
]

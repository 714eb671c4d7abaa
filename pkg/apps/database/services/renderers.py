import csv
import io
import json
from abc import ABC, abstractmethod

from apps.arithmetic.rationals import format_rational
from core.exceptions import Fano95Error
from core.utils import format_weights

from ..serializers import FamilyRecordSerializer


class BaseCatalogRenderer(ABC):
    '''Abstract base class for catalog renderers.'''

    @abstractmethod
    def render(self, records) -> str:
        '''
        Render family records as text.

        Args:
            records: FamilyRecord instances in entry-number order

        Returns:
            The full document, ending with a newline
        '''
        pass


class TableRenderer(BaseCatalogRenderer):
    '''Fixed-width table for reading in a terminal.'''

    header = ('n', 'weights', 'degree', '-K^3', 'fibration', 'basket')

    def render(self, records) -> str:
        rows = [self.header] + [
            (
                str(record.n), format_weights(record.weights), str(record.degree),
                format_rational(record.kcube), 'yes' if record.has_fibration else 'no',
                str(record.family.basket) or 'smooth',
            )
            for record in records
        ]
        widths = [max(len(row[i]) for row in rows) for i in range(len(self.header) - 1)]
        lines = []
        for row in rows:
            cells = [cell.ljust(width) for cell, width in zip(row, widths)] + [row[-1]]
            lines.append('  '.join(cells))
        return '\n'.join(lines) + '\n'


class JsonRenderer(BaseCatalogRenderer):
    '''The family database document.'''

    def render(self, records) -> str:
        data = FamilyRecordSerializer(list(records), many=True).data
        return json.dumps(data, indent=2) + '\n'


class CsvRenderer(BaseCatalogRenderer):
    fieldnames = ('n', 'weights', 'degree', 'kcube', 'basket', 'has_fibration')

    def render(self, records) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=self.fieldnames, lineterminator='\n')
        writer.writeheader()
        for record in records:
            writer.writerow({
                'n': record.n,
                'weights': ' '.join(str(w) for w in record.weights),
                'degree': record.degree,
                'kcube': format_rational(record.kcube),
                'basket': str(record.family.basket),
                'has_fibration': 'true' if record.has_fibration else 'false',
            })
        return buffer.getvalue()


class RendererFactory:
    '''
    Factory for catalog renderers, keyed by output format.
    '''

    renderers = {
        'table': TableRenderer,
        'json': JsonRenderer,
        'csv': CsvRenderer,
    }

    @classmethod
    def get_renderer(cls, output_format) -> BaseCatalogRenderer:
        try:
            return cls.renderers[output_format]()
        except KeyError:
            choices = ', '.join(cls.renderers)
            raise Fano95Error(f'unknown format {output_format!r} (choose from {choices})')

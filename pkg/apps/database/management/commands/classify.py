from apps.fibrations.services import classify_all

from ._base import Fano95BaseCommand


def _numbers(values):
    return ', '.join(str(n) for n in sorted(values)) or 'none'


class Command(Fano95BaseCommand):
    help = 'Search every family for blow-up chains and check which carry elliptic fibrations.'

    def handle(self, *args, **options):
        catalog = self.catalog()
        result = classify_all(catalog)
        self.write_lines([
            f'no chain: {_numbers(result.no_chain)}',
            f'no elliptic fibration: {_numbers(result.no_fibration)}',
            f'fibered: {len(result.fibered)} of {len(catalog)}',
        ])

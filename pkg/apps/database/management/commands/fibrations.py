from apps.fibrations.services import find_chains

from ._base import Fano95BaseCommand


def chain_lines(chains):
    if not chains:
        return ['no chains']
    return [f'{chain}  x{chain.multiplicity}' for chain in chains]


class Command(Fano95BaseCommand):
    help = 'Print every blow-up chain that brings -K^3 of a family to zero.'

    def add_arguments(self, parser):
        self.add_entry_argument(parser)

    def handle(self, *args, **options):
        family = self.family(options['n'])
        self.write_lines(chain_lines(find_chains(family)))

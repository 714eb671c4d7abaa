from apps.arithmetic.rationals import format_rational
from apps.fibrations.services import (
    admissible_centers, factors_through_natural_projection, fibration_targets, find_chains,
)
from core.utils import format_weights

from ._base import Fano95BaseCommand
from .fibrations import chain_lines


class Command(Fano95BaseCommand):
    help = 'Print everything known about one family.'

    def add_arguments(self, parser):
        self.add_entry_argument(parser)

    def handle(self, *args, **options):
        family = self.family(options['n'])
        catalog = self.catalog()
        targets = ', '.join(format_weights(t) for t in fibration_targets(family.n, catalog)) or 'none'
        centers = ', '.join(str(c) for c in admissible_centers(family)) or 'none'
        natural = 'yes' if factors_through_natural_projection(family.n, catalog) else 'no'

        self.write_lines([
            f'No. {family.n}',
            f'weights: {format_weights(family.ambient)}',
            f'degree: {family.d}',
            f'-K^3: {format_rational(family.kcube)}',
            f"basket: {str(family.basket) or 'smooth'}",
            'chains:',
        ])
        self.write_lines(f'  {line}' for line in chain_lines(find_chains(family)))
        self.write_lines([
            f'targets: {targets}',
            f'admissible centers: {centers}',
            f'natural projection only: {natural}',
        ])

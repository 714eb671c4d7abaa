from django.core.management.base import CommandError

from apps.arithmetic.rationals import format_rational
from apps.blowups.services import DivisorClass, TowerContext, evaluate_identity, triple_product
from core.exceptions import EXIT_USAGE
from core.validators import parse_rational, parse_rational_vector

from ._base import Fano95BaseCommand


class Command(Fano95BaseCommand):
    help = (
        'Evaluate a triple product on a blow-up tower. Vectors are comma-separated '
        'rationals; write --a=-1,2 when a vector starts with a minus sign.'
    )

    def add_arguments(self, parser):
        parser.add_argument('--d0cube', help='-K^3 of the base, e.g. 1/12.')
        parser.add_argument('--ecubes', default='', help='E_i^3 of each exceptional divisor.')
        parser.add_argument('--a', help='Coefficients c0,...,ck of the first class.')
        parser.add_argument('--b', help='Coefficients of the second class.')
        parser.add_argument('--c', help='Coefficients of the third class.')
        parser.add_argument('--identity', help='Name of a catalogued identity, e.g. n48.')

    def handle(self, *args, **options):
        if options['identity']:
            computed, _ = evaluate_identity(options['identity'])
            self.stdout.write(format_rational(computed))
            return

        missing = [name for name in ('d0cube', 'a', 'b', 'c') if options[name] is None]
        if missing:
            raise CommandError(f"missing --{', --'.join(missing)}", returncode=EXIT_USAGE)

        ecubes = parse_rational_vector(options['ecubes']) if options['ecubes'] else ()
        context = TowerContext(parse_rational(options['d0cube']), ecubes)
        classes = [DivisorClass.from_vector(parse_rational_vector(options[name])) for name in ('a', 'b', 'c')]
        self.stdout.write(format_rational(triple_product(*classes, context)))

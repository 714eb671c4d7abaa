from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from apps.families.services import get_catalog
from core.exceptions import EXIT_USAGE, Fano95Error, as_command_error
from core.validators import validate_entry_number


class Fano95BaseCommand(BaseCommand):
    '''
    Shared plumbing for the catalog commands.

    Domain errors leave through CommandError carrying their exit code, so
    nothing raised by the engine reaches the user as a traceback.
    '''

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except Fano95Error as exc:
            raise as_command_error(exc) from exc
        except ValidationError as exc:
            raise CommandError(' '.join(exc.messages), returncode=EXIT_USAGE) from exc

    def add_entry_argument(self, parser):
        parser.add_argument('n', help='Entry number of the family, 1 to 95.')

    def catalog(self):
        return get_catalog()

    def family(self, value):
        catalog = self.catalog()
        return catalog.family(validate_entry_number(value, count=len(catalog)))

    def write_lines(self, lines):
        for line in lines:
            self.stdout.write(line)

from django.conf import settings

from apps.database.services import export_database, get_database

from ._base import Fano95BaseCommand


class Command(Fano95BaseCommand):
    help = 'Write the family database as JSON.'

    def add_arguments(self, parser):
        parser.add_argument('path', nargs='?', default=None,
                            help='Output file (default: FANO95_EXPORT_PATH).')

    def handle(self, *args, **options):
        records = get_database()
        path = export_database(options['path'] or settings.FANO95_EXPORT_PATH, records)
        self.stdout.write(f'Wrote {len(records)} families to {path}')

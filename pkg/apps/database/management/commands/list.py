from apps.database.services import RendererFactory, get_database

from ._base import Fano95BaseCommand


class Command(Fano95BaseCommand):
    help = 'Print the catalog of all families as a table, JSON or CSV.'

    def add_arguments(self, parser):
        parser.add_argument('--format', dest='output_format', default='table',
                            help='table (default), json or csv.')

    def handle(self, *args, **options):
        renderer = RendererFactory.get_renderer(options['output_format'])
        self.stdout.write(renderer.render(get_database()), ending='')

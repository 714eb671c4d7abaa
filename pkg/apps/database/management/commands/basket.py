from ._base import Fano95BaseCommand


class Command(Fano95BaseCommand):
    help = 'Print the singularity basket of one family.'

    def add_arguments(self, parser):
        self.add_entry_argument(parser)

    def handle(self, *args, **options):
        family = self.family(options['n'])
        self.stdout.write(str(family.basket) or 'smooth')

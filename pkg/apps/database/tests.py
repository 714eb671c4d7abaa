import json
import tempfile
from fractions import Fraction
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from rest_framework import serializers

from apps.database.serializers import ChainEventSerializer, FamilyRecordSerializer, RationalField
from apps.database.services import RendererFactory, export_database, get_database, load_database
from core.exceptions import ExportError, Fano95Error


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class SerializerTests(SimpleTestCase):
    '''Test suite for the database schema.'''

    def setUp(self):
        self.records = get_database(100)

    def record_data(self, n):
        return json.loads(json.dumps(FamilyRecordSerializer(self.records[n - 1]).data))

    def test_field_order(self):
        '''Test that records keep the fixed field order.'''
        self.assertEqual(
            list(self.record_data(7)),
            ['n', 'weights', 'degree', 'kcube', 'basket', 'chains', 'targets', 'has_fibration'],
        )

    def test_rational_field(self):
        '''Test rationals as strings in both directions.'''
        field = RationalField()
        self.assertEqual(field.to_representation(Fraction(-3, 10)), '-3/10')
        self.assertEqual(field.to_representation(Fraction(4)), '4')
        self.assertEqual(field.to_internal_value('19/420'), Fraction(19, 420))
        for bad in ('0.5', 0.5, '1/0', ''):
            with self.assertRaises(serializers.ValidationError):
                field.to_internal_value(bad)

    def test_record_round_trip(self):
        '''Test that a record read back equals the record written.'''
        for n in (1, 7, 26, 56, 60, 91):
            serializer = FamilyRecordSerializer(data=self.record_data(n))
            self.assertTrue(serializer.is_valid(), serializer.errors)
            self.assertEqual(serializer.save(), self.records[n - 1])

    def test_inconsistent_records_are_rejected(self):
        '''Test that degree, -K^3, weights and chains are checked.'''
        cases = {
            'degree': 9,
            'kcube': '1/3',
            'weights': [2, 1, 2, 2, 3],
            'basket': [{'r': 4, 'a': 2, 'count': 1}],
        }
        for key, value in cases.items():
            data = self.record_data(7)
            data[key] = value
            self.assertFalse(FamilyRecordSerializer(data=data).is_valid(), key)

        data = self.record_data(14)
        data['chains'] = [{'multiplicity': 1, 'events': [{'r': 2, 'a': 1}, {'r': 2, 'a': 1}]}]
        serializer = FamilyRecordSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('chains', serializer.errors)

    def test_chains_must_reach_zero(self):
        '''Test that a chain leaving -K^3 positive is not a zero-chain.'''
        data = self.record_data(7)
        data['chains'] = [{'multiplicity': 1, 'events': [{'r': 2, 'a': 1}]}]
        serializer = FamilyRecordSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('chains', serializer.errors)

    def test_has_fibration_follows_chains(self):
        '''Test the fibration flag against the chains and the curve-center families.'''
        for n, flag in ((3, True), (60, True), (14, False)):
            data = self.record_data(n)
            data['has_fibration'] = flag
            serializer = FamilyRecordSerializer(data=data)
            self.assertFalse(serializer.is_valid(), n)
            self.assertIn('has_fibration', serializer.errors)

        data = self.record_data(2)
        self.assertEqual(data['chains'], [])
        self.assertTrue(data['has_fibration'])
        self.assertTrue(FamilyRecordSerializer(data=data).is_valid())

    def test_nested_events(self):
        '''Test that events nest and that children must come from the blow-up.'''
        good = {'r': 11, 'a': 3, 'children': [{'r': 8, 'a': 3, 'children': [{'r': 5, 'a': 2}]}]}
        serializer = ChainEventSerializer(data=good)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(str(serializer.validated_data['event']), '1/11(1,3,8) -> 1/8(1,3,5) -> 1/5(1,2,3)')

        bad = {'r': 5, 'a': 2, 'children': [{'r': 4, 'a': 1}]}
        self.assertFalse(ChainEventSerializer(data=bad).is_valid())


class RendererTests(SimpleTestCase):
    '''Test suite for catalog renderers.'''

    def setUp(self):
        self.records = get_database(100)

    def test_json_document(self):
        '''Test the JSON catalog contents.'''
        text = RendererFactory.get_renderer('json').render(self.records)
        self.assertTrue(text.endswith('}\n]\n'))
        data = json.loads(text)
        self.assertEqual(len(data), 95)
        self.assertEqual(data[0]['weights'], [1, 1, 1, 1, 1])
        self.assertEqual(data[0]['kcube'], '4')
        self.assertEqual(data[17]['weights'], [1, 2, 2, 3, 5])
        self.assertEqual(data[17]['degree'], 12)
        self.assertEqual(data[90]['kcube'], '1/130')
        self.assertEqual(data[6]['basket'], [{'r': 3, 'a': 1, 'count': 1}, {'r': 2, 'a': 1, 'count': 4}])
        self.assertFalse(data[2]['has_fibration'])
        self.assertEqual(data[25]['targets'], [[1, 1, 3], [1, 1, 6]])

    def test_deterministic(self):
        '''Test that rendering twice gives the same bytes.'''
        for output_format in ('table', 'json', 'csv'):
            renderer = RendererFactory.get_renderer(output_format)
            self.assertEqual(renderer.render(self.records), renderer.render(self.records))

    def test_csv(self):
        '''Test the CSV header and one row.'''
        lines = RendererFactory.get_renderer('csv').render(self.records).split('\n')
        self.assertEqual(lines[0], 'n,weights,degree,kcube,basket,has_fibration')
        self.assertEqual(lines[7], '7,1 1 2 2 3,8,2/3,"1/3(1,1,2)×1, 1/2(1,1,1)×4",true')
        self.assertEqual(len(lines), 97)
        self.assertEqual(lines[-1], '')

    def test_table(self):
        '''Test the table has a header and one row per family.'''
        lines = RendererFactory.get_renderer('table').render(self.records).splitlines()
        self.assertEqual(len(lines), 96)
        self.assertTrue(lines[0].startswith('n '))
        self.assertIn('smooth', lines[1])

    def test_unknown_format(self):
        '''Test that only known formats are rendered.'''
        with self.assertRaises(Fano95Error):
            RendererFactory.get_renderer('xml')


class ExportTests(SimpleTestCase):
    '''Test suite for writing and reading the database file.'''

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / 'families.json'

    def tearDown(self):
        self.tmp.cleanup()

    def test_export_then_load(self):
        '''Test that exporting and loading gives back the same database.'''
        records = get_database(100)
        export_database(self.path, records)
        text = self.path.read_text(encoding='utf-8')
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(len(json.loads(text)), 95)

        loaded = load_database(self.path)
        self.assertEqual(loaded, records)
        self.assertEqual(RendererFactory.get_renderer('json').render(loaded), text)

    def test_unwritable_path(self):
        '''Test that I/O failures become export errors.'''
        with self.assertRaises(ExportError) as ctx:
            export_database(Path(self.tmp.name) / 'missing' / 'families.json', get_database(100))
        self.assertEqual(ctx.exception.exit_code, 3)

    def test_malformed_files(self):
        '''Test that unreadable or invalid files are refused.'''
        with self.assertRaises(ExportError):
            load_database(self.path)
        self.path.write_text('{not json', encoding='utf-8')
        with self.assertRaises(ExportError):
            load_database(self.path)
        self.path.write_text('[{"n": 1}]', encoding='utf-8')
        with self.assertRaises(ExportError):
            load_database(self.path)


@override_settings(FANO95_DMAX=100)
class CommandTests(SimpleTestCase):
    '''Test suite for the management commands.'''

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as ctx:
            run(*args, **options)
        self.assertEqual(ctx.exception.returncode, code)

    def test_basket(self):
        '''Test the basket of family 7.'''
        self.assertEqual(run('basket', '7'), '1/3(1,1,2)×1, 1/2(1,1,1)×4\n')
        self.assertEqual(run('basket', '1'), 'smooth\n')

    def test_fibrations(self):
        '''Test chains of families with and without them.'''
        self.assertEqual(run('fibrations', '60'), 'no chains\n')
        self.assertEqual(run('fibrations', '14'), '[1/2(1,1,1)]  x1\n')

    def test_show(self):
        '''Test the family summary.'''
        output = run('show', '26')
        self.assertIn('weights: P(1,1,3,5,6)', output)
        self.assertIn('-K^3: 1/6', output)
        self.assertIn('targets: P(1,1,3), P(1,1,6)', output)
        self.assertIn('natural projection only: no', output)

    def test_entry_out_of_range(self):
        '''Test that bad entry numbers exit with the usage code.'''
        self.assertExitCode(2, 'show', '96')
        self.assertExitCode(2, 'show', '0')
        self.assertExitCode(2, 'basket', 'seven')

    def test_list(self):
        '''Test list in each format.'''
        self.assertEqual(len(json.loads(run('list', format='json'))), 95)
        self.assertTrue(run('list', format='csv').startswith('n,weights,degree,kcube,basket,has_fibration\n'))
        self.assertEqual(len(run('list').splitlines()), 96)
        self.assertExitCode(2, 'list', format='xml')

    def test_bound_below_66(self):
        '''Test that a configured bound too small for the catalog exits with the usage code.'''
        with self.settings(FANO95_DMAX=50):
            self.assertExitCode(2, 'list')
            self.assertExitCode(2, 'show', '7')

    def test_triple(self):
        '''Test explicit triple products.'''
        self.assertEqual(
            run('triple', d0cube='1/12', ecubes='4', a='3,-1/2', b='1,-1/2', c='1,-1/2'), '-1/4\n',
        )
        self.assertEqual(
            run('triple', d0cube='1/18', ecubes='81/14,4', a='7,-7/9,-1/2', b='1,-1/9,-1/2', c='1,-1/9,-1/2'),
            '-1/6\n',
        )
        self.assertEqual(run('triple', d0cube='1/12', ecubes='4', a='0,0', b='0,0', c='0,0'), '0\n')
        self.assertEqual(run('triple', identity='n40'), '-1/12\n')

    def test_triple_errors(self):
        '''Test usage errors of triple.'''
        self.assertExitCode(2, 'triple', d0cube='1/12', ecubes='4', a='3', b='1,-1/2', c='1,-1/2')
        self.assertExitCode(2, 'triple', d0cube='1/12', ecubes='4', a='3,0.5', b='1,-1/2', c='1,-1/2')
        self.assertExitCode(2, 'triple', d0cube='1/12')
        self.assertExitCode(2, 'triple', identity='n99')

    def test_classify(self):
        '''Test the classification summary.'''
        output = run('classify')
        self.assertIn('no chain: 1, 2, 3, 60, 75, 84, 87, 93', output)
        self.assertIn('no elliptic fibration: 3, 60, 75, 84, 87, 93', output)
        self.assertIn('fibered: 89 of 95', output)

    def test_export(self):
        '''Test export to an explicit path, the default path and a bad path.'''
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'out.json'
            self.assertIn('Wrote 95 families', run('export', str(path)))
            self.assertEqual(load_database(path), get_database(100))

            default = Path(tmp) / 'default.json'
            with self.settings(FANO95_EXPORT_PATH=default):
                run('export')
            self.assertTrue(default.exists())

            self.assertExitCode(3, 'export', str(Path(tmp) / 'missing' / 'out.json'))

# This workaround makes sure that we can import from the parent dir
import sys
sys.path.append('..')

from unitarylm.bruhat import clear_closure_cache
from unitarylm.cli import RunConfig, layered_settings, main, read_config_file
from unitarylm.cli.config import CACHE_ENV, parse_vector
from unitarylm.cli.export import render, reports_payload
from unitarylm.foundation import ConfigError
import io
import json
import os
import shutil
import tempfile
import unittest

wedge_args = ['enumerate', '--group', 'GU', '--m', '1', '--s', '1', '--I', '0,1', '--set', 'wedge']


def invoke(argv, environ=None):
    stream = io.StringIO()
    status = main(argv, environ={} if environ is None else environ, stream=stream)
    return status, stream.getvalue()


class TestSettings(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, text):
        path = os.path.join(self.directory, 'unitarylm.cfg')
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def test_defaults(self):
        settings = layered_settings(os.devnull, environ={})
        self.assertEqual(settings['workers'], 1)
        self.assertIsNone(settings['cache_dir'])
        self.assertTrue(settings['timing'])
        self.assertEqual(settings['samples'], 1000)

    def test_layering(self):
        path = self.write('# sizes\nworkers = 4\nseed = 9\ntiming = off\ncache_dir = /from/file\n')
        self.assertEqual(read_config_file(path)['workers'], 4)
        settings = layered_settings(path, environ={CACHE_ENV: '/from/env'}, overrides={'seed': 2, 'workers': None})
        self.assertEqual(settings['workers'], 4)
        self.assertEqual(settings['seed'], 2)
        self.assertFalse(settings['timing'])
        self.assertEqual(settings['cache_dir'], '/from/env')

    def test_samples_setting(self):
        self.assertEqual(read_config_file(self.write('samples = 50\n'))['samples'], 50)
        self.assertEqual(layered_settings(os.devnull, environ={}, overrides={'samples': 7})['samples'], 7)
        self.assertRaises(ConfigError, read_config_file, self.write('samples = 0\n'))

    def test_bad_files(self):
        self.assertRaises(ConfigError, read_config_file, self.write('workers 4\n'))
        self.assertRaises(ConfigError, read_config_file, self.write('colour = blue\n'))
        self.assertRaises(ConfigError, read_config_file, self.write('workers = 0\n'))
        self.assertRaises(ConfigError, read_config_file, self.write('timing = maybe\n'))
        self.assertRaises(ConfigError, read_config_file, os.path.join(self.directory, 'missing.cfg'))

    def test_parse_vector(self):
        self.assertEqual(parse_vector('2,1,0'), (2, 1, 0))
        self.assertIsNone(parse_vector(None))
        self.assertRaises(ConfigError, parse_vector, '2,x')


class TestRunConfig(unittest.TestCase):

    def test_valid(self):
        config = RunConfig('enumerate', group='gu', m=1, s=1, set_kind='wedge').validate()
        self.assertEqual(config.group, 'GU')
        self.assertEqual(repr(config.group_context()), 'GU(1)')

    def test_claim_aliases(self):
        cases = (
            ('thm-5-equivalence', 'gu-equivalence'),
            ('thm-6-intersect', 'gsp-gl-intersection'),
            ('Prop-6-Perm-Adm', 'perm-equals-adm'),
            ('lemma-steinberg', 'steinberg-min-rep'),
            ('basic-lemmas', 'basic-inequalities'),
            ('Thm-adm-iff-perm-I', 'gu-equivalence'),
            ('sign-suite', 'sign-suite'),
            ('all', 'all')
        )
        for name, claim in cases:
            self.assertEqual(RunConfig('verify', claim=name).validate().claim, claim)

    def test_invalid_combinations(self):
        cases = (
            dict(command='enumerate', group='GU', m=1, set_kind='wedge'),
            dict(command='enumerate', group='GSP', m=1, set_kind='spin', s=0),
            dict(command='enumerate', group='GL', m=2, set_kind='adm', s=1),
            dict(command='enumerate', group='GL', m=2, set_kind='naive'),
            dict(command='enumerate', group='GU', m=1, set_kind='adm', s=1, mu='2,1,0'),
            dict(command='enumerate', group='GU', m=1, set_kind='wedge', s=2),
            dict(command='verify', claim='nonsense'),
            dict(command='verify'),
            dict(command='export'),
            dict(command='cache-clear')
        )
        for case in cases:
            command = case.pop('command')
            self.assertRaises(ConfigError, RunConfig(command, **case).validate)


class TestMain(unittest.TestCase):

    def setUp(self):
        clear_closure_cache()
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_enumerate_json(self):
        status, output = invoke(wedge_args)
        self.assertEqual(status, 0)
        payload = json.loads(output)
        self.assertEqual(payload['cardinality'], 5)
        self.assertEqual(payload['group'], 'GU')
        self.assertEqual(len(payload['elements']), 5)

    def test_enumerate_agrees_across_sets(self):
        outputs = []
        for kind in ('wedge', 'spin', 'adm'):
            status, output = invoke(wedge_args[:-1] + [kind])
            self.assertEqual(status, 0)
            outputs.append(json.loads(output)['elements'])
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])

    def test_enumerate_gl(self):
        status, output = invoke(['enumerate', '--group', 'GL', '--m', '2', '--mu', '2,0', '--set', 'adm'])
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output)['cardinality'], 5)

    def test_csv_and_table(self):
        status, output = invoke(wedge_args + ['--format', 'csv'])
        self.assertEqual(status, 0)
        lines = output.strip().split('\n')
        self.assertEqual(lines[0], 'group,rank,s,I,set,cardinality,element')
        self.assertEqual(len(lines), 6)

        status, output = invoke(wedge_args + ['--format', 'table'])
        self.assertEqual(status, 0)
        self.assertIn('cardinality: 5', output)

    def test_verify(self):
        argv = ['verify', '--claim', 'perm-equals-adm', '--m', '1', '--s', '0', '--no-timing']
        status, output = invoke(argv)
        self.assertEqual(status, 0)
        payload = json.loads(output)
        self.assertEqual(payload['verdict'], 'PASS')
        self.assertTrue(all('elapsed_ms' not in report for report in payload['reports']))
        self.assertEqual(invoke(argv)[1], output)

    def test_verify_table(self):
        status, output = invoke(['verify', '--claim', 'sign-suite', '--m', '1', '--format', 'table'])
        self.assertEqual(status, 0)
        self.assertIn('overall: PASS', output)

    def test_verify_perm_adm_alias(self):
        status, output = invoke(['verify', '--claim', 'prop-6-perm-adm', '--m', '1', '--s', '0', '--no-timing'])
        self.assertEqual(status, 0)
        payload = json.loads(output)
        self.assertEqual(payload['verdict'], 'PASS')
        self.assertEqual(len(payload['reports']), 3)
        for report in payload['reports']:
            self.assertEqual(report['claim'], 'perm-equals-adm')
            self.assertEqual(report['label'], 'Prop-perm-adm')
            self.assertEqual(len(report['lhs']), 1)
            self.assertEqual(set(report['cardinalities'].values()), {1})

    def test_verify_equivalence_alias_table(self):
        argv = ['verify', '--claim', 'thm-5-equivalence', '--m', '2', '--I', '0,1,2', '--format', 'table']
        status, output = invoke(argv)
        self.assertEqual(status, 0)
        rows = [line for line in output.split('\n') if line.startswith('gu-equivalence')]
        self.assertEqual(len(rows), 3)
        self.assertTrue(all('Thm-adm-iff-perm-I' in row and 'PASS' in row for row in rows))
        self.assertTrue(output.endswith('overall: PASS\n'))

    def test_report_labels_in_csv(self):
        status, output = invoke(['verify', '--claim', 'sign-suite', '--m', '1', '--format', 'csv'])
        self.assertEqual(status, 0)
        lines = output.strip().split('\n')
        self.assertTrue(lines[0].startswith('claim,label,parameters,verdict'))
        self.assertTrue(lines[1].startswith('sign-suite,Lemma-sigma-signs,'))

    def test_failing_report_exit_status(self):
        payload = reports_payload([{'claim': 'sign-suite', 'parameters': {'n': 3}, 'verdict': 'FAIL'}])
        path = os.path.join(self.directory, 'reports.json')
        with open(path, 'w') as handle:
            handle.write(render(payload, 'json'))
        self.assertEqual(invoke(['export', '--input', path, '--format', 'csv'])[0], 1)

    def test_usage_errors(self):
        self.assertEqual(invoke([])[0], 2)
        self.assertEqual(invoke(['enumerate', '--group', 'GU', '--m', '1', '--set', 'wedge'])[0], 2)
        self.assertEqual(invoke(['enumerate', '--group', 'SO', '--m', '1'])[0], 2)
        self.assertEqual(invoke(wedge_args[:-2] + ['--set', 'naive', '--s', '1'])[0], 2)
        self.assertEqual(invoke(['verify', '--claim', 'sign-suite', '--workers', '0'])[0], 2)
        self.assertEqual(invoke(['verify', '--claim', 'thm-9-nothing'])[0], 2)
        self.assertEqual(invoke(['verify', '--claim', 'basic-lemmas', '--samples', '0'])[0], 2)

    def test_unwritable_output(self):
        target = os.path.join(self.directory, 'missing', 'out.json')
        self.assertEqual(invoke(wedge_args + ['--output', target])[0], 3)

    def test_export_round_trip(self):
        path = os.path.join(self.directory, 'wedge.json')
        self.assertEqual(invoke(wedge_args + ['--output', path])[0], 0)
        with open(path) as handle:
            original = json.load(handle)
        status, output = invoke(['export', '--input', path])
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output), original)
        status, output = invoke(['export', '--input', path, '--format', 'csv'])
        self.assertEqual(len(output.strip().split('\n')), 6)

    def test_export_rejects_garbage(self):
        path = os.path.join(self.directory, 'garbage.json')
        with open(path, 'w') as handle:
            handle.write('not json')
        self.assertEqual(invoke(['export', '--input', path])[0], 2)
        self.assertEqual(invoke(['export', '--input', os.path.join(self.directory, 'absent.json')])[0], 3)

    def test_cache_dir_and_clear(self):
        cache = os.path.join(self.directory, 'cache')
        self.assertEqual(invoke(wedge_args[:-1] + ['adm'], environ={CACHE_ENV: cache})[0], 0)
        self.assertTrue(os.listdir(cache))
        status, output = invoke(['cache-clear', '--cache-dir', cache])
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith('Removed'))
        self.assertEqual(os.listdir(cache), [])
        self.assertEqual(invoke(['cache-clear'])[0], 2)

    def test_warm_cache_output_matches_cold(self):
        cache = os.path.join(self.directory, 'cache')
        adm_args = wedge_args[:-1] + ['adm']
        cold = invoke(adm_args)
        clear_closure_cache()
        filled = invoke(adm_args + ['--cache-dir', cache])
        self.assertTrue(os.listdir(cache))
        clear_closure_cache()
        warm = invoke(adm_args + ['--cache-dir', cache])
        self.assertEqual(cold[0], 0)
        self.assertEqual(filled, cold)
        self.assertEqual(warm, cold)

        verify_args = ['verify', '--claim', 'gu-equivalence', '--m', '1', '--s', '1', '--no-timing']
        clear_closure_cache()
        cold = invoke(verify_args)
        clear_closure_cache()
        invoke(verify_args + ['--cache-dir', cache])
        clear_closure_cache()
        self.assertEqual(invoke(verify_args + ['--cache-dir', cache]), cold)


if __name__ == '__main__':
    unittest.main()

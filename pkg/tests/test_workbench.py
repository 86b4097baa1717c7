import io
import json
import os
import unittest
from contextlib import redirect_stderr, redirect_stdout

from pysat.solvers import Solver

from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Coloring, Ground
from reductions.trace import ReductionTrace
from search.cnf import build_cnf
from witnesses.finders import find_ap_witness, find_f13_witness
from witnesses.kinds import Kind, KindSpec, SubspaceWitness
from workbench import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from tests.common import TempDirTestCase


class WorkbenchCliTestCase(TempDirTestCase):

    def run_main(self, *argv):
        out = io.StringIO()
        with redirect_stdout(out), redirect_stderr(io.StringIO()):
            code = main(list(argv) + ['--outdir', self.path('runs')])
        return code, out.getvalue()

    def compute(self, kind, m, alphabet, max_k):
        return self.run_main('compute', '--kind', kind, '--m', str(m), '--alphabet', str(alphabet),
                             '--colors', '2', '--max-k', str(max_k), '--db', self.path('results.json'))

    def test_compute(self):
        code, out = self.compute('hj', 1, 2, 6)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('hj(1;2,2)=2', out)
        with open(self.path('runs', 'log.txt')) as f:
            self.assertIn('---------------  compute  ---------------', f.read())
        self.assertTrue(os.path.exists(self.path('certificates', 'hj_1_2_2_k2_none-exists.json')))

    def test_compute_open_interval(self):
        code, out = self.compute('vdw', 3, 1, 6)
        self.assertEqual(code, EXIT_BUDGET)
        self.assertIn('vdw(3;2) in [7, ?]', out)

    def test_usage_errors(self):
        for argv in (['compute', '--bogus'], ['no-such-command'], ['verify-chain', '--mode', 'loose']):
            with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit) as ctx:
                main(argv)
            self.assertEqual(ctx.exception.code, EXIT_USAGE)

    def test_strict_omega_help(self):
        out = io.StringIO()
        with redirect_stdout(out), self.assertRaises(SystemExit) as ctx:
            main(['compute', '--help'])
        self.assertEqual(ctx.exception.code, 0)
        self.assertIn('excludes compositions with a part equal to m*', ' '.join(out.getvalue().split()))

    def test_bounds(self):
        code, out = self.run_main('bounds', '--eval', 'E:2,3', '--compare', 'shelah24', 'gowers:2,3',
                                  '--show', 'gowers:2,3')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('E2(3)=1446', out)
        self.assertIn('shelah24 > gowers(2,3)', out)
        self.assertIn('gowers(2,3) = 2^(2^(2^(2^(2^12))))', out)
        code, _ = self.run_main('bounds', '--eval', 'E:3,3', '--max-bits', '64')
        self.assertEqual(code, EXIT_BUDGET)

    def test_verify_chain(self):
        for kind in ('f9s', 'f13'):
            self.assertEqual(self.compute(kind, 2, 2, 6)[0], EXIT_OK)
        code, out = self.run_main('verify-chain', '--db', self.path('results.json'), '--mode', 'strict')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('violated f9*<=f13', out)
        self.assertTrue(os.path.exists(self.path('runs', 'chain_strict.json')))
        code, _ = self.run_main('verify-chain', '--db', self.path('results.json'), '--fail-on-violation')
        self.assertEqual(code, EXIT_VERIFY)
        code, out = self.run_main('verify-chain', '--db', self.path('results.json'), '--mode', 'roundup',
                                  '--fail-on-violation')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('0 violated', out)

    def test_find_bad_and_refute(self):
        code, out = self.run_main('find-bad', '--kind', 'vdw', '--m', '3', '--k', '8')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('vdw(3;2) k=8: bad', out)
        cert = self.path('runs', 'vdw_3_2_k8_bad.json')
        code, out = self.run_main('check-witness', '--certificate', cert, '--refute')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('no witness', out)

    def test_check_witness(self):
        d = Coloring.from_digits(Ground.interval(9), '001100110', 2)
        w = json.dumps(find_ap_witness(d, 3).to_json())
        argv = ['check-witness', '--kind', 'vdw', '--m', '3', '--ground', d.ground.header(), '--data', '001100110']
        self.assertEqual(self.run_main(*argv, '--witness', w)[0], EXIT_OK)
        self.assertEqual(self.run_main(*argv, '--refute')[0], EXIT_VERIFY)
        wrong = json.dumps(SubspaceWitness(BlockSystem.make(1, [[0]], {})).to_json())
        self.assertEqual(self.run_main(*argv, '--witness', wrong)[0], EXIT_VERIFY)

    def test_cnf_round_trip(self):
        code, out = self.run_main('export-cnf', '--kind', 'hj', '--m', '1', '--k', '2', '--out', self.path('hj.cnf'))
        self.assertEqual(code, EXIT_OK)
        self.assertIn('p cnf 4 10', out)

        with Solver(name='m22', bootstrap_with=build_cnf(KindSpec(Kind.HJ, 2, 2, 1), 1).clauses) as solver:
            self.assertTrue(solver.solve())
            model = solver.get_model()
        with open(self.path('model.txt'), 'w') as f:
            f.write('s SATISFIABLE\nv {} 0\n'.format(' '.join(str(v) for v in model)))
        code, out = self.run_main('decode-model', '--kind', 'hj', '--m', '1', '--k', '1', '--model', self.path('model.txt'))
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(os.path.exists(self.path('runs', 'hj_1_2_2_k1_bad.json')))

        with open(self.path('model.txt'), 'w') as f:
            f.write('1 2 0\n')
        code, _ = self.run_main('decode-model', '--kind', 'hj', '--m', '1', '--k', '1', '--model', self.path('model.txt'))
        self.assertEqual(code, EXIT_VERIFY)

    def test_db_actions(self):
        self.compute('hj', 1, 2, 6)
        db = self.path('results.json')
        code, out = self.run_main('db', 'list', '--db', db)
        self.assertEqual((code, out.strip()), (EXIT_OK, 'hj(1;2,2)=2'))
        code, out = self.run_main('db', 'get', '--kind', 'hj', '--m', '1', '--db', db)
        self.assertIn('hj(1;2,2)=2', out)
        code, out = self.run_main('db', 'get', '--kind', 'hj', '--m', '2', '--db', db)
        self.assertIn('hj(2;2,2): not recorded', out)
        code, out = self.run_main('db', 'check', '--rerun', '--db', db)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('1 entries, 0 problems', out)

    def test_pipeline(self):
        d = Coloring.from_function(Ground.cube(4, 2), lambda w: sum(w) % 2, 2)
        system = json.dumps(BlockSystem.make(4, [[p] for p in range(4)], {}).to_json())
        code, out = self.run_main('pipeline', '--ground', d.ground.header(), '--data', d.to_digits(),
                                  '--system', system, '--route', 'direct')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('line: ', out)
        with open(self.path('runs', 'pipeline_trace.json')) as f:
            trace = ReductionTrace.from_json(json.load(f))
        self.assertEqual([s['stage'] for s in trace.stages][:3], ['embed', 'canonical', 'oplus-direct'])
        self.assertEqual(trace.stage('oplus-direct')['base'], [0, 0])
        code, _ = self.run_main('pipeline', '--ground', d.ground.header(), '--data', d.to_digits(),
                                '--system', system)
        self.assertEqual(code, EXIT_VERIFY)

    def test_reduce_singleton(self):
        d = Coloring.from_function(Ground.cube(3, 2), lambda w: sum(w) % 2, 2)
        w = json.dumps(find_f13_witness(d, 2).to_json())
        argv = ['reduce', '--reduction', 'singleton', '--ground', d.ground.header(), '--data', d.to_digits()]
        code, out = self.run_main(*argv, '--witness', w)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('singleton: ', out)
        self.assertTrue(os.path.exists(self.path('runs', 'singleton_trace.json')))
        wrong = json.dumps(SubspaceWitness(BlockSystem.make(3, [[0]], {1: 0, 2: 0})).to_json())
        self.assertEqual(self.run_main(*argv, '--witness', wrong)[0], EXIT_VERIFY)


if __name__ == '__main__':
    unittest.main()

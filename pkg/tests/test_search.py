import threading
import unittest

from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import InvalidSize, RejectedResult
from search.certificate import Certificate
from search.engine import (ORACLE_LIMIT, Instance, NodeBudget, SearchOptions, all_colorings, exists_bad_coloring,
                           naive_bad_coloring)
from search.number import compute_number, next_admissible
from search.parallel import FoundSlot, parallel_search, split_prefixes
from search.symmetry import is_lex_leader, symmetry_group
from witnesses.kinds import Kind, KindSpec
from tests.common import TempDirTestCase, WorkbenchTestCase


def oracle_grid():
    """(spec, size) pairs small enough for full enumeration."""
    specs = []
    for c in (1, 2, 3):
        specs += [KindSpec(Kind.HJ, 2, c, 1), KindSpec(Kind.HJ, 2, c, 2), KindSpec(Kind.HJEQ, 2, c, 2),
                  KindSpec(Kind.F8, 2, c, 2), KindSpec(Kind.F9, 2, c, 2), KindSpec(Kind.F8S, 2, c, 2),
                  KindSpec(Kind.F9S, 2, c, 2), KindSpec(Kind.F13, 2, c, 1), KindSpec(Kind.F13, 2, c, 2),
                  KindSpec(Kind.F9SN, 2, c, 2, 1)]
    for c in (1, 2):
        specs += [KindSpec(Kind.HJ, 3, c, 1), KindSpec(Kind.HJEQ, 3, c, 1), KindSpec(Kind.F13, 3, c, 1)]
    pairs = [(spec, k) for spec in specs for k in range(1, 5) if spec.admissible(k)]
    pairs += [(KindSpec(Kind.VDW, 1, 2, 3), n) for n in range(1, 10)]
    pairs += [(KindSpec(Kind.GW, 2, 2, 1), n) for n in range(1, 4)]
    pairs += [(KindSpec(Kind.OPLUS, 2, c, omega_strict=s), m) for c in (2, 3) for s in (False, True)
              for m in range(1, 5)]
    return [(spec, k) for spec, k in pairs if spec.c ** spec.ground(k).size <= ORACLE_LIMIT]


class EngineTestCase(WorkbenchTestCase):

    def test_hj_line_two_letters(self):
        spec = KindSpec(Kind.HJ, 2, 2, 1)
        bad = exists_bad_coloring(spec, 1)
        self.assertEqual(bad.verdict, 'bad')
        self.assertBadColoring(spec, 1, bad.coloring)
        self.assertEqual(exists_bad_coloring(spec, 2).verdict, 'none-exists')

    def test_no_candidates_gives_zero_colouring(self):
        spec = KindSpec(Kind.HJ, 2, 2, 2)
        result = exists_bad_coloring(spec, 1)
        self.assertEqual(result.verdict, 'bad')
        self.assertEqual(result.coloring.to_digits(), '00')

    def test_trivial_candidate(self):
        result = exists_bad_coloring(KindSpec(Kind.VDW, 1, 2, 1), 1)
        self.assertEqual(result.verdict, 'none-exists')

    def test_inadmissible_size(self):
        with self.assertRaises(InvalidSize):
            exists_bad_coloring(KindSpec(Kind.F8S, 2, 2, 2), 3)
        self.assertEqual(exists_bad_coloring(KindSpec(Kind.F8S, 2, 2, 2), 3,
                                             SearchOptions(divisibility=False)).verdict, 'none-exists')

    def test_f8_star_refuted_at_k2(self):
        result = exists_bad_coloring(KindSpec(Kind.F8S, 2, 2, 2), 2)
        self.assertEqual(result.verdict, 'bad')
        d = result.coloring
        self.assertNotEqual(d((0, 1)), d((1, 0)))

    def test_vdw_certificate_at_eight(self):
        spec = KindSpec(Kind.VDW, 1, 2, 3)
        result = exists_bad_coloring(spec, 8)
        self.assertEqual(result.verdict, 'bad')
        self.assertBadColoring(spec, 8, result.coloring)
        self.assertEqual(exists_bad_coloring(spec, 9).verdict, 'none-exists')

    def test_node_budget(self):
        # proving W(3;3) = 27 takes far more nodes than one check interval
        result = exists_bad_coloring(KindSpec(Kind.VDW, 1, 3, 3), 27, SearchOptions(max_nodes=1))
        self.assertEqual(result.verdict, 'budget-exceeded')

    def test_seeds_and_threads_agree(self):
        spec = KindSpec(Kind.VDW, 1, 2, 3)
        for options in (SearchOptions(seed=5), SearchOptions(threads=3), SearchOptions(symmetry=False),
                        SearchOptions(threads=2, seed=11)):
            for n in (8, 9):
                result = exists_bad_coloring(spec, n, options)
                self.assertEqual(result.verdict, 'bad' if n == 8 else 'none-exists')
                if n == 8:
                    self.assertBadColoring(spec, 8, result.coloring)

    def test_oracle_agreement(self):
        for spec, k in oracle_grid():
            expected = naive_bad_coloring(spec, k)
            for options in (SearchOptions(), SearchOptions(symmetry=False),
                            SearchOptions(coordinate_symmetry=True, threads=2)):
                got = exists_bad_coloring(spec, k, options)
                self.assertEqual(got.verdict, 'none-exists' if expected is None else 'bad',
                                 '{} at {} with {}'.format(spec.label, k, options))
                if got.verdict == 'bad':
                    self.assertBadColoring(spec, k, got.coloring)

    def test_oracle_grid_reach(self):
        grid = oracle_grid()
        for kind in (Kind.HJEQ, Kind.F8, Kind.F9, Kind.F8S, Kind.F9S, Kind.F13):
            self.assertIn((KindSpec(kind, 2, 2, 2), 4), grid)
        self.assertIn((KindSpec(Kind.HJ, 2, 3, 1), 3), grid)
        self.assertIn((KindSpec(Kind.F13, 2, 3, 2), 3), grid)

    def test_naive_oracle(self):
        self.assertEqual(all_colorings(2, 2).tolist(), [[0, 0], [0, 1], [1, 0], [1, 1]])
        spec = KindSpec(Kind.HJ, 2, 2, 1)
        self.assertEqual(naive_bad_coloring(spec, 1).to_digits(), '01')
        self.assertIsNone(naive_bad_coloring(spec, 2))
        self.assertEqual(naive_bad_coloring(KindSpec(Kind.HJ, 2, 2, 2), 1).to_digits(), '00')


class SymmetryTestCase(WorkbenchTestCase):

    def test_group_sizes(self):
        self.assertEqual(len(symmetry_group(Ground.interval(5))), 1)
        self.assertEqual(len(symmetry_group(Ground.cube(2, 2))), 1)
        self.assertEqual(len(symmetry_group(Ground.cube(2, 2), coordinates=True)), 3)
        self.assertEqual(len(symmetry_group(Ground.grid(2, 3))), 7)

    def test_lex_leader(self):
        reflect = symmetry_group(Ground.interval(4))
        # 0111 reflects to 1110, renamed 0001 < 0111
        self.assertFalse(is_lex_leader([0, 1, 1, 1], 4, reflect))
        self.assertTrue(is_lex_leader([0, 0, 0, 1], 4, reflect))
        self.assertTrue(is_lex_leader([0, 1], 2, reflect))


class ParallelTestCase(WorkbenchTestCase):

    def test_found_slot_first_wins(self):
        slot = FoundSlot()
        results = []
        threads = [threading.Thread(target=lambda i=i: results.append(slot.put(i))) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        self.assertEqual(results.count(True), 1)
        self.assertIn(slot.get(timeout=1), range(8))

    def test_split_prefixes(self):
        instance = Instance(KindSpec(Kind.VDW, 1, 2, 3), 8, SearchOptions())
        prefixes = split_prefixes(instance, 8)
        self.assertGreaterEqual(len(prefixes), 1)
        self.assertTrue(all(p[0] == 0 for p in prefixes))
        self.assertEqual(len({len(p) for p in prefixes}), 1)

    def test_worker_error_reaches_caller(self):
        class FailingInstance(Instance):
            def forbidden(self, table, r):
                if r == 8:
                    raise RuntimeError('forbidden failed at rank {}'.format(r))
                return super().forbidden(table, r)

        options = SearchOptions(threads=2)
        instance = FailingInstance(KindSpec(Kind.VDW, 1, 2, 3), 9, options)
        with self.assertRaises(RuntimeError):
            parallel_search(instance, NodeBudget(options), 2)


class NumberTestCase(WorkbenchTestCase):

    def test_hj_one_two_two(self):
        result = compute_number(KindSpec(Kind.HJ, 2, 2, 1), 6)
        self.assertTrue(result.exact)
        self.assertEqual(result.value, 2)
        self.assertEqual(result.summary(), 'hj(1;2,2)=2')
        self.assertEqual(result.lower_certificate.size, 1)
        self.assertTrue(result.lower_certificate.recheck())

    def test_van_der_waerden_and_gallai_witt(self):
        vdw = compute_number(KindSpec(Kind.VDW, 1, 2, 3), 12)
        gw = compute_number(KindSpec(Kind.GW, 1, 2, 2), 12)
        self.assertEqual(vdw.value, 9)
        self.assertEqual(gw.value, 9)
        self.assertBadColoring(vdw.spec, 8, vdw.lower_certificate.coloring)

    def test_f_family(self):
        values = {kind: compute_number(KindSpec(kind, 2, 2, 2), 6).value
                  for kind in (Kind.F8, Kind.F9, Kind.F8S, Kind.F9S, Kind.F13)}
        self.assertEqual(values, {Kind.F8: 4, Kind.F9: 4, Kind.F8S: 4, Kind.F9S: 4, Kind.F13: 3})

    def test_single_colour(self):
        self.assertEqual(compute_number(KindSpec(Kind.HJ, 2, 1, 2), 4).value, 2)

    def test_oplus_minimal(self):
        self.assertEqual(compute_number(KindSpec(Kind.OPLUS, 2, 2), 4).value, 2)
        three = compute_number(KindSpec(Kind.OPLUS, 2, 3), 2)
        self.assertFalse(three.exact)
        self.assertGreater(three.lower, 2)

    def test_next_admissible(self):
        self.assertEqual(next_admissible(KindSpec(Kind.F8, 2, 2, 2), 2, True), 4)
        self.assertEqual(next_admissible(KindSpec(Kind.F8, 2, 2, 2), 2, False), 3)


class CertificateTestCase(TempDirTestCase):

    def test_round_trip(self):
        spec = KindSpec(Kind.VDW, 1, 2, 3)
        cert = Certificate.from_verdict(spec, 8, exists_bad_coloring(spec, 8))
        path = cert.save(self.path(cert.file_name()))
        loaded = Certificate.load(path)
        self.assertEqual(loaded, cert)
        self.assertTrue(loaded.recheck())
        obj = loaded.to_json()
        self.assertEqual(obj['coloring']['encoding'], 'base-c-string')
        self.assertEqual(obj['coloring']['ground'], 'interval:n=8')

    def test_tampered(self):
        spec = KindSpec(Kind.VDW, 1, 2, 3)
        cert = Certificate.from_verdict(spec, 8, exists_bad_coloring(spec, 8))
        cert.coloring = Coloring.constant(Ground.interval(8), 2)
        self.assertFalse(cert.recheck())
        obj = cert.to_json()
        obj['schema_version'] = 99
        with self.assertRaises(RejectedResult):
            Certificate.from_json(obj)

    def test_exhaustion_rerun(self):
        spec = KindSpec(Kind.HJ, 2, 2, 1)
        cert = Certificate.from_verdict(spec, 2, exists_bad_coloring(spec, 2))
        self.assertEqual(cert.verdict, 'none-exists')
        self.assertTrue(cert.recheck(rerun=True))


if __name__ == '__main__':
    unittest.main()

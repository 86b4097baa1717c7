import json
import os
import unittest
from functools import lru_cache

from combinatorics.errors import RejectedResult
from results.chain import HOLDS, NOT_COMPARABLE, VIOLATED, compare_bounds, verify_chain
from results.db import ResultsDb, db_check, db_get, db_list, db_record, load_db, save_db
from search.engine import SearchOptions
from search.number import NumberResult, compute_number
from witnesses.kinds import Kind, KindSpec
from tests.common import TempDirTestCase

F_FAMILY = (Kind.F8, Kind.F9, Kind.F8S, Kind.F9S, Kind.F13)


@lru_cache(maxsize=None)
def computed(spec: KindSpec, max_size: int, divisibility: bool = True) -> NumberResult:
    return compute_number(spec, max_size, SearchOptions(divisibility=divisibility))


class DbTestCase(TempDirTestCase):

    def setUp(self):
        super().setUp()
        self.db = ResultsDb(self.path('results.json'))
        self.spec = KindSpec(Kind.HJ, 2, 2, 1)

    def test_record_and_get(self):
        db_record(self.db, self.spec, computed(self.spec, 6))
        db = load_db(self.path('results.json'), check=True)
        self.assertEqual(db.bounds(self.spec), (2, 2))
        result = db_get(db, self.spec)
        self.assertEqual(result.summary(), 'hj(1;2,2)=2')
        self.assertTrue(result.lower_certificate.recheck())
        self.assertEqual(result.upper_certificate.verdict, 'none-exists')
        refs = db.certificate_refs(self.spec)
        self.assertTrue(refs['lower'].startswith('certificates'))
        self.assertTrue(os.path.exists(db.resolve(refs['upper'])))
        self.assertEqual(db_list(db), ['hj(1;2,2)=2'])
        self.assertIsNotNone(db.written_at)

    def test_absent_key(self):
        self.assertIsNone(db_get(self.db, KindSpec(Kind.HJ, 3, 2, 1)))
        self.assertIsNone(self.db.bounds(KindSpec(Kind.HJ, 3, 2, 1)))
        self.assertEqual(load_db(self.path('missing.json')).entries, {})

    def test_open_interval_listing(self):
        db_record(self.db, self.spec, NumberResult(self.spec, 2), save=False)
        self.assertEqual(db_list(self.db), ['hj(1;2,2) in [2, ?]'])

    def test_tampered_certificate(self):
        db_record(self.db, self.spec, computed(self.spec, 6))
        path = self.db.resolve(self.db.certificate_refs(self.spec)['lower'])
        with open(path) as f:
            obj = json.load(f)
        obj['coloring']['data'] = '00'
        with open(path, 'w') as f:
            json.dump(obj, f)
        self.assertEqual(len(db_check(self.db)), 1)
        with self.assertRaises(RejectedResult):
            load_db(self.path('results.json'), check=True)

    def test_rejects_inconsistent_result(self):
        with self.assertRaises(RejectedResult):
            db_record(self.db, self.spec, NumberResult(self.spec, 3, 2), save=False)
        bad = computed(self.spec, 6)
        with self.assertRaises(RejectedResult):
            db_record(self.db, self.spec, NumberResult(self.spec, 1, 2, bad.lower_certificate), save=False)

    def test_schema_version(self):
        with open(self.path('old.json'), 'w') as f:
            json.dump({'schema_version': 0, 'results': {}}, f)
        with self.assertRaises(RejectedResult):
            load_db(self.path('old.json'))

    def test_all_sizes_result_kept_apart(self):
        spec = KindSpec(Kind.F9S, 2, 2, 2)
        db_record(self.db, spec, computed(spec, 6))
        db_record(self.db, spec, computed(spec, 6, False))
        self.assertEqual(self.db.keys(), ['f9s(2;2,2)', 'f9s(2;2,2)[all-sizes]'])
        self.assertEqual(self.db.bounds(spec), (4, 4))
        self.assertEqual(self.db.bounds(spec, divisibility=False), (3, 3))
        self.assertTrue(self.db.restricted(spec))
        self.assertFalse(self.db.restricted(spec, divisibility=False))
        db = load_db(self.path('results.json'), check=True)
        self.assertFalse(db_get(db, spec, divisibility=False).divisibility)
        self.assertEqual(db_list(db), ['f9s(2;2,2)=4', 'f9s(2;2,2)[all-sizes]=3'])

    def test_rejects_certificate_of_other_scan(self):
        spec = KindSpec(Kind.F9S, 2, 2, 2)
        strict, all_sizes = computed(spec, 6), computed(spec, 6, False)
        mixed = NumberResult(spec, 3, 3, all_sizes.lower_certificate, strict.lower_certificate, False)
        with self.assertRaises(RejectedResult):
            db_record(self.db, spec, mixed, save=False)

    def test_rerun_check(self):
        db_record(self.db, self.spec, computed(self.spec, 6))
        save_db(self.db)
        self.assertEqual(db_check(load_db(self.path('results.json')), rerun=True), [])


class ChainTestCase(TempDirTestCase):

    def setUp(self):
        super().setUp()
        self.db = ResultsDb(self.path('results.json'))
        for kind in F_FAMILY:
            spec = KindSpec(kind, 2, 2, 2)
            db_record(self.db, spec, computed(spec, 6), save=False)
        save_db(self.db)

    def test_compare_bounds(self):
        self.assertEqual(compare_bounds((3, 3), (4, None)), HOLDS)
        self.assertEqual(compare_bounds((5, 5), (2, 4)), VIOLATED)
        self.assertEqual(compare_bounds((3, None), (4, 4)), NOT_COMPARABLE)
        self.assertEqual(compare_bounds((9, 9), (9, 9), '='), HOLDS)
        self.assertEqual(compare_bounds((9, 9), (9, None), '='), NOT_COMPARABLE)
        self.assertEqual(compare_bounds(None, (1, 1)), NOT_COMPARABLE)

    def test_strict_mode(self):
        report = verify_chain(self.db, 'strict')
        (entry,) = report.find('f9*<=f13')
        self.assertEqual(entry.status, VIOLATED)
        self.assertEqual((entry.left_bound, entry.right_bound), ((4, 4), (3, 3)))
        self.assertFalse(report.ok)
        # both sides of a violation point at their certificate files
        for side in ('left', 'right'):
            refs = entry.certificates[side]
            self.assertTrue(all(os.path.exists(self.db.resolve(refs[key])) for key in ('lower', 'upper')))

    def test_roundup_mode(self):
        report = verify_chain(self.db, 'roundup')
        (entry,) = report.find('f9*<=f13')
        self.assertEqual(entry.status, HOLDS)
        self.assertEqual(entry.right_bound, (4, 4))
        for ident in ('f8<=f9', 'f8*<=f9*', 'f8<=f8*', 'f9<=f9*'):
            self.assertEqual([e.status for e in report.find(ident)], [HOLDS], ident)
        self.assertTrue(report.ok)
        self.assertEqual(report.find('f9*<=hjeq')[0].status, NOT_COMPARABLE)

    def test_roundup_reads_stored_divisibility(self):
        spec = KindSpec(Kind.F9S, 2, 2, 2)
        db_record(self.db, spec, computed(spec, 6, False), save=False)
        report = verify_chain(self.db, 'roundup')
        (entry,) = report.find('f9*<=f13', 'f9s(2;2,2)[all-sizes]')
        self.assertEqual((entry.left_bound, entry.right_bound), ((3, 3), (3, 3)))
        self.assertEqual(entry.status, HOLDS)
        (entry,) = report.find('f9*<=f13', 'f9s(2;2,2)')
        self.assertEqual(entry.right_bound, (4, 4))

    def test_report_file(self):
        report = verify_chain(self.db, 'roundup')
        path = report.save(self.path('chain.json'))
        with open(path) as f:
            obj = json.load(f)
        self.assertEqual(obj['mode'], 'roundup')
        self.assertEqual(obj['violated'], 0)
        self.assertEqual(obj['holds'], report.count(HOLDS))

    def test_van_der_waerden_identity(self):
        for spec in (KindSpec(Kind.VDW, 1, 2, 3), KindSpec(Kind.GW, 1, 2, 2)):
            db_record(self.db, spec, computed(spec, 12), save=False)
        (entry,) = verify_chain(self.db).find('vdw(m+1)=gw(1,m)')
        self.assertEqual(entry.status, HOLDS)
        self.assertEqual(entry.right, 'gw(1,2;2)')

    def test_gallai_witt_dependency(self):
        spec = KindSpec(Kind.HJ, 2, 2, 1)
        db_record(self.db, spec, computed(spec, 6), save=False)
        (entry,) = verify_chain(self.db).find('hj<=f13(h w)', 'hj(1;2,2)')
        self.assertEqual(entry.status, NOT_COMPARABLE)
        self.assertIn('not exact', entry.right)

    def test_f13_ladder(self):
        spec = KindSpec(Kind.F13, 2, 2, 1)
        db_record(self.db, spec, computed(spec, 6), save=False)
        (entry,) = verify_chain(self.db).find("f13(m)<=f13(m')")
        self.assertEqual(entry.status, HOLDS)


if __name__ == '__main__':
    unittest.main()

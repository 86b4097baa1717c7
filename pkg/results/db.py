"""
The results database: one JSON file mapping a result key to its NumberResult and
the certificate files backing its bounds. Certificates live next to the database
under certificates/ and are referenced by relative path.
"""
import datetime
import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from combinatorics.errors import RejectedResult
from search.certificate import Certificate
from search.number import NumberResult
from utils import dump_json
from witnesses.kinds import KindSpec

SCHEMA_VERSION = 1
DEFAULT_DB = os.environ.get('HJWB_DB', 'results.json')
CERT_DIR = 'certificates'


@dataclass
class ResultsDb:
    path: Optional[str] = None
    entries: Dict[str, dict] = field(default_factory=dict)
    written_at: Optional[str] = None

    @property
    def root(self) -> str:
        return os.path.dirname(os.path.abspath(self.path)) if self.path else os.getcwd()

    def resolve(self, ref: Optional[str]) -> Optional[str]:
        if ref is None:
            return None
        return ref if os.path.isabs(ref) else os.path.join(self.root, ref)

    def keys(self) -> List[str]:
        return sorted(self.entries)

    def entry(self, spec: KindSpec, divisibility: bool = True) -> Optional[dict]:
        entry = self.entries.get(spec.result_key(divisibility))
        if entry is None or KindSpec.from_json(entry['spec']) != spec:
            return None
        return entry

    def bounds(self, spec: KindSpec, divisibility: bool = True) -> Optional[Tuple[int, Optional[int]]]:
        """(lower, upper) on the value, upper None when no exhaustion record exists."""
        entry = self.entry(spec, divisibility)
        if entry is None:
            return None
        return entry['lower'], entry['upper']

    def restricted(self, spec: KindSpec, divisibility: bool = True) -> bool:
        """Whether the stored scan only tried sizes divisible by |alphabet|."""
        entry = self.entry(spec, divisibility) or {}
        return spec.restricted(bool(entry.get('divisibility', divisibility)))

    def certificate_refs(self, spec: KindSpec, divisibility: bool = True) -> Dict[str, Optional[str]]:
        entry = self.entry(spec, divisibility) or {}
        return {'lower': entry.get('lower_certificate'), 'upper': entry.get('upper_certificate')}

    def to_json(self):
        return {'schema_version': SCHEMA_VERSION, 'written_at': self.written_at,
                'results': {key: self.entries[key] for key in self.keys()}}


def load_db(path: str = DEFAULT_DB, check: bool = False) -> ResultsDb:
    if not os.path.exists(path):
        return ResultsDb(path)
    with open(path) as f:
        obj = json.load(f)
    if obj.get('schema_version') != SCHEMA_VERSION:
        raise RejectedResult('unsupported database schema {}'.format(obj.get('schema_version')))
    db = ResultsDb(path, dict(obj.get('results', {})), obj.get('written_at'))
    if check:
        problems = db_check(db)
        if problems:
            raise RejectedResult('; '.join(problems))
    return db


def save_db(db: ResultsDb, path: Optional[str] = None) -> str:
    db.path = path or db.path or DEFAULT_DB
    db.written_at = datetime.datetime.now().isoformat(timespec='seconds')
    return dump_json(db.path, db.to_json())


def _check_certificates(result: NumberResult):
    lower, upper = result.lower_certificate, result.upper_certificate
    for cert in (lower, upper):
        if cert is not None and (cert.spec != result.spec or cert.spec.result_key(cert.divisibility) != result.key):
            raise RejectedResult('certificate for {} attached to {}'.format(
                cert.spec.result_key(cert.divisibility), result.key))
    if lower is not None and (not lower.is_bad or lower.size >= result.lower or not lower.recheck()):
        raise RejectedResult('lower-bound certificate for {} does not verify'.format(result.spec.label))
    if upper is not None and (upper.is_bad or upper.size != result.upper or not upper.recheck()):
        raise RejectedResult('upper-bound certificate for {} does not verify'.format(result.spec.label))
    if result.upper is not None and result.upper < result.lower:
        raise RejectedResult('bounds {} > {} are inconsistent'.format(result.lower, result.upper))


def db_record(db: ResultsDb, spec: KindSpec, result: NumberResult, save: bool = True) -> ResultsDb:
    assert spec == result.spec, 'result belongs to {}, not {}'.format(result.spec.label, spec.label)
    _check_certificates(result)
    entry = result.to_json()
    for side, cert in (('lower', result.lower_certificate), ('upper', result.upper_certificate)):
        ref = None
        if cert is not None:
            ref = os.path.join(CERT_DIR, cert.file_name())
            cert.save(db.resolve(ref))
        entry[side + '_certificate'] = ref
    db.entries[result.key] = entry
    if save:
        save_db(db)
    return db


def _load_certificate(db: ResultsDb, ref: Optional[str]) -> Optional[Certificate]:
    path = db.resolve(ref)
    if path is None:
        return None
    if not os.path.exists(path):
        raise RejectedResult('certificate file {} is missing'.format(path))
    return Certificate.load(path)


def db_get(db: ResultsDb, spec: KindSpec, divisibility: bool = True) -> Optional[NumberResult]:
    entry = db.entry(spec, divisibility)
    if entry is None:
        return None
    return NumberResult(KindSpec.from_json(entry['spec']), entry['lower'], entry['upper'],
                        _load_certificate(db, entry.get('lower_certificate')),
                        _load_certificate(db, entry.get('upper_certificate')),
                        bool(entry.get('divisibility', True)))


def db_check(db: ResultsDb, rerun: bool = False) -> List[str]:
    """Re-verify every referenced certificate; returns the problems found."""
    problems = []
    for key in db.keys():
        try:
            entry = db.entries[key]
            result = db_get(db, KindSpec.from_json(entry['spec']), bool(entry.get('divisibility', True)))
            if result is None or result.key != key:
                raise RejectedResult('entry is stored under the wrong key')
            _check_certificates(result)
            if rerun and result.upper_certificate is not None and not result.upper_certificate.recheck(rerun=True):
                raise RejectedResult('exhaustion record for {} does not reproduce'.format(key))
        except (RejectedResult, OSError, ValueError, KeyError) as err:
            problems.append('{}: {}'.format(key, err))
    return problems


def db_list(db: ResultsDb) -> List[str]:
    lines = []
    for key in db.keys():
        entry = db.entries[key]
        if entry['upper'] is not None and entry['upper'] == entry['lower']:
            lines.append('{}={}'.format(key, entry['lower']))
        else:
            lines.append('{} in [{}, {}]'.format(key, entry['lower'], '?' if entry['upper'] is None else entry['upper']))
    return lines

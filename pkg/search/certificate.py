"""Certificates: serialised, independently re-checkable search verdicts."""
import json
import re
from dataclasses import dataclass, field
from typing import Optional

from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import RejectedResult
from utils import dump_json
from witnesses.kinds import KindSpec
from witnesses.verify import refute

SCHEMA_VERSION = 1
TOOL_VERSION = '0.3.0'
ENCODING = 'base-c-string'


@dataclass
class Certificate:
    spec: KindSpec
    size: int
    verdict: str
    coloring: Optional[Coloring] = None
    search: dict = field(default_factory=dict)
    divisibility: bool = True
    tool_version: str = TOOL_VERSION

    @classmethod
    def from_verdict(cls, spec: KindSpec, size: int, result, divisibility: bool = True) -> 'Certificate':
        return cls(spec, size, result.verdict, getattr(result, 'coloring', None), result.stats.to_json(), divisibility)

    @property
    def is_bad(self) -> bool:
        return self.verdict == 'bad'

    def to_json(self):
        obj = {
            'schema_version': SCHEMA_VERSION,
            'kind': self.spec.kind.value,
            'h': self.spec.h,
            'c': self.spec.c,
            'm': self.spec.m,
            'n': self.spec.n,
            'k': self.size,
            'omega_strict': self.spec.omega_strict,
            'divisibility': self.divisibility,
            'verdict': self.verdict,
            'coloring': None,
            'search': self.search,
            'tool_version': self.tool_version,
        }
        if self.coloring is not None:
            obj['coloring'] = {'ground': self.coloring.ground.header(), 'encoding': ENCODING,
                               'data': self.coloring.to_digits()}
        return obj

    @classmethod
    def from_json(cls, obj) -> 'Certificate':
        if obj.get('schema_version') != SCHEMA_VERSION:
            raise RejectedResult('unsupported certificate schema {}'.format(obj.get('schema_version')))
        spec = KindSpec.from_json(obj)
        coloring = None
        if obj.get('coloring'):
            payload = obj['coloring']
            if payload.get('encoding') != ENCODING:
                raise RejectedResult('unknown colouring encoding {}'.format(payload.get('encoding')))
            coloring = Coloring.from_digits(Ground.parse(payload['ground']), payload['data'], spec.c)
        return cls(spec, int(obj['k']), obj['verdict'], coloring, obj.get('search', {}),
                   bool(obj.get('divisibility', True)), obj.get('tool_version', TOOL_VERSION))

    def recheck(self, rerun: bool = False, options=None) -> bool:
        """A bad certificate must still admit no witness; exhaustion records are re-searched only on rerun."""
        if self.is_bad:
            if self.coloring is None or self.coloring.ground != self.spec.ground(self.size):
                return False
            return refute(self.spec, self.size, self.coloring) is None
        if self.verdict != 'none-exists':
            return False
        if not rerun:
            return True
        from search.engine import SearchOptions, exists_bad_coloring
        options = options or SearchOptions(divisibility=self.divisibility)
        return exists_bad_coloring(self.spec, self.size, options).verdict == 'none-exists'

    def file_name(self) -> str:
        stem = re.sub(r'[^A-Za-z0-9]+', '_', self.spec.result_key(self.divisibility)).strip('_')
        return '{}_k{}_{}.json'.format(stem, self.size, self.verdict)

    def save(self, path: str) -> str:
        return dump_json(path, self.to_json())

    @classmethod
    def load(cls, path: str) -> 'Certificate':
        with open(path) as f:
            return cls.from_json(json.load(f))

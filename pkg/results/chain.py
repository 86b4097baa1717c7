"""
The inequality chain auditor.

Each relation compares two quantities read from the results database. A
quantity is known as an interval [lower, upper] (upper None when open), so a
relation holds only when the left upper bound does not exceed the right lower
bound, and is violated only when the intervals are strictly the wrong way round.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from combinatorics.errors import InvalidKind
from results.db import ResultsDb
from utils import dump_json
from witnesses.kinds import Kind, KindSpec

MODES = ('strict', 'roundup')
HOLDS, VIOLATED, NOT_COMPARABLE = 'holds', 'violated', 'not-comparable'

Interval = Tuple[int, Optional[int]]


@dataclass
class ChainEntry:
    ident: str
    left: str
    left_bound: Optional[Interval]
    right: str
    right_bound: Optional[Interval]
    status: str
    mode: str
    certificates: Dict[str, dict] = field(default_factory=dict)

    def to_json(self):
        return {'id': self.ident, 'left': self.left, 'left_bound': self.left_bound, 'right': self.right,
                'right_bound': self.right_bound, 'status': self.status, 'mode': self.mode,
                'certificates': self.certificates}


@dataclass
class ChainReport:
    mode: str
    entries: List[ChainEntry] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for e in self.entries if e.status == status)

    def find(self, ident: str, left: Optional[str] = None) -> List[ChainEntry]:
        return [e for e in self.entries if e.ident == ident and (left is None or e.left == left)]

    @property
    def ok(self) -> bool:
        return self.count(VIOLATED) == 0

    def summary(self) -> str:
        return 'chain[{}]: {} holds, {} violated, {} not comparable'.format(
            self.mode, self.count(HOLDS), self.count(VIOLATED), self.count(NOT_COMPARABLE))

    def to_json(self):
        return {'mode': self.mode, 'entries': [e.to_json() for e in self.entries],
                'holds': self.count(HOLDS), 'violated': self.count(VIOLATED),
                'not_comparable': self.count(NOT_COMPARABLE)}

    def save(self, path: str) -> str:
        return dump_json(path, self.to_json())


@dataclass(frozen=True)
class Side:
    spec: KindSpec
    coefficient: int = 1
    divisibility: bool = True

    @property
    def label(self) -> str:
        key = self.spec.result_key(self.divisibility)
        return key if self.coefficient == 1 else '{}*{}'.format(self.coefficient, key)


def _same(spec: KindSpec, kind: Kind, m: Optional[int] = None, h: Optional[int] = None) -> KindSpec:
    return KindSpec(kind, spec.h if h is None else h, spec.c, spec.m if m is None else m)


def _exact(db: ResultsDb, spec: KindSpec) -> Optional[int]:
    bounds = db.bounds(spec)
    if bounds is None or bounds[1] is None or bounds[0] != bounds[1]:
        return None
    return bounds[0]


def _via_gallai_witt(scale: Callable[[KindSpec, int], KindSpec], m_of: Callable[[KindSpec], int]):
    """The right side depends on an exact Gallai-Witt value w_C(h, m)."""
    def right(spec: KindSpec, db: ResultsDb):
        gw = KindSpec(Kind.GW, spec.h, spec.c, m_of(spec))
        w = _exact(db, gw)
        if w is None:
            return '{} not exact'.format(gw.label)
        return Side(scale(spec, w))
    return right


# (id, left kind, guard on the left spec, right side, relation)
RELATIONS = [
    ('f8<=f9', Kind.F8, None, lambda s, db: Side(_same(s, Kind.F9)), '<='),
    ('f8*<=f9*', Kind.F8S, None, lambda s, db: Side(_same(s, Kind.F9S)), '<='),
    ('f8<=f8*', Kind.F8, None, lambda s, db: Side(_same(s, Kind.F8S)), '<='),
    ('f9<=f9*', Kind.F9, None, lambda s, db: Side(_same(s, Kind.F9S)), '<='),
    ('f8*<=hj', Kind.F8S, None, lambda s, db: Side(_same(s, Kind.HJ)), '<='),
    ('f9*<=f13', Kind.F9S, None, lambda s, db: Side(_same(s, Kind.F13)), '<='),
    ('f9*n<=f13(mn)', Kind.F9SN, None, lambda s, db: Side(_same(s, Kind.F13, m=s.m * s.n)), '<='),
    ('f9*<=m*hj(1)', Kind.F9S, None, lambda s, db: Side(_same(s, Kind.HJ, m=1, h=s.h ** s.m), s.m), '<='),
    ('hjeq<=m*hj(1)', Kind.HJEQ, None, lambda s, db: Side(_same(s, Kind.HJ, m=1, h=s.h ** s.m), s.m), '<='),
    ('hj<=m*hj(1)', Kind.HJ, lambda s: s.m >= 2, lambda s, db: Side(_same(s, Kind.HJ, m=1, h=s.h ** s.m), s.m), '<='),
    ('hj<=hjeq', Kind.HJ, None, lambda s, db: Side(_same(s, Kind.HJEQ)), '<='),
    ('f9*<=hjeq', Kind.F9S, None, lambda s, db: Side(_same(s, Kind.HJEQ)), '<='),
    ('vdw(m+1)=gw(1,m)', Kind.VDW, lambda s: s.m >= 2,
     lambda s, db: Side(KindSpec(Kind.GW, 1, s.c, s.m - 1)), '='),
    ('hj(1)<=f8*(h^2 w)', Kind.HJ, lambda s: s.m == 1,
     _via_gallai_witt(lambda s, w: _same(s, Kind.F8S, m=s.h * s.h * w), lambda s: 1), '<='),
    ('hj<=f13(h w)', Kind.HJ, None,
     _via_gallai_witt(lambda s, w: _same(s, Kind.F13, m=s.h * w), lambda s: s.m), '<='),
]


def _round_up(bound: Optional[Interval], h: int) -> Optional[Interval]:
    if bound is None:
        return None
    up = lambda v: None if v is None else -(-v // h) * h  # noqa: E731
    return up(bound[0]), up(bound[1])


def _scale(bound: Optional[Interval], coefficient: int) -> Optional[Interval]:
    if bound is None or coefficient == 1:
        return bound
    return bound[0] * coefficient, None if bound[1] is None else bound[1] * coefficient


def compare_bounds(left: Optional[Interval], right: Optional[Interval], relation: str = '<=') -> str:
    if left is None or right is None:
        return NOT_COMPARABLE
    (llo, lhi), (rlo, rhi) = left, right
    if relation == '=':
        if lhi is not None and rhi is not None and llo == lhi == rlo == rhi:
            return HOLDS
        if (lhi is not None and lhi < rlo) or (rhi is not None and rhi < llo):
            return VIOLATED
        return NOT_COMPARABLE
    if lhi is not None and lhi <= rlo:
        return HOLDS
    if rhi is not None and llo > rhi:
        return VIOLATED
    return NOT_COMPARABLE


def _entry(db: ResultsDb, ident: str, left: Side, right, relation: str, mode: str) -> ChainEntry:
    left_bound = _scale(db.bounds(left.spec, left.divisibility), left.coefficient)
    certificates = {'left': db.certificate_refs(left.spec, left.divisibility)}
    if not isinstance(right, Side):
        return ChainEntry(ident, left.label, left_bound, right, None, NOT_COMPARABLE, mode, certificates)
    right_bound = _scale(db.bounds(right.spec, right.divisibility), right.coefficient)
    # round up against the divisibility flags the two results were computed with
    if mode == 'roundup' and db.restricted(left.spec, left.divisibility) \
            and not db.restricted(right.spec, right.divisibility):
        right_bound = _round_up(right_bound, left.spec.h)
    certificates['right'] = db.certificate_refs(right.spec, right.divisibility)
    status = compare_bounds(left_bound, right_bound, relation)
    return ChainEntry(ident, left.label, left_bound, right.label, right_bound, status, mode, certificates)


def _relations(db: ResultsDb):
    stored = [(KindSpec.from_json(db.entries[key]['spec']), bool(db.entries[key].get('divisibility', True)))
              for key in db.keys()]
    for spec, divisibility in stored:
        for ident, kind, guard, right, relation in RELATIONS:
            if spec.kind != kind or (guard is not None and not guard(spec)):
                continue
            try:
                yield ident, Side(spec, divisibility=divisibility), right(spec, db), relation
            except InvalidKind:
                continue
    # f13 grows with the dimension
    f13 = sorted((s for s, _ in stored if s.kind == Kind.F13), key=lambda s: (s.h, s.c, s.m))
    for a in f13:
        for b in f13:
            if (a.h, a.c) == (b.h, b.c) and a.m < b.m:
                yield 'f13(m)<=f13(m\')', Side(a), Side(b), '<='


def verify_chain(db: ResultsDb, mode: str = 'strict', progress: bool = False) -> ChainReport:
    assert mode in MODES, 'unknown chain mode ' + mode
    report = ChainReport(mode)
    for ident, left, right, relation in tqdm(list(_relations(db)), desc='chain', disable=not progress, leave=False):
        report.entries.append(_entry(db, ident, left, right, relation, mode))
    return report

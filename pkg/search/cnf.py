"""
DIMACS export of "a bad colouring exists", and decoding of solver models.

Two colours use one variable per point (true = colour 1). More colours use
one-hot variables p*c + x + 1 with exactly-one constraints. Kinds whose
witness is a single monochromatic set forbid each set directly; the others
get an auxiliary "differs" variable per required-equal pair and one clause
per candidate asking that some pair differs.
"""
import io
from typing import Iterable, List, Sequence

from pysat.card import CardEnc, EncType
from pysat.formula import CNF, IDPool

from combinatorics.coloring import Coloring
from combinatorics.errors import InconsistentModel, InvalidModel, SizeLimit
from search.certificate import Certificate
from search.engine import SearchStats
from witnesses.candidates import compile_candidates
from witnesses.kinds import Kind, KindSpec
from witnesses.verify import refute

DEFAULT_CLAUSE_LIMIT = 2_000_000
ENCODING_VERSION = 'v1'
MONO_KINDS = (Kind.HJ, Kind.HJEQ, Kind.VDW, Kind.GW, Kind.OPLUS)


class _Builder(object):

    def __init__(self, spec: KindSpec, points: int, limit: int):
        self.spec = spec
        self.c = spec.c
        self.limit = limit
        self.pool = IDPool()
        self.cnf = CNF()
        # point variables are allocated first so they keep the numbering p*c + x + 1
        for p in range(points):
            for x in range(self.c if self.c > 2 else 1):
                self.pool.id(('x', p, x))

    def add(self, clause: List[int]):
        if len(self.cnf.clauses) >= self.limit:
            raise SizeLimit('more than {} clauses for {}'.format(self.limit, self.spec.label))
        self.cnf.append(clause)

    def lit(self, p: int, x: int) -> int:
        """Literal meaning "point p has colour x"."""
        if self.c == 2:
            v = self.pool.id(('x', p, 0))
            return v if x == 1 else -v
        return self.pool.id(('x', p, x))

    def exactly_one(self, points: int):
        if self.c == 1:
            for p in range(points):
                self.add([self.lit(p, 0)])
        if self.c <= 2:
            return
        for p in range(points):
            lits = [self.lit(p, x) for x in range(self.c)]
            for clause in CardEnc.equals(lits=lits, bound=1, vpool=self.pool, encoding=EncType.pairwise).clauses:
                self.add(clause)

    def forbid_monochromatic(self, group: Sequence[int]):
        for x in range(self.c):
            self.add([-self.lit(p, x) for p in group])

    def differs(self, p: int, q: int) -> int:
        key = ('y', min(p, q), max(p, q))
        fresh = key not in self.pool.obj2id
        y = self.pool.id(key)
        if not fresh:
            return y
        if self.c == 2:
            xp, xq = self.lit(p, 1), self.lit(q, 1)
            self.add([-y, xp, xq])
            self.add([-y, -xp, -xq])
            self.add([y, -xp, xq])
            self.add([y, xp, -xq])
        else:
            for x in range(self.c):
                self.add([-y, -self.lit(p, x), -self.lit(q, x)])
        return y


def build_cnf(spec: KindSpec, size: int, clause_limit: int = DEFAULT_CLAUSE_LIMIT) -> CNF:
    ground = spec.ground(size)
    builder = _Builder(spec, ground.size, clause_limit)
    builder.exactly_one(ground.size)
    for cand in compile_candidates(spec, size):
        if not cand.groups:
            v = builder.pool.id(('x', 0, 0))
            builder.add([v])
            builder.add([-v])
            continue
        if spec.kind in MONO_KINDS:
            for group in cand.groups:
                builder.forbid_monochromatic(group)
            continue
        ys = [builder.differs(group[i], group[i + 1]) for group in cand.groups for i in range(len(group) - 1)]
        builder.add(ys)
    cnf = builder.cnf
    cnf.nv = max(cnf.nv, builder.pool.top)
    return cnf


def header_comment(spec: KindSpec, size: int) -> str:
    return 'c kind={} h={} c={} k={} encoding={}'.format(spec.kind.value, spec.h, spec.c, size, ENCODING_VERSION)


def export_cnf(spec: KindSpec, size: int, path: str = None, clause_limit: int = DEFAULT_CLAUSE_LIMIT,
               divisibility: bool = True) -> str:
    """DIMACS text of the instance; also written to path when given."""
    spec.check_size(size, divisibility)
    cnf = build_cnf(spec, size, clause_limit)
    comments = [header_comment(spec, size), 'c label={} m={} n={}'.format(spec.label, spec.m, spec.n)]
    buf = io.StringIO()
    cnf.to_fp(buf, comments=comments)
    text = buf.getvalue()
    if path is not None:
        with open(path, 'w') as f:
            f.write(text)
    return text


def read_model(text: str) -> List[int]:
    """Literals of a solver model: accepts `v`-prefixed lines or bare integers, stops at 0."""
    lits = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in 'cs':
            continue
        if line[0] == 'v':
            line = line[1:]
        for token in line.split():
            value = int(token)
            if value == 0:
                return lits
            lits.append(value)
    return lits


def decode_coloring(spec: KindSpec, size: int, model: Iterable[int]) -> Coloring:
    ground = spec.ground(size)
    truth = {}
    for lit in model:
        truth[abs(lit)] = lit > 0
    table = []
    for p in range(ground.size):
        if spec.c <= 2:
            v = p + 1
            if v not in truth:
                raise InvalidModel('model does not assign point variable {}'.format(v))
            table.append(int(truth[v]) if spec.c == 2 else 0)
            continue
        hot = [x for x in range(spec.c) if truth.get(p * spec.c + x + 1, False)]
        if len(hot) != 1:
            raise InvalidModel('point {} has {} colours set in the model'.format(p, len(hot)))
        table.append(hot[0])
    return Coloring(ground, table, spec.c)


def decode_cnf_model(spec: KindSpec, size: int, model: Iterable[int], divisibility: bool = True) -> Certificate:
    d = decode_coloring(spec, size, model)
    witness = refute(spec, size, d)
    if witness is not None:
        raise InconsistentModel('decoded colouring {} admits {}'.format(d.to_digits(), witness))
    return Certificate(spec, size, 'bad', d, SearchStats().to_json(), divisibility)

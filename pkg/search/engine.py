"""
Bad-colouring search.

A colouring is bad when no candidate witness holds. The search assigns colours
to points in rank order; once every point of a candidate is coloured, the
candidate is checked, and a colour that would complete a witness is never
tried ("forced" pruning). Colours follow the max+1 rule and, with symmetry on,
only lex-leaders of the symmetry orbit are expanded.
"""
import threading
import time
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from combinatorics.coloring import Coloring
from witnesses.candidates import compile_candidates
from witnesses.kinds import KindSpec
from witnesses.verify import refute
from search.symmetry import is_lex_leader, symmetry_group

ORACLE_LIMIT = 2 ** 16
CHECK_EVERY = 256


@dataclass(frozen=True)
class SearchOptions:
    budget_seconds: Optional[float] = None
    max_nodes: Optional[int] = None
    threads: int = 1
    seed: int = 0
    symmetry: bool = True
    coordinate_symmetry: bool = False
    divisibility: bool = True
    progress: bool = False

    @classmethod
    def from_args(cls, args) -> 'SearchOptions':
        return cls(budget_seconds=getattr(args, 'budget', None),
                   max_nodes=getattr(args, 'max_nodes', None),
                   threads=max(1, getattr(args, 'threads', 1) or 1),
                   seed=getattr(args, 'seed', 0) or 0,
                   symmetry=not getattr(args, 'no_symmetry', False),
                   coordinate_symmetry=getattr(args, 'coord_symmetry', False),
                   divisibility=not getattr(args, 'no_divisibility', False),
                   progress=not getattr(args, 'quiet', True))


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0
    threads: int = 1
    seed: int = 0

    def to_json(self):
        return {'nodes': self.nodes, 'seconds': round(self.seconds, 6), 'threads': self.threads, 'seed': self.seed}


@dataclass
class Bad:
    coloring: Coloring
    stats: SearchStats = field(default_factory=SearchStats)
    verdict = 'bad'


@dataclass
class NoneExists:
    stats: SearchStats = field(default_factory=SearchStats)
    verdict = 'none-exists'


@dataclass
class OverBudget:
    stats: SearchStats = field(default_factory=SearchStats)
    verdict = 'budget-exceeded'


class OutOfBudget(Exception):
    pass


class Cancelled(Exception):
    pass


class NodeBudget(object):
    """Node and wall-clock limits shared by every worker of one search."""

    def __init__(self, options: SearchOptions):
        self.max_nodes = options.max_nodes
        self.deadline = None if options.budget_seconds is None else time.time() + options.budget_seconds
        self.nodes = 0
        self._lock = threading.Lock()

    def charge(self, nodes: int, check: bool = True):
        with self._lock:
            self.nodes += nodes
            total = self.nodes
        if not check:
            return
        if self.max_nodes is not None and total > self.max_nodes:
            raise OutOfBudget()
        if self.deadline is not None and time.time() > self.deadline:
            raise OutOfBudget()


class Instance(object):
    """A compiled (kind, size) search problem."""

    def __init__(self, spec: KindSpec, size: int, options: SearchOptions):
        self.spec = spec
        self.size = size
        self.ground = spec.ground(size)
        self.points = self.ground.size
        self.colors = spec.c
        self.candidates = compile_candidates(spec, size)
        self.trivial = any(not cand.groups for cand in self.candidates)
        self.closing = [[] for _ in range(self.points)]
        for cand in self.candidates:
            if not cand.groups:
                continue
            top = max(max(group) for group in cand.groups)
            own = next(group for group in cand.groups if top in group)
            rest = tuple(p for p in own if p != top)
            others = tuple(group for group in cand.groups if group is not own)
            self.closing[top].append((rest, others))
        self.symmetry = options.symmetry
        self.perms = symmetry_group(self.ground, options.coordinate_symmetry) if options.symmetry else []
        rng = np.random.default_rng(options.seed) if options.seed else None
        natural = list(range(self.colors))
        self.orders = [natural if rng is None else [int(x) for x in rng.permutation(self.colors)]
                       for _ in range(self.points)]

    def forbidden(self, table: List[int], r: int) -> set:
        """Colours at rank r that would complete a witness."""
        out = set()
        for rest, others in self.closing[r]:
            y = table[rest[0]]
            if any(table[p] != y for p in rest[1:]):
                continue
            if all(table[p] == table[group[0]] for group in others for p in group[1:]):
                out.add(y)
        return out

    def choices(self, table: List[int], r: int, top: int) -> List[int]:
        limit = min(self.colors, top + 1) if self.symmetry else self.colors
        banned = self.forbidden(table, r)
        return [x for x in self.orders[r] if x < limit and x not in banned]

    def accepts(self, table: List[int], length: int) -> bool:
        return not self.perms or is_lex_leader(table, length, self.perms)

    def coloring(self, table: List[int]) -> Coloring:
        return Coloring(self.ground, table, self.colors)


class Searcher(object):
    """Depth-first completion of a colour-table prefix."""

    def __init__(self, instance: Instance, budget: NodeBudget, stop: Optional[threading.Event] = None):
        self.instance = instance
        self.budget = budget
        self.stop = stop
        self.pending = 0

    def _tick(self):
        self.pending += 1
        if self.pending >= CHECK_EVERY:
            self.flush()
            if self.stop is not None and self.stop.is_set():
                raise Cancelled()

    def flush(self, check: bool = True):
        pending, self.pending = self.pending, 0
        self.budget.charge(pending, check)

    def run(self, prefix: List[int]) -> Optional[List[int]]:
        inst = self.instance
        table = list(prefix) + [0] * (inst.points - len(prefix))
        top = max(prefix) + 1 if prefix else 0
        try:
            if self._dfs(table, len(prefix), top):
                return table
            return None
        finally:
            self.flush(check=False)

    def _dfs(self, table: List[int], r: int, top: int) -> bool:
        inst = self.instance
        if r == inst.points:
            return True
        self._tick()
        for x in inst.choices(table, r, top):
            table[r] = x
            if not inst.accepts(table, r + 1):
                continue
            if self._dfs(table, r + 1, max(top, x + 1)):
                return True
        return False


def exists_bad_coloring(spec: KindSpec, size: int, options: Optional[SearchOptions] = None):
    """Bad(d), NoneExists or OverBudget for spec at size."""
    options = options or SearchOptions()
    spec.check_size(size, options.divisibility)
    start = time.time()
    stats = SearchStats(threads=options.threads, seed=options.seed)
    instance = Instance(spec, size, options)
    if instance.trivial:
        stats.seconds = time.time() - start
        return NoneExists(stats)

    if not instance.candidates:
        stats.seconds = time.time() - start
        return Bad(instance.coloring([0] * instance.points), stats)

    budget = NodeBudget(options)
    if options.threads > 1:
        from search.parallel import parallel_search
        table, exhausted = parallel_search(instance, budget, options.threads)
    else:
        table, exhausted = None, True
        try:
            table = Searcher(instance, budget).run([])
        except OutOfBudget:
            exhausted = False
    stats.nodes = budget.nodes
    stats.seconds = time.time() - start

    if table is not None:
        d = instance.coloring(table)
        if refute(spec, size, d) is not None:
            raise RuntimeError('search returned a colouring that admits a witness: ' + d.to_digits())
        return Bad(d, stats)
    if not exhausted:
        return OverBudget(stats)
    return NoneExists(stats)


def all_colorings(c: int, size: int) -> np.ndarray:
    """Every colouring of size points as a (c^size, size) array, rows in product order."""
    powers = c ** np.arange(size - 1, -1, -1, dtype=np.int64)
    return (np.arange(c ** size, dtype=np.int64)[:, None] // powers % c).astype(np.uint8)


def naive_bad_coloring(spec: KindSpec, size: int, limit: int = ORACLE_LIMIT) -> Optional[Coloring]:
    """
    Reference oracle: every colouring at once, masked by every candidate. The first
    bad row in product order is re-checked by refute before it is returned.
    """
    ground = spec.ground(size)
    assert spec.c ** ground.size <= limit, 'oracle limited to {} colourings'.format(limit)
    tables = all_colorings(spec.c, ground.size)
    bad = np.ones(len(tables), dtype=bool)
    for candidate in compile_candidates(spec, size):
        holds = np.ones(len(tables), dtype=bool)
        for group in candidate.groups:
            cols = tables[:, list(group)]
            holds &= (cols == cols[:, :1]).all(axis=1)
        bad &= ~holds
        if not bad.any():
            return None
    if not bad.any():
        return None
    d = Coloring(ground, tables[int(np.argmax(bad))], spec.c)
    if refute(spec, size, d) is not None:
        raise RuntimeError('oracle colouring admits a witness: ' + d.to_digits())
    return d

"""
Branch-parallel search: colour-table prefixes are split across worker threads
that share only a stop flag, the node budget and a result slot.
"""
import queue
import threading
from typing import List, Optional, Tuple

from search.engine import Cancelled, Instance, NodeBudget, OutOfBudget, Searcher

__all__ = ['FoundSlot', 'split_prefixes', 'parallel_search']

PREFIXES_PER_THREAD = 4


class FoundSlot(object):
    """A thread-safe single-assignment result. The first put wins."""

    def __init__(self):
        self._result = None
        self._lock = threading.Lock()
        self._cond = threading.Condition(self._lock)

    def put(self, result) -> bool:
        with self._lock:
            if self._result is not None:
                return False
            self._result = result
            self._cond.notify_all()
            return True

    def get(self, timeout: Optional[float] = None):
        with self._lock:
            if self._result is None:
                self._cond.wait(timeout)
            return self._result

    def peek(self):
        with self._lock:
            return self._result


def split_prefixes(instance: Instance, target: int) -> List[List[int]]:
    """Breadth-first expansion until at least target prefixes exist or depth points-1 is reached."""
    layer = [[]]
    depth = 0
    while len(layer) < target and depth < instance.points - 1:
        nxt = []
        for prefix in layer:
            table = prefix + [0] * (instance.points - depth)
            top = max(prefix) + 1 if prefix else 0
            for x in instance.choices(table, depth, top):
                table[depth] = x
                if instance.accepts(table, depth + 1):
                    nxt.append(prefix + [x])
        layer = nxt
        depth += 1
        if not layer:
            break
    return layer


def parallel_search(instance: Instance, budget: NodeBudget, threads: int) -> Tuple[Optional[List[int]], bool]:
    """(bad table or None, whether the space was exhausted)."""
    prefixes = split_prefixes(instance, PREFIXES_PER_THREAD * threads)
    work = queue.Queue()
    for prefix in prefixes:
        work.put(prefix)
    stop = threading.Event()
    overrun = threading.Event()
    slot = FoundSlot()
    errors = []

    def drain():
        searcher = Searcher(instance, budget, stop)
        while not stop.is_set():
            try:
                prefix = work.get_nowait()
            except queue.Empty:
                return
            try:
                table = searcher.run(prefix)
            except Cancelled:
                return
            except OutOfBudget:
                overrun.set()
                stop.set()
                return
            if table is not None:
                slot.put(table)
                stop.set()
                return

    def worker():
        try:
            drain()
        except Exception as err:
            # a lost prefix must not read as an exhausted space
            errors.append(err)
            stop.set()

    workers = [threading.Thread(target=worker, name='search-{}'.format(i), daemon=True) for i in range(threads)]
    for t in workers:
        t.start()
    for t in workers:
        t.join()
    if errors:
        raise errors[0]
    table = slot.peek()
    return table, table is not None or not overrun.is_set()

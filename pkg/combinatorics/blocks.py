"""
Block systems S(<M_l : l<m>, rho) and the subspaces they name.

Blocks are kept sorted by their minimum element; every predicate used by the
partition numbers is invariant under permuting the blocks.
"""
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from combinatorics.errors import InvalidWitness, NotAMember
from combinatorics.words import Profile, Word, check_word, position_weights

BLOCK_CONSTRAINTS = ('any', 'equal', 'size', 'singleton')


@dataclass(frozen=True)
class BlockSystem:
    k: int
    blocks: Tuple[Tuple[int, ...], ...]
    anchor: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block:
                raise InvalidWitness('empty block in {}'.format(self.blocks))
            if list(block) != sorted(block):
                raise InvalidWitness('block {} is not sorted'.format(block))
            for p in block:
                if p < 0 or p >= self.k or p in seen:
                    raise InvalidWitness('block position {} repeated or outside [{}]'.format(p, self.k))
                seen.add(p)
        mins = [block[0] for block in self.blocks]
        if mins != sorted(mins):
            raise InvalidWitness('blocks not ordered by minimum element')
        anchored = [p for p, _ in self.anchor]
        if anchored != sorted(set(range(self.k)) - seen):
            raise InvalidWitness('anchor positions {} do not cover the complement of the blocks'.format(anchored))

    @classmethod
    def make(cls, k: int, blocks: Sequence[Sequence[int]], anchor: Mapping[int, int]) -> 'BlockSystem':
        blocks = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else -1)
        return cls(k, tuple(blocks), tuple(sorted((int(p), int(a)) for p, a in anchor.items())))

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def anchor_map(self) -> Dict[int, int]:
        return dict(self.anchor)

    @property
    def moving(self) -> Tuple[int, ...]:
        return tuple(sorted(p for block in self.blocks for p in block))

    def point(self, letters: Sequence[int]) -> Word:
        """The subspace point taking letters[l] on block l."""
        w = [0] * self.k
        for p, a in self.anchor:
            w[p] = a
        for block, a in zip(self.blocks, letters):
            for p in block:
                w[p] = a
        return tuple(w)

    def to_json(self):
        return {'k': self.k, 'blocks': [list(b) for b in self.blocks], 'anchor': [list(pa) for pa in self.anchor]}

    @classmethod
    def from_json(cls, obj) -> 'BlockSystem':
        return cls(int(obj['k']), tuple(tuple(b) for b in obj['blocks']), tuple(tuple(pa) for pa in obj['anchor']))


def check_anchor_letters(S: BlockSystem, h: int):
    for _, a in S.anchor:
        if a < 0 or a >= h:
            raise InvalidWitness('anchor letter {} outside alphabet of size {}'.format(a, h))


def subspace_points(S: BlockSystem, h: int) -> list:
    check_anchor_letters(S, h)
    return [S.point(letters) for letters in product(range(h), repeat=S.m)]


def subspace_ranks(S: BlockSystem, h: int) -> np.ndarray:
    """Ranks of subspace_points(S, h), in the same order."""
    weights = position_weights(S.k, h)
    base = sum(a * int(weights[p]) for p, a in S.anchor)
    block_weights = np.array([int(weights[list(b)].sum()) for b in S.blocks], dtype=np.int64)
    assignments = np.array(list(product(range(h), repeat=S.m)), dtype=np.int64).reshape(h ** S.m, S.m)
    return base + assignments @ block_weights


def _block_tuples(k: int, m: int, cap: Optional[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    # lexicographic in the block tuples: each block is chosen by its minimum, then its other positions
    used = [False] * k
    blocks = []

    def grow(p, size):
        yield (p,)
        if cap is not None and size >= cap:
            return
        for q in range(p + 1, k):
            if not used[q]:
                used[q] = True
                for rest in grow(q, size + 1):
                    yield (p,) + rest
                used[q] = False

    def rec(lo):
        if len(blocks) == m:
            yield tuple(blocks)
            return
        if sum(not used[q] for q in range(lo, k)) < m - len(blocks):
            return
        for p in range(lo, k):
            if used[p]:
                continue
            used[p] = True
            for block in grow(p, 1):
                blocks.append(block)
                yield from rec(p + 1)
                blocks.pop()
            used[p] = False

    yield from rec(0)


def enumerate_block_systems(k: int, m: int, h: int, constraint: str = 'any', n: Optional[int] = None) -> Iterator[BlockSystem]:
    assert constraint in BLOCK_CONSTRAINTS, 'unknown block constraint ' + constraint
    if m < 1 or k < m:
        return
    if constraint == 'singleton':
        constraint, n = 'size', 1
    if constraint == 'size':
        assert n is not None and n >= 1, 'size constraint needs n >= 1'
    cap = n if constraint == 'size' else None
    for blocks in _block_tuples(k, m, cap):
        sizes = {len(b) for b in blocks}
        if constraint == 'equal' and len(sizes) != 1:
            continue
        if constraint == 'size' and sizes != {n}:
            continue
        used = {p for b in blocks for p in b}
        free = [p for p in range(k) if p not in used]
        for letters in product(range(h), repeat=len(free)):
            yield BlockSystem(k, blocks, tuple(zip(free, letters)))


def enumerate_lines(k: int, h: int) -> Iterator[BlockSystem]:
    return enumerate_block_systems(k, 1, h, 'any')


def block_profile(nu: Sequence[int], S: BlockSystem, h: int) -> Profile:
    nu = check_word(nu, h)
    if len(nu) != S.k:
        raise NotAMember('word of length {} against a system on [{}]'.format(len(nu), S.k))
    for p, a in S.anchor:
        if nu[p] != a:
            raise NotAMember('word disagrees with the anchor at position {}'.format(p))
    counts = [0] * h
    for block in S.blocks:
        letters = {nu[p] for p in block}
        if len(letters) != 1:
            raise NotAMember('word is not constant on block {}'.format(block))
        counts[letters.pop()] += 1
    return tuple(counts)

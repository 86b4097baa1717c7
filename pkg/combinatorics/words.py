"""
Words over a finite alphabet.

A word of length k is a tuple of letters in 0..h-1 indexed by the positions
[k] = {0..k-1}. Ranks are the big-endian base-h value of the letters, so the
rank order of the cube coincides with itertools.product order.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence, Tuple

import numpy as np

from combinatorics.errors import InvalidPair, InvalidPositions, InvalidWord

Word = Tuple[int, ...]
Profile = Tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise InvalidWord('alphabet size must be positive, got {}'.format(self.size))

    @property
    def letters(self):
        return range(self.size)


@dataclass(frozen=True)
class ColorSet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError('colour count must be positive, got {}'.format(self.size))

    @property
    def colors(self):
        return range(self.size)


def check_word(w: Sequence[int], h: int) -> Word:
    w = tuple(int(x) for x in w)
    for x in w:
        if x < 0 or x >= h:
            raise InvalidWord('letter {} outside alphabet of size {}'.format(x, h))
    return w


def rank_word(w: Sequence[int], h: int) -> int:
    r = 0
    for x in check_word(w, h):
        r = r * h + x
    return r


def unrank_word(r: int, k: int, h: int) -> Word:
    if r < 0 or r >= h ** k:
        raise InvalidWord('rank {} outside 0..{}'.format(r, h ** k - 1))
    letters = []
    for _ in range(k):
        r, x = divmod(r, h)
        letters.append(x)
    return tuple(reversed(letters))


def position_weights(k: int, h: int) -> np.ndarray:
    """Weight h^(k-1-p) of position p in the rank."""
    return np.array([h ** (k - 1 - p) for p in range(k)], dtype=np.int64)


@lru_cache(maxsize=64)
def cube_words(k: int, h: int) -> np.ndarray:
    """All words of U_{k,h} as a (h^k, k) array, row i being unrank_word(i)."""
    table = np.array(list(product(range(h), repeat=k)), dtype=np.int64).reshape(h ** k, k)
    table.flags.writeable = False
    return table


def check_positions(positions: Iterable[int], k: int) -> Tuple[int, ...]:
    positions = tuple(sorted(set(int(p) for p in positions)))
    if positions and (positions[0] < 0 or positions[-1] >= k):
        raise InvalidPositions('positions {} not inside [{}]'.format(positions, k))
    return positions


def letter_counts(eta: Sequence[int], positions: Iterable[int], h: int) -> Profile:
    positions = check_positions(positions, len(eta))
    counts = [0] * h
    for p in positions:
        x = eta[p]
        if x < 0 or x >= h:
            raise InvalidWord('letter {} outside alphabet of size {}'.format(x, h))
        counts[x] += 1
    return tuple(counts)


def e_equiv(eta1: Sequence[int], eta2: Sequence[int], positions: Iterable[int]) -> bool:
    """E_N equivalence: equal letter counts on N."""
    if len(eta1) != len(eta2):
        raise InvalidPair('words of lengths {} and {}'.format(len(eta1), len(eta2)))
    positions = check_positions(positions, len(eta1))
    return Counter(eta1[p] for p in positions) == Counter(eta2[p] for p in positions)

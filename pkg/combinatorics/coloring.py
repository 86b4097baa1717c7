"""
Ground sets and colourings.

A colouring is a dense table of colours indexed by point rank. Ranks are
  cube(k,h)     big-endian base-h value of the word
  interval(n)   the integer itself
  grid(h,n)     big-endian base-n value of the coordinate tuple
  omega(m*,h)   position in the lexicographic list of compositions
"""
import re
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from combinatorics.errors import InvalidWord, OutOfOmega
from combinatorics.omega import in_omega, omega_enumerate, omega_index
from combinatorics.words import rank_word, unrank_word

DIGITS = '0123456789abcdefghijklmnopqrstuvwxyz'
GROUND_KINDS = ('cube', 'interval', 'grid', 'omega')


@dataclass(frozen=True)
class Ground:
    kind: str
    k: int = 0
    h: int = 1
    n: int = 0
    m_star: int = 0
    strict: bool = False

    @classmethod
    def cube(cls, k, h):
        return cls('cube', k=k, h=h)

    @classmethod
    def interval(cls, n):
        return cls('interval', n=n)

    @classmethod
    def grid(cls, h, n):
        return cls('grid', h=h, n=n)

    @classmethod
    def omega(cls, m_star, h, strict=False):
        return cls('omega', h=h, m_star=m_star, strict=strict)

    @property
    def size(self) -> int:
        if self.kind == 'cube':
            return self.h ** self.k
        if self.kind == 'interval':
            return self.n
        if self.kind == 'grid':
            return self.n ** self.h
        return len(omega_enumerate(self.m_star, self.h, self.strict))

    def point(self, rank: int):
        if self.kind == 'cube':
            return unrank_word(rank, self.k, self.h)
        if self.kind == 'interval':
            if not 0 <= rank < self.n:
                raise InvalidWord('rank {} outside [{}]'.format(rank, self.n))
            return rank
        if self.kind == 'grid':
            return unrank_word(rank, self.h, self.n)
        return omega_enumerate(self.m_star, self.h, self.strict)[rank]

    def rank(self, point) -> int:
        if self.kind == 'cube':
            if len(point) != self.k:
                raise InvalidWord('word of length {} in cube of side {}'.format(len(point), self.k))
            return rank_word(point, self.h)
        if self.kind == 'interval':
            if not 0 <= point < self.n:
                raise InvalidWord('{} outside [{}]'.format(point, self.n))
            return int(point)
        if self.kind == 'grid':
            if len(point) != self.h:
                raise InvalidWord('grid point {} has wrong dimension'.format(point))
            return rank_word(point, self.n)
        point = tuple(point)
        if len(point) != self.h or not in_omega(point, self.m_star, self.strict):
            raise OutOfOmega('{} is not in Omega({})'.format(point, self.m_star))
        return omega_index(self.m_star, self.h, self.strict)[point]

    def points(self):
        return [self.point(r) for r in range(self.size)]

    def header(self) -> str:
        if self.kind == 'cube':
            return 'cube:k={},h={}'.format(self.k, self.h)
        if self.kind == 'interval':
            return 'interval:n={}'.format(self.n)
        if self.kind == 'grid':
            return 'grid:h={},n={}'.format(self.h, self.n)
        return 'omega:m={},h={}{}'.format(self.m_star, self.h, ',strict' if self.strict else '')

    @classmethod
    def parse(cls, header: str) -> 'Ground':
        kind, _, rest = header.partition(':')
        if kind not in GROUND_KINDS:
            raise ValueError('unknown ground set header ' + header)
        params = dict(re.findall(r'(\w+)=(\d+)', rest))
        if kind == 'cube':
            return cls.cube(int(params['k']), int(params['h']))
        if kind == 'interval':
            return cls.interval(int(params['n']))
        if kind == 'grid':
            return cls.grid(int(params['h']), int(params['n']))
        return cls.omega(int(params['m']), int(params['h']), strict=rest.endswith('strict'))


@dataclass(frozen=True, eq=False)
class Coloring:
    ground: Ground
    table: Any
    colors: int

    def __post_init__(self):
        table = np.array(self.table, dtype=np.uint8).reshape(-1)
        table.flags.writeable = False
        object.__setattr__(self, 'table', table)
        assert self.colors >= 1, 'colour count must be positive'
        if len(table) != self.ground.size:
            raise ValueError('table of length {} for a ground set of size {}'.format(len(table), self.ground.size))
        if len(table) and int(table.max()) >= self.colors:
            raise ValueError('colour {} outside 0..{}'.format(int(table.max()), self.colors - 1))

    def __eq__(self, other):
        return (isinstance(other, Coloring) and self.ground == other.ground
                and self.colors == other.colors and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.ground, self.colors, self.table.tobytes()))

    def __call__(self, point) -> int:
        return int(self.table[self.ground.rank(point)])

    def recolor(self, rank: int, color: int) -> 'Coloring':
        table = self.table.copy()
        table[rank] = color
        return Coloring(self.ground, table, self.colors)

    def to_digits(self) -> str:
        return encode_digits(self.table, self.colors)

    @classmethod
    def from_digits(cls, ground: Ground, data: str, colors: int) -> 'Coloring':
        return cls(ground, decode_digits(data, colors), colors)

    @classmethod
    def from_function(cls, ground: Ground, fn, colors: int) -> 'Coloring':
        return cls(ground, [fn(p) for p in ground.points()], colors)

    @classmethod
    def constant(cls, ground: Ground, colors: int, color: int = 0) -> 'Coloring':
        return cls(ground, np.full(ground.size, color, dtype=np.uint8), colors)


def encode_digits(table: Sequence[int], colors: int) -> str:
    assert colors <= len(DIGITS), 'at most {} colours fit the digit encoding'.format(len(DIGITS))
    return ''.join(DIGITS[int(x)] for x in table)


def decode_digits(data: str, colors: int) -> np.ndarray:
    values = [DIGITS.index(ch) for ch in data.strip().lower()]
    if any(v >= colors for v in values):
        raise ValueError('digit string uses colours outside 0..{}'.format(colors - 1))
    return np.array(values, dtype=np.uint8)

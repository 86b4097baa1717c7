"""
Partition-number kinds and the witness objects whose existence defines them.

Every cube kind is a pair (block constraint, colour constraint):

    kind   blocks       colours
    hj     any          monochromatic
    hjeq   equal        monochromatic
    f8     any          balanced-constant
    f9     equal        balanced-constant
    f8s    any          profile-invariant
    f9s    equal        profile-invariant
    f9sn   size=n       profile-invariant
    f13    singleton    profile-invariant (letter counts on N)
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Ground
from combinatorics.errors import InvalidKind, InvalidSize, InvalidWitness, InvalidWord
from combinatorics.words import Alphabet, ColorSet


class Kind(str, Enum):
    HJ = 'hj'
    HJEQ = 'hjeq'
    F8 = 'f8'
    F9 = 'f9'
    F8S = 'f8s'
    F9S = 'f9s'
    F9SN = 'f9sn'
    F13 = 'f13'
    VDW = 'vdw'
    GW = 'gw'
    OPLUS = 'oplus'


CUBE_KINDS = (Kind.HJ, Kind.HJEQ, Kind.F8, Kind.F9, Kind.F8S, Kind.F9S, Kind.F9SN, Kind.F13)
DIVISIBLE_KINDS = (Kind.F8, Kind.F9, Kind.F8S, Kind.F9S, Kind.F9SN)

BLOCK_CONSTRAINT = {
    Kind.HJ: 'any', Kind.HJEQ: 'equal', Kind.F8: 'any', Kind.F9: 'equal',
    Kind.F8S: 'any', Kind.F9S: 'equal', Kind.F9SN: 'size', Kind.F13: 'singleton',
}
COLOR_CONSTRAINT = {
    Kind.HJ: 'monochromatic', Kind.HJEQ: 'monochromatic',
    Kind.F8: 'balanced', Kind.F9: 'balanced',
    Kind.F8S: 'profile', Kind.F9S: 'profile', Kind.F9SN: 'profile', Kind.F13: 'profile',
}


@dataclass(frozen=True)
class KindSpec:
    kind: Kind
    h: int = 2
    c: int = 2
    m: int = 1
    n: Optional[int] = None
    omega_strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'kind', Kind(self.kind))
        try:
            Alphabet(self.h), ColorSet(self.c)
        except (InvalidWord, ValueError) as err:
            raise InvalidKind(str(err))
        if self.kind == Kind.OPLUS:
            return
        if self.m < 1:
            raise InvalidKind('m must be at least 1, got {}'.format(self.m))
        if self.kind in DIVISIBLE_KINDS and self.m % self.h:
            raise InvalidKind('{} needs |alphabet| = {} to divide m = {}'.format(self.kind.value, self.h, self.m))
        if self.kind == Kind.F9SN and (self.n is None or self.n < 1):
            raise InvalidKind('f9sn needs a block size n >= 1')
        if self.kind == Kind.VDW and self.h != 1:
            object.__setattr__(self, 'h', 1)

    @property
    def is_cube(self) -> bool:
        return self.kind in CUBE_KINDS

    @property
    def divisible(self) -> bool:
        return self.kind in DIVISIBLE_KINDS

    @property
    def block_constraint(self) -> str:
        return BLOCK_CONSTRAINT[self.kind]

    @property
    def color_constraint(self) -> str:
        return COLOR_CONSTRAINT.get(self.kind, 'monochromatic')

    @property
    def label(self) -> str:
        if self.kind == Kind.VDW:
            return 'vdw({};{})'.format(self.m, self.c)
        if self.kind == Kind.GW:
            return 'gw({},{};{})'.format(self.h, self.m, self.c)
        if self.kind == Kind.OPLUS:
            return 'oplus({},{}{})'.format(self.h, self.c, ';strict' if self.omega_strict else '')
        if self.kind == Kind.F9SN:
            return 'f9sn({},{};{},{})'.format(self.m, self.n, self.h, self.c)
        return '{}({};{},{})'.format(self.kind.value, self.m, self.h, self.c)

    def restricted(self, divisibility: bool = True) -> bool:
        """Sizes are limited to multiples of |alphabet|."""
        return divisibility and self.divisible

    def result_key(self, divisibility: bool = True) -> str:
        """The label results are stored under; unrestricted scans of the f-family get their own key."""
        return self.label if divisibility or not self.divisible else self.label + '[all-sizes]'

    def ground(self, size: int) -> Ground:
        if size < 0:
            raise InvalidSize('negative size {}'.format(size))
        if self.kind == Kind.VDW:
            return Ground.interval(size)
        if self.kind == Kind.GW:
            return Ground.grid(self.h, size)
        if self.kind == Kind.OPLUS:
            return Ground.omega(size, self.h, self.omega_strict)
        return Ground.cube(size, self.h)

    def admissible(self, size: int, divisibility: bool = True) -> bool:
        if size < 1:
            return False
        return not (self.restricted(divisibility) and size % self.h)

    def check_size(self, size: int, divisibility: bool = True):
        if not self.admissible(size, divisibility):
            raise InvalidSize('size {} is not admissible for {}'.format(size, self.label))

    def first_size(self, divisibility: bool = True) -> int:
        return self.h if self.restricted(divisibility) else 1

    def with_colors(self, c: int) -> 'KindSpec':
        return KindSpec(self.kind, self.h, c, self.m, self.n, self.omega_strict)

    def to_json(self):
        return {'kind': self.kind.value, 'h': self.h, 'c': self.c, 'm': self.m, 'n': self.n,
                'omega_strict': self.omega_strict}

    @classmethod
    def from_json(cls, obj) -> 'KindSpec':
        return cls(Kind(obj['kind']), int(obj['h']), int(obj['c']), int(obj['m']),
                   None if obj.get('n') is None else int(obj['n']), bool(obj.get('omega_strict', False)))


@dataclass(frozen=True)
class SubspaceWitness:
    system: BlockSystem

    def to_json(self):
        return dict(type='subspace', **self.system.to_json())


@dataclass(frozen=True)
class F13Witness:
    k: int
    positions: Tuple[int, ...]
    anchor: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        positions = tuple(sorted(self.positions))
        if len(set(positions)) != len(positions) or (positions and (positions[0] < 0 or positions[-1] >= self.k)):
            raise InvalidWitness('positions {} are not a subset of [{}]'.format(self.positions, self.k))
        anchored = tuple(p for p, _ in self.anchor)
        if anchored != tuple(p for p in range(self.k) if p not in positions):
            raise InvalidWitness('anchor does not cover the complement of N')
        object.__setattr__(self, 'positions', positions)

    @property
    def m(self) -> int:
        return len(self.positions)

    def to_json(self):
        return {'type': 'f13', 'k': self.k, 'positions': list(self.positions), 'anchor': [list(pa) for pa in self.anchor]}


@dataclass(frozen=True)
class APWitness:
    start: int
    step: int

    def to_json(self):
        return {'type': 'ap', 'start': self.start, 'step': self.step}


@dataclass(frozen=True)
class GridWitness:
    corner: Tuple[int, ...]
    step: int

    def to_json(self):
        return {'type': 'grid', 'corner': list(self.corner), 'step': self.step}


@dataclass(frozen=True)
class OplusWitness:
    base: Tuple[int, ...]
    step: int

    def to_json(self):
        return {'type': 'oplus', 'base': list(self.base), 'step': self.step}


WITNESS_TYPES = {
    Kind.VDW: APWitness, Kind.GW: GridWitness, Kind.OPLUS: OplusWitness, Kind.F13: F13Witness,
}


def witness_type(kind: Kind):
    return WITNESS_TYPES.get(kind, SubspaceWitness)


def witness_from_json(obj):
    kind = obj.get('type')
    if kind == 'subspace':
        return SubspaceWitness(BlockSystem.from_json(obj))
    if kind == 'f13':
        return F13Witness(int(obj['k']), tuple(obj['positions']), tuple(tuple(pa) for pa in obj['anchor']))
    if kind == 'ap':
        return APWitness(int(obj['start']), int(obj['step']))
    if kind == 'grid':
        return GridWitness(tuple(obj['corner']), int(obj['step']))
    if kind == 'oplus':
        return OplusWitness(tuple(obj['base']), int(obj['step']))
    raise InvalidWitness('unknown witness type {}'.format(kind))


def parse_kind_spec(kind: str, h: int = 2, c: int = 2, m: int = 1, n: Optional[int] = None,
                    omega_strict: bool = False) -> KindSpec:
    try:
        kind = Kind(kind.lower())
    except ValueError:
        raise InvalidKind('unknown kind {}; choose from {}'.format(kind, ', '.join(k.value for k in Kind)))
    return KindSpec(kind, h, c, m, n, omega_strict)

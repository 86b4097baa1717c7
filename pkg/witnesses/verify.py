"""
Independent witness verification.

Everything here evaluates the defining condition point by point through
Coloring.__call__; nothing is shared with the rank-based finders.
"""
from itertools import product
from typing import Optional

from combinatorics.blocks import BlockSystem, block_profile, check_anchor_letters, subspace_points
from combinatorics.coloring import Coloring
from combinatorics.errors import InvalidWitness, OutOfOmega
from combinatorics.omega import omega_bump
from combinatorics.words import letter_counts
from witnesses.candidates import compile_candidates
from witnesses.kinds import (APWitness, F13Witness, GridWitness, Kind, KindSpec, OplusWitness,
                             SubspaceWitness, witness_type)


def _consistent(pairs) -> bool:
    """True when equal keys always carry equal colours."""
    seen = {}
    for key, color in pairs:
        if seen.setdefault(key, color) != color:
            return False
    return True


def check_block_shape(S: BlockSystem, m: int, block_constraint: str, n: Optional[int] = None):
    if S.m != m:
        raise InvalidWitness('expected {} blocks, got {}'.format(m, S.m))
    sizes = {len(b) for b in S.blocks}
    if block_constraint == 'equal' and len(sizes) > 1:
        raise InvalidWitness('blocks of unequal sizes {}'.format(sorted(sizes)))
    if block_constraint == 'singleton':
        n = 1
    if block_constraint in ('size', 'singleton') and sizes and sizes != {n}:
        raise InvalidWitness('blocks must all have size {}'.format(n))


def check_subspace(d: Coloring, S: BlockSystem, h: int, color_constraint: str) -> bool:
    """Colour condition of a block system against d, by direct evaluation."""
    check_anchor_letters(S, h)
    points = subspace_points(S, h)
    if color_constraint == 'monochromatic':
        return len({d(nu) for nu in points}) == 1
    profiles = [(block_profile(nu, S, h), d(nu)) for nu in points]
    if color_constraint == 'balanced':
        balanced = tuple([S.m // h] * h)
        return len({color for profile, color in profiles if profile == balanced}) <= 1
    return _consistent(profiles)


def check_f13(d: Coloring, w: F13Witness, h: int) -> bool:
    base = [0] * w.k
    for p, a in w.anchor:
        if a < 0 or a >= h:
            raise InvalidWitness('anchor letter {} outside alphabet of size {}'.format(a, h))
        base[p] = a
    pairs = []
    for letters in product(range(h), repeat=w.m):
        word = list(base)
        for p, a in zip(w.positions, letters):
            word[p] = a
        pairs.append((letter_counts(word, w.positions, h), d(tuple(word))))
    return _consistent(pairs)


def verify_witness(spec: KindSpec, size: int, d: Coloring, w) -> bool:
    """True iff w satisfies the defining condition of spec against d at size."""
    if d.ground != spec.ground(size):
        raise InvalidWitness('colouring lives on {}, expected {}'.format(d.ground.header(), spec.ground(size).header()))
    if not isinstance(w, witness_type(spec.kind)):
        raise InvalidWitness('{} is not a witness of kind {}'.format(type(w).__name__, spec.kind.value))

    if isinstance(w, SubspaceWitness):
        if w.system.k != size:
            raise InvalidWitness('block system on [{}] checked at size {}'.format(w.system.k, size))
        check_block_shape(w.system, spec.m, spec.block_constraint, spec.n)
        return check_subspace(d, w.system, spec.h, spec.color_constraint)

    if isinstance(w, F13Witness):
        if w.k != size or w.m != spec.m:
            raise InvalidWitness('f13 witness with |N| = {} on [{}]'.format(w.m, w.k))
        return check_f13(d, w, spec.h)

    if isinstance(w, APWitness):
        if w.start < 0 or w.step <= 0 or w.start + (spec.m - 1) * w.step >= size:
            raise InvalidWitness('progression ({}, {}) does not fit in [{}]'.format(w.start, w.step, size))
        return len({d(w.start + i * w.step) for i in range(spec.m)}) == 1

    if isinstance(w, GridWitness):
        if len(w.corner) != spec.h or w.step <= 0 or any(x < 0 or x + w.step * spec.m >= size for x in w.corner):
            raise InvalidWitness('grid copy {} with step {} does not fit in [{}]^{}'.format(w.corner, w.step, size, spec.h))
        points = [tuple(x + w.step * i for x, i in zip(w.corner, idx)) for idx in product(range(spec.m + 1), repeat=spec.h)]
        return len({d(p) for p in points}) == 1

    if isinstance(w, OplusWitness):
        if len(w.base) != spec.h or any(x < 0 for x in w.base) or sum(w.base) + w.step != size:
            raise InvalidWitness('(+) witness {} with step {} does not sum to {}'.format(w.base, w.step, size))
        try:
            bumps = [omega_bump(w.base, w.step, alpha, size, spec.omega_strict) for alpha in range(spec.h)]
        except OutOfOmega as e:
            raise InvalidWitness(str(e))
        return len({d(b) for b in bumps}) == 1

    raise InvalidWitness('unsupported witness {}'.format(w))


def refute(spec: KindSpec, size: int, d: Coloring):
    """Check every candidate witness of spec against d; returns the first valid one, None if d is bad."""
    for candidate in compile_candidates(spec, size):
        if verify_witness(spec, size, d, candidate.witness):
            return candidate.witness
    return None


def is_bad(spec: KindSpec, size: int, d: Coloring) -> bool:
    return refute(spec, size, d) is None

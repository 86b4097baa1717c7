"""
Compile a (kind, size) instance into its list of candidate witnesses.

A candidate is a witness together with its constraint groups: tuples of point
ranks that must each be constant for the witness to hold. Groups of a single
point are dropped, so a candidate with no groups holds under every colouring.
"""
from collections import OrderedDict
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Tuple

import numpy as np

from combinatorics.blocks import BlockSystem, enumerate_block_systems, subspace_ranks
from combinatorics.omega import compositions, in_omega, omega_index
from witnesses.kinds import (APWitness, F13Witness, GridWitness, Kind, KindSpec, OplusWitness,
                             SubspaceWitness)

Group = Tuple[int, ...]


class Candidate(NamedTuple):
    witness: object
    groups: Tuple[Group, ...]


@lru_cache(maxsize=64)
def assignment_classes(m: int, h: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """(profile, assignment indices) for the h^m block-letter assignments, profiles in first-seen order."""
    classes = OrderedDict()
    for i, letters in enumerate(product(range(h), repeat=m)):
        profile = tuple(int(np.sum(np.array(letters) == a)) for a in range(h))
        classes.setdefault(profile, []).append(i)
    return tuple((profile, tuple(idx)) for profile, idx in classes.items())


def subspace_groups(S: BlockSystem, h: int, color_constraint: str) -> Tuple[Group, ...]:
    ranks = subspace_ranks(S, h)
    if color_constraint == 'monochromatic':
        groups = [tuple(int(r) for r in ranks)]
    elif color_constraint == 'balanced':
        balanced = tuple([S.m // h] * h)
        groups = [tuple(int(ranks[i]) for i in idx) for profile, idx in assignment_classes(S.m, h) if profile == balanced]
    elif color_constraint == 'profile':
        groups = [tuple(int(ranks[i]) for i in idx) for _, idx in assignment_classes(S.m, h)]
    else:
        raise ValueError('unknown colour constraint ' + color_constraint)
    return tuple(g for g in groups if len(g) > 1)


def _cube_candidates(spec: KindSpec, k: int):
    n = 1 if spec.kind == Kind.F13 else spec.n
    for S in enumerate_block_systems(k, spec.m, spec.h, spec.block_constraint, n):
        groups = subspace_groups(S, spec.h, spec.color_constraint)
        if spec.kind == Kind.F13:
            witness = F13Witness(k, tuple(b[0] for b in S.blocks), S.anchor)
        else:
            witness = SubspaceWitness(S)
        yield Candidate(witness, groups)


def _ap_candidates(spec: KindSpec, n: int):
    m = spec.m
    for a in range(n):
        steps = range(1, 2) if m == 1 else range(1, (n - 1 - a) // (m - 1) + 1)
        for step in steps:
            group = tuple(a + i * step for i in range(m))
            yield Candidate(APWitness(a, step), (group,) if m > 1 else ())


def _grid_candidates(spec: KindSpec, n: int):
    h, m = spec.h, spec.m
    offsets = np.array(list(product(range(m + 1), repeat=h)), dtype=np.int64).reshape(-1, h)
    weights = np.array([n ** (h - 1 - e) for e in range(h)], dtype=np.int64)
    for corner in product(range(n), repeat=h):
        max_step = min((n - 1 - x) // m for x in corner)
        for step in range(1, max_step + 1):
            ranks = (np.array(corner, dtype=np.int64) + step * offsets) @ weights
            yield Candidate(GridWitness(tuple(corner), step), (tuple(int(r) for r in ranks),))


def _oplus_candidates(spec: KindSpec, m_star: int):
    h, strict = spec.h, spec.omega_strict
    index = omega_index(m_star, h, strict)
    found = []
    for step in range(1, m_star + 1):
        for base in compositions(m_star - step, h):
            bumps = [tuple(x + step if beta == alpha else x for beta, x in enumerate(base)) for alpha in range(h)]
            if all(in_omega(b, m_star, strict) for b in bumps):
                group = tuple(index[b] for b in bumps)
                found.append(Candidate(OplusWitness(base, step), (group,) if len(group) > 1 else ()))
    found.sort(key=lambda cand: (cand.witness.base, cand.witness.step))
    return found


@lru_cache(maxsize=128)
def _compile(spec: KindSpec, size: int) -> Tuple[Candidate, ...]:
    if spec.kind == Kind.VDW:
        return tuple(_ap_candidates(spec, size))
    if spec.kind == Kind.GW:
        return tuple(_grid_candidates(spec, size))
    if spec.kind == Kind.OPLUS:
        return tuple(_oplus_candidates(spec, size))
    return tuple(_cube_candidates(spec, size))


def compile_candidates(spec: KindSpec, size: int) -> Tuple[Candidate, ...]:
    """All candidate witnesses of spec at size, in canonical order."""
    return _compile(spec.with_colors(1), size)

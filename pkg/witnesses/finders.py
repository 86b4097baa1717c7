"""Witness finders. Each returns the first witness in canonical order, or None."""
from typing import Optional

import numpy as np

from combinatorics.blocks import enumerate_block_systems
from combinatorics.coloring import Coloring
from combinatorics.errors import InvalidKind
from witnesses.candidates import compile_candidates, subspace_groups
from witnesses.kinds import F13Witness, Kind, KindSpec, SubspaceWitness

BLOCK_ALIASES = {'any': 'any', 'equal': 'equal', 'equal-size': 'equal', 'size': 'size', 'singleton': 'singleton'}
COLOR_ALIASES = {'monochromatic': 'monochromatic', 'mono': 'monochromatic', 'balanced': 'balanced',
                 'balanced-constant': 'balanced', 'profile': 'profile', 'profile-invariant': 'profile'}


def groups_constant(table: np.ndarray, groups) -> bool:
    for group in groups:
        values = table[np.asarray(group, dtype=np.int64)]
        if (values != values[0]).any():
            return False
    return True


def _check_ground(d: Coloring, kind: str):
    assert d.ground.kind == kind, 'expected a colouring of a {} ground set, got {}'.format(kind, d.ground.kind)


def find_subspace_witness(d: Coloring, m: int, block_constraint: str = 'any',
                          color_constraint: str = 'monochromatic', n: Optional[int] = None) -> Optional[SubspaceWitness]:
    _check_ground(d, 'cube')
    block_constraint = BLOCK_ALIASES[block_constraint]
    color_constraint = COLOR_ALIASES[color_constraint]
    k, h = d.ground.k, d.ground.h
    if color_constraint == 'balanced' and m % h:
        raise InvalidKind('balanced constancy needs |alphabet| = {} to divide m = {}'.format(h, m))
    for S in enumerate_block_systems(k, m, h, block_constraint, n):
        if groups_constant(d.table, subspace_groups(S, h, color_constraint)):
            return SubspaceWitness(S)
    return None


def find_f13_witness(d: Coloring, m: int) -> Optional[F13Witness]:
    _check_ground(d, 'cube')
    k, h = d.ground.k, d.ground.h
    for S in enumerate_block_systems(k, m, h, 'singleton'):
        if groups_constant(d.table, subspace_groups(S, h, 'profile')):
            return F13Witness(k, tuple(b[0] for b in S.blocks), S.anchor)
    return None


def _first_candidate(spec: KindSpec, size: int, d: Coloring):
    for candidate in compile_candidates(spec, size):
        if groups_constant(d.table, candidate.groups):
            return candidate.witness
    return None


def find_ap_witness(d: Coloring, m: int):
    _check_ground(d, 'interval')
    return _first_candidate(KindSpec(Kind.VDW, 1, d.colors, m), d.ground.n, d)


def find_gallai_witt_witness(d: Coloring, m: int):
    _check_ground(d, 'grid')
    return _first_candidate(KindSpec(Kind.GW, d.ground.h, d.colors, m), d.ground.n, d)


def find_oplus_witness(d: Coloring):
    """First (base, step) in lexicographic order. The inclusive Ω admits corner bumps, so a constant
    colouring of Ω(4,2) yields base (0,0), step 4; with the strict reading it is base (1,1), step 2."""
    _check_ground(d, 'omega')
    g = d.ground
    return _first_candidate(KindSpec(Kind.OPLUS, g.h, d.colors, 1, omega_strict=g.strict), g.m_star, d)


def find_witness(spec: KindSpec, d: Coloring):
    """Dispatch to the finder of spec.kind."""
    if spec.kind == Kind.VDW:
        return find_ap_witness(d, spec.m)
    if spec.kind == Kind.GW:
        return find_gallai_witt_witness(d, spec.m)
    if spec.kind == Kind.OPLUS:
        return find_oplus_witness(d)
    if spec.kind == Kind.F13:
        return find_f13_witness(d, spec.m)
    return find_subspace_witness(d, spec.m, spec.block_constraint, spec.color_constraint, spec.n)

"""
Point permutations that map every candidate witness of a kind onto another one.

The search keeps only colourings that are lex-leaders of their orbit under
these permutations combined with colour renaming. Any subset of the group is
a sound choice; MAX_GROUP caps how many elements are tested.
"""
from itertools import permutations, product
from typing import List

import numpy as np

from combinatorics.coloring import Ground
from combinatorics.omega import omega_enumerate, omega_index
from combinatorics.words import cube_words, position_weights

MAX_GROUP = 2048


def _cube_perms(ground: Ground, coordinates: bool):
    k, h = ground.k, ground.h
    words = cube_words(k, h)
    weights = position_weights(k, h)
    coord_perms = list(permutations(range(k))) if coordinates else [tuple(range(k))]
    for sigma in permutations(range(h)):
        relabelled = np.asarray(sigma, dtype=np.int64)[words]
        for pi in coord_perms:
            yield relabelled[:, list(pi)] @ weights


def _interval_perms(ground: Ground):
    n = ground.n
    yield np.arange(n, dtype=np.int64)
    yield np.arange(n - 1, -1, -1, dtype=np.int64)


def _grid_perms(ground: Ground):
    h, n = ground.h, ground.n
    points = cube_words(h, n)
    weights = position_weights(h, n)
    for pi in permutations(range(h)):
        for flips in product((False, True), repeat=h):
            moved = points[:, list(pi)].copy()
            for e, flip in enumerate(flips):
                if flip:
                    moved[:, e] = n - 1 - moved[:, e]
            yield moved @ weights


def _omega_perms(ground: Ground):
    points = omega_enumerate(ground.m_star, ground.h, ground.strict)
    index = omega_index(ground.m_star, ground.h, ground.strict)
    for pi in permutations(range(ground.h)):
        yield np.array([index[tuple(p[e] for e in pi)] for p in points], dtype=np.int64)


def symmetry_group(ground: Ground, coordinates: bool = False) -> List[List[int]]:
    """Non-identity point permutations as rank lists, identity and duplicates removed."""
    if ground.kind == 'cube':
        source = _cube_perms(ground, coordinates)
    elif ground.kind == 'interval':
        source = _interval_perms(ground)
    elif ground.kind == 'grid':
        source = _grid_perms(ground)
    else:
        source = _omega_perms(ground)
    identity = tuple(range(ground.size))
    seen = {identity}
    perms = []
    for perm in source:
        perm = tuple(int(x) for x in perm)
        if perm in seen:
            continue
        seen.add(perm)
        perms.append(list(perm))
        if len(perms) >= MAX_GROUP:
            break
    return perms


def is_lex_leader(table: List[int], length: int, perms: List[List[int]]) -> bool:
    """
    False when some permuted, colour-normalised copy of the prefix table[:length]
    is already lexicographically smaller than the prefix itself.
    """
    for perm in perms:
        renamed = {}
        for i in range(length):
            j = perm[i]
            if j >= length:
                break
            x = table[j]
            y = renamed.get(x)
            if y is None:
                y = renamed[x] = len(renamed)
            if y < table[i]:
                return False
            if y > table[i]:
                break
    return True

"""Omega: weak compositions of m* over the alphabet, and the bump map of (+)."""
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from combinatorics.errors import OutOfOmega

OmegaPoint = Tuple[int, ...]


def compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=256)
def omega_enumerate(m_star: int, h: int, strict: bool = False) -> Tuple[OmegaPoint, ...]:
    """Weak compositions of m* into h parts in lexicographic order.

    strict drops the points having a part equal to m*, i.e. reads the
    codomain of the composition as {0..m*-1}.
    """
    assert m_star >= 0 and h >= 1, 'omega needs m* >= 0 and h >= 1'
    points = tuple(compositions(m_star, h))
    if strict:
        points = tuple(p for p in points if max(p) < m_star)
    return points


@lru_cache(maxsize=256)
def omega_index(m_star: int, h: int, strict: bool = False) -> Dict[OmegaPoint, int]:
    return {p: i for i, p in enumerate(omega_enumerate(m_star, h, strict))}


def in_omega(point: Sequence[int], m_star: int, strict: bool = False) -> bool:
    if any(x < 0 or x > m_star for x in point) or sum(point) != m_star:
        return False
    return not (strict and max(point) >= m_star)


def omega_bump(base: Sequence[int], step: int, alpha: int, m_star: int, strict: bool = False) -> OmegaPoint:
    if step <= 0:
        raise OutOfOmega('bump step must be positive, got {}'.format(step))
    if alpha < 0 or alpha >= len(base):
        raise OutOfOmega('letter {} outside alphabet of size {}'.format(alpha, len(base)))
    bumped = tuple(x + step if beta == alpha else x for beta, x in enumerate(base))
    if not in_omega(bumped, m_star, strict):
        raise OutOfOmega('{} is not in Omega({})'.format(bumped, m_star))
    return bumped

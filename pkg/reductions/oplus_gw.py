"""
Property (+) on Omega(m*) from a Gallai-Witt square on the grid [n]^h.

With m* = h^2 n, the affine map
    F(eta)(e) = h*eta(e) + h*n - sum(eta)
sends [n]^h into Omega(m*). A monochromatic homothetic copy (m_e, delta) of
{0,1}^h for e = d o F gives l = h*n - sum(m) - delta, base l*_e = h*m_e + l
and step h*delta, so that each bump of the base is F(m + delta*unit_alpha).
"""
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import (InvalidWitness, NoWitnessAtN, OutOfOmega, PipelineStageFailure,
                                   UnsupportedAlphabet)
from combinatorics.omega import OmegaPoint, omega_bump
from combinatorics.words import Word
from reductions.pullback import pullback_coloring
from reductions.trace import ReductionTrace
from witnesses.finders import find_gallai_witt_witness
from witnesses.kinds import Kind, KindSpec, OplusWitness
from witnesses.verify import verify_witness


@dataclass(frozen=True)
class OplusSolution:
    base: Tuple[int, ...]
    step: int

    @property
    def m_star(self) -> int:
        return sum(self.base) + self.step

    def bumps(self, strict: bool = False) -> Tuple[OmegaPoint, ...]:
        return tuple(omega_bump(self.base, self.step, alpha, self.m_star, strict) for alpha in range(len(self.base)))

    def witness(self) -> OplusWitness:
        return OplusWitness(self.base, self.step)

    def to_json(self):
        return {'base': list(self.base), 'step': self.step}


def canonical_word(point: Sequence[int], m_star: int, h: int) -> Word:
    """G: the word of length m* whose consecutive intervals P_0, P_1, ... carry letters 0, 1, ... with |P_a| = point[a]."""
    point = tuple(int(x) for x in point)
    if len(point) != h or any(x < 0 for x in point) or sum(point) != m_star:
        raise OutOfOmega('{} is not a composition of {} into {} parts'.format(point, m_star, h))
    word = []
    for a, count in enumerate(point):
        word.extend([a] * count)
    return tuple(word)


def affine_map(eta: Sequence[int], h: int, n: int) -> OmegaPoint:
    total = sum(eta)
    return tuple(h * x + h * n - total for x in eta)


def solve_oplus_via_gallai_witt(d: Coloring, h: int, n: int, gw_search: Optional[Callable] = None,
                                trace: Optional[ReductionTrace] = None) -> OplusSolution:
    if h < 2:
        raise UnsupportedAlphabet('the affine map needs an alphabet of size at least 2')
    m_star = h * h * n
    g = d.ground
    assert g.kind == 'omega' and g.m_star == m_star and g.h == h, \
        'colouring must live on Omega({}) over {} letters'.format(m_star, h)
    gw_search = gw_search or (lambda e: find_gallai_witt_witness(e, 1))

    e = pullback_coloring(Ground.grid(h, n), d, lambda eta: affine_map(eta, h, n))
    found = gw_search(e)
    if found is None:
        raise NoWitnessAtN('no monochromatic square on the grid [{}]^{}'.format(n, h))
    if not verify_witness(KindSpec(Kind.GW, h, d.colors, 1), n, e, found):
        raise PipelineStageFailure('gallai-witt', 'square {} is not monochromatic for the pull-back'.format(found))

    corner, delta = tuple(found.corner), found.step
    offset = h * n - sum(corner) - delta
    solution = OplusSolution(tuple(h * x + offset for x in corner), h * delta)
    spec = KindSpec(Kind.OPLUS, h, d.colors, omega_strict=g.strict)
    try:
        ok = verify_witness(spec, m_star, d, solution.witness())
    except InvalidWitness as err:
        raise PipelineStageFailure('oplus', str(err))
    if not ok:
        raise PipelineStageFailure('oplus', 'bumps of {} are not monochromatic'.format(solution.to_json()))
    if trace is not None:
        trace.record('oplus-via-gallai-witt', h=h, n=n, corner=corner, delta=delta, offset=offset,
                     base=solution.base, step=solution.step, bumps=solution.bumps(g.strict),
                     step_as_written=delta, sum_as_written=sum(solution.base) + delta,
                     step_arithmetic=h * delta, sum_arithmetic=solution.m_star)
    return solution

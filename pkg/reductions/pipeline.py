"""
Monochromatic line from an f8* block system, end to end:

  embed      e = d o F on the m*-cube through the block system
  canonical  c = e o G on Omega(m*)
  oplus      a (+) solution for c, through Gallai-Witt or by direct search
  line       the e-line laid out on consecutive intervals P'_0, ..., P'_{h-1}, P'
  lift       the d-line with moving set the union of the blocks over P'
"""
from dataclasses import dataclass
from typing import Callable, Optional

from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import (InvalidInputWitness, InvalidWitness, NoWitnessAtN, PipelineStageFailure,
                                  UnsupportedAlphabet, WorkbenchError)
from reductions.blocks_embed import BlocksEmbedding
from reductions.oplus_gw import OplusSolution, canonical_word, solve_oplus_via_gallai_witt
from reductions.pullback import pullback_coloring
from reductions.trace import ReductionTrace
from witnesses.finders import find_oplus_witness
from witnesses.kinds import Kind, KindSpec, SubspaceWitness
from witnesses.verify import verify_witness

OPLUS_ROUTES = ('gallai-witt', 'direct')


@dataclass(frozen=True)
class PipelineOptions:
    route: str = 'gallai-witt'
    gw_search: Optional[Callable] = None

    def __post_init__(self):
        assert self.route in OPLUS_ROUTES, 'unknown (+) route ' + self.route


def interval_line(solution: OplusSolution, m_star: int) -> BlockSystem:
    """Anchor letter a on the interval P'_a of size base[a], then the moving interval P' of size step."""
    anchor = {}
    pos = 0
    for a, count in enumerate(solution.base):
        for p in range(pos, pos + count):
            anchor[p] = a
        pos += count
    moving = list(range(pos, pos + solution.step))
    assert pos + solution.step == m_star, 'solution does not fill the cube of side {}'.format(m_star)
    return BlockSystem.make(m_star, [moving], anchor)


def find_monochromatic_line_main(d: Coloring, S: BlockSystem, options: Optional[PipelineOptions] = None,
                                 trace: Optional[ReductionTrace] = None) -> BlockSystem:
    options = options or PipelineOptions()
    h = d.ground.h
    trace = trace if trace is not None else ReductionTrace('monochromatic-line')
    if h < 2:
        raise UnsupportedAlphabet('the pipeline needs an alphabet of size at least 2')
    embedding = BlocksEmbedding(S, d, h)
    m_star = embedding.m_star
    if options.route == 'gallai-witt' and m_star % (h * h):
        raise InvalidInputWitness('{} blocks is not a multiple of h^2 = {}'.format(m_star, h * h))

    try:
        e = embedding.pullback()
    except WorkbenchError as err:
        raise PipelineStageFailure('embed', str(err))
    trace.record('embed', k=S.k, m_star=m_star, system=S)

    omega = Ground.omega(m_star, h)
    induced = pullback_coloring(omega, e, lambda point: canonical_word(point, m_star, h))
    trace.record('canonical', m_star=m_star, table=induced.to_digits())

    try:
        if options.route == 'gallai-witt':
            solution = solve_oplus_via_gallai_witt(induced, h, m_star // (h * h), options.gw_search, trace)
        else:
            w = find_oplus_witness(induced)
            if w is None:
                raise NoWitnessAtN('no (+) witness on Omega({})'.format(m_star))
            solution = OplusSolution(tuple(w.base), w.step)
            trace.record('oplus-direct', base=solution.base, step=solution.step)
    except (NoWitnessAtN, InvalidWitness) as err:
        raise PipelineStageFailure('oplus', str(err))

    line = interval_line(solution, m_star)
    if not verify_witness(KindSpec(Kind.HJ, h, d.colors, 1), m_star, e, SubspaceWitness(line)):
        raise PipelineStageFailure('line', 'interval line {} is not monochromatic for e'.format(line.to_json()))
    trace.record('line', line=line)

    try:
        lifted = embedding.lift_line(line, trace)
    except WorkbenchError as err:
        raise PipelineStageFailure('lift', str(err))
    if not verify_witness(KindSpec(Kind.HJ, h, d.colors, 1), S.k, d, SubspaceWitness(lifted)):
        raise PipelineStageFailure('lift', 'final line is not monochromatic')
    return lifted

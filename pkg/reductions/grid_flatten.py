"""
Composite letters to equal-size blocks.

A word of length n over the alphabet h^m (letters read as big-endian m-tuples
over h) flattens to a word of length n*m over h, position (i, l) -> i*m + l.
A monochromatic line of the pulled-back colouring becomes m equal-size blocks
N x {l} of the flat cube.
"""
from typing import Optional, Sequence

from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import InvalidInputWitness, InvalidWitness
from combinatorics.words import Word, check_word, unrank_word
from reductions.pullback import pullback_coloring
from reductions.trace import ReductionTrace
from witnesses.kinds import Kind, KindSpec, SubspaceWitness
from witnesses.verify import verify_witness


def grid_flatten_map(eta: Sequence[int], n: int, m: int, h: int) -> Word:
    eta = check_word(eta, h ** m)
    assert len(eta) == n, 'expected a word of length {}'.format(n)
    out = []
    for letter in eta:
        out.extend(unrank_word(letter, m, h))
    return tuple(out)


def flatten_pullback(d: Coloring, n: int, m: int, h: int) -> Coloring:
    """e = d o F on Cube(n, h^m)."""
    assert d.ground == Ground.cube(n * m, h), 'colouring must live on the cube of side n*m'
    return pullback_coloring(Ground.cube(n, h ** m), d, lambda eta: grid_flatten_map(eta, n, m, h))


def grid_lift_witness(line: BlockSystem, d: Coloring, n: int, m: int, h: int,
                      trace: Optional[ReductionTrace] = None) -> BlockSystem:
    """Equal-size m-block system for d from an e-monochromatic line (N, rho)."""
    e = flatten_pullback(d, n, m, h)
    try:
        ok = verify_witness(KindSpec(Kind.HJ, h ** m, d.colors, 1), n, e, SubspaceWitness(line))
    except InvalidWitness as err:
        raise InvalidInputWitness(str(err))
    if not ok:
        raise InvalidInputWitness('line {} is not monochromatic for the pulled-back colouring'.format(line.to_json()))

    (N,) = line.blocks
    blocks = [tuple(i * m + l for i in N) for l in range(m)]
    anchor = {}
    for i, letter in line.anchor:
        for l, a in enumerate(unrank_word(letter, m, h)):
            anchor[i * m + l] = a
    S = BlockSystem.make(n * m, blocks, anchor)

    if not verify_witness(KindSpec(Kind.HJEQ, h, d.colors, m), n * m, d, SubspaceWitness(S)):
        raise InvalidWitness('lifted block system {} is not monochromatic'.format(S.to_json()))
    if trace is not None:
        trace.record('grid-lift', n=n, m=m, h=h, line=line, system=S)
    return S

"""
Embedding the m*-cube into the m**-cube through an f8* block system.

F(eta) is constant eta(l) on block M_l and rho off the blocks. When the system
is profile-invariant for d, the pull-back e = d o F only depends on the letter
counts of eta, and an e-monochromatic line (N, tau) lifts to the d-line with
moving set the union of M_l over l in N.
"""
from typing import Optional, Sequence

from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import InvalidInputWitness, InvalidWitness
from combinatorics.words import Word, check_word
from reductions.pullback import pullback_coloring
from reductions.trace import ReductionTrace
from witnesses.kinds import Kind, KindSpec, SubspaceWitness
from witnesses.verify import check_subspace, verify_witness


class BlocksEmbedding(object):
    """F for a verified profile-invariant system S of d."""

    def __init__(self, S: BlockSystem, d: Coloring, h: int):
        if d.ground != Ground.cube(S.k, h):
            raise InvalidInputWitness('colouring does not live on the cube of side {}'.format(S.k))
        try:
            ok = S.m >= 1 and check_subspace(d, S, h, 'profile')
        except InvalidWitness as err:
            raise InvalidInputWitness(str(err))
        if not ok:
            raise InvalidInputWitness('{} is not an f8* witness for d'.format(S.to_json()))
        self.S = S
        self.d = d
        self.h = h
        self._pullback = None

    @property
    def m_star(self) -> int:
        return self.S.m

    def __call__(self, eta: Sequence[int]) -> Word:
        eta = check_word(eta, self.h)
        assert len(eta) == self.S.m, 'expected a word of length {}'.format(self.S.m)
        return self.S.point(eta)

    def pullback(self) -> Coloring:
        if self._pullback is None:
            self._pullback = pullback_coloring(Ground.cube(self.m_star, self.h), self.d, self)
        return self._pullback

    def lift_line(self, line: BlockSystem, trace: Optional[ReductionTrace] = None) -> BlockSystem:
        e = self.pullback()
        try:
            ok = verify_witness(KindSpec(Kind.HJ, self.h, self.d.colors, 1), self.m_star, e, SubspaceWitness(line))
        except InvalidWitness as err:
            raise InvalidInputWitness(str(err))
        if not ok:
            raise InvalidInputWitness('line {} is not monochromatic for the pulled-back colouring'.format(line.to_json()))

        (N,) = line.blocks
        moving = sorted(p for l in N for p in self.S.blocks[l])
        anchor = dict(self.S.anchor)
        for l, a in line.anchor:
            for p in self.S.blocks[l]:
                anchor[p] = a
        lifted = BlockSystem.make(self.S.k, [moving], anchor)

        if not verify_witness(KindSpec(Kind.HJ, self.h, self.d.colors, 1), self.S.k, self.d, SubspaceWitness(lifted)):
            raise InvalidWitness('lifted line {} is not monochromatic'.format(lifted.to_json()))
        if trace is not None:
            trace.record('embed-lift', line=line, lifted=lifted)
        return lifted


def blocks_embed(S: BlockSystem, eta: Sequence[int], d: Coloring, h: int) -> Word:
    return BlocksEmbedding(S, d, h)(eta)


def embed_lift_line(line: BlockSystem, S: BlockSystem, d: Coloring, h: int,
                    trace: Optional[ReductionTrace] = None) -> BlockSystem:
    return BlocksEmbedding(S, d, h).lift_line(line, trace)

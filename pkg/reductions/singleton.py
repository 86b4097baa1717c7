from typing import Optional

from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import InvalidInputWitness, InvalidWitness
from reductions.trace import ReductionTrace
from witnesses.kinds import F13Witness
from witnesses.verify import check_f13, check_subspace


def singleton_blocks(w: F13Witness, d: Coloring, h: int, trace: Optional[ReductionTrace] = None) -> BlockSystem:
    """An f13 witness (N, rho) as the profile-invariant system of singleton blocks {a_l}."""
    if d.ground != Ground.cube(w.k, h):
        raise InvalidInputWitness('colouring does not live on the cube of side {}'.format(w.k))
    try:
        ok = w.m >= 1 and check_f13(d, w, h)
    except InvalidWitness as err:
        raise InvalidInputWitness(str(err))
    if not ok:
        raise InvalidInputWitness('({}, {}) is not an f13 witness'.format(w.positions, w.anchor))

    S = BlockSystem(w.k, tuple((a,) for a in w.positions), w.anchor)
    if not check_subspace(d, S, h, 'profile'):
        raise InvalidWitness('singleton system {} is not profile-invariant'.format(S.to_json()))
    if trace is not None:
        trace.record('singleton-blocks', witness=w, system=S)
    return S

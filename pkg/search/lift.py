"""
Restriction of a colouring at size s+1 to size s, with the map that carries
witnesses of the restriction back up. This is the upward closure that lets
compute_number stop at the first size where every colouring has a witness.

  cube     d(eta) = d'(eta + (alpha0,)), the new last position fixed to alpha0
  interval d = d' on the prefix [s]
  grid     d = d' on the sub-grid [s]^h
  omega    d(l) = d'(l + e_0)
"""
from typing import Callable, Tuple

from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import InvalidWitness
from combinatorics.blocks import BlockSystem
from witnesses.kinds import APWitness, F13Witness, GridWitness, KindSpec, OplusWitness, SubspaceWitness
from witnesses.verify import verify_witness


def _restrict_cube(d_up: Coloring, alpha0: int) -> Coloring:
    g = d_up.ground
    size = g.k - 1
    table = [d_up.table[r * g.h + alpha0] for r in range(g.h ** size)]
    return Coloring(Ground.cube(size, g.h), table, d_up.colors)


def _lift_cube(w, k_up: int, alpha0: int):
    extra = ((k_up - 1, alpha0),)
    if isinstance(w, SubspaceWitness):
        return SubspaceWitness(BlockSystem(k_up, w.system.blocks, w.system.anchor + extra))
    return F13Witness(k_up, w.positions, w.anchor + extra)


def lift_witness_up(spec: KindSpec, d_up: Coloring, alpha0: int = 0) -> Tuple[Coloring, Callable]:
    """(restricted colouring, lift) where lift sends a witness for the restriction to a verified witness for d_up."""
    g = d_up.ground
    if spec.is_cube:
        assert g.k >= 1, 'cannot restrict the cube of side 0'
        assert 0 <= alpha0 < g.h, 'anchor letter outside the alphabet'
        d = _restrict_cube(d_up, alpha0)
        size_up = g.k

        def lift(w):
            return _check(spec, size_up, d_up, _lift_cube(w, size_up, alpha0))
    elif g.kind == 'interval':
        d = Coloring(Ground.interval(g.n - 1), d_up.table[:g.n - 1], d_up.colors)
        size_up = g.n

        def lift(w):
            return _check(spec, size_up, d_up, APWitness(w.start, w.step))
    elif g.kind == 'grid':
        side = g.n - 1
        small = Ground.grid(g.h, side)
        d = Coloring.from_function(small, lambda p: d_up(p), d_up.colors)
        size_up = g.n

        def lift(w):
            return _check(spec, size_up, d_up, GridWitness(tuple(w.corner), w.step))
    else:
        small = Ground.omega(g.m_star - 1, g.h, g.strict)
        d = Coloring.from_function(small, lambda p: d_up((p[0] + 1,) + tuple(p[1:])), d_up.colors)
        size_up = g.m_star

        def lift(w):
            base = (w.base[0] + 1,) + tuple(w.base[1:])
            return _check(spec, size_up, d_up, OplusWitness(base, w.step))
    return d, lift


def _check(spec: KindSpec, size: int, d: Coloring, w):
    if not verify_witness(spec, size, d, w):
        raise InvalidWitness('lifted witness {} does not verify'.format(w))
    return w

"""The compact oriented genus-g surface with one boundary circle.

The surface is presented by a cut system: 2g disjoint properly embedded
arcs that cut it into a single disk.  Everything downstream only ever sees
the combinatorics of that disk, namely the cyclic order in which the two
sides of each arc appear along its boundary.

Arcs are numbered 1..2g and a signed integer +k / -k denotes a crossing
of arc k in the positive / negative direction.  The cyclic sequence
``boundary_order`` lists the 4g arc sides counterclockwise around the
cut-open disk; side +k is the one a positive crossing exits through.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import GenusTooSmall


def _trace_boundary_cycles(order):
    """Cycles of boundary segments of the reglued surface.

    Segment p of the disk boundary sits between arc side p and arc side
    p + 1.  Regluing side s onto its partner (the other side of the same
    arc, with reversed orientation) sends the segment in front of side
    p + 1 to the segment behind its partner, so the successor map is
    p -> partner(p + 1).
    """
    n = len(order)
    partner = {}
    where = {sym: i for i, sym in enumerate(order)}
    for i, sym in enumerate(order):
        partner[i] = where[-sym]
    seen = set()
    cycles = []
    for start in range(n):
        if start in seen:
            continue
        cycle = []
        p = start
        while p not in seen:
            seen.add(p)
            cycle.append(p)
            p = partner[(p + 1) % n]
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class SurfaceSpec:
    """A genus-g one-boundary surface cut into a disk along 2g arcs.

    ``boundary_order`` must list each of the 4g signed arc symbols exactly
    once, and regluing must produce a connected boundary (equivalently the
    reglued surface has Euler characteristic 1 - 2g and genus g).
    """

    genus: int
    cut_arcs: tuple
    boundary_order: tuple
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        g = self.genus
        if g < 2:
            raise GenusTooSmall(f"genus {g} < 2")
        if len(self.cut_arcs) != 2 * g:
            raise ValueError(f"need {2 * g} cut arcs, got {len(self.cut_arcs)}")
        order = tuple(self.boundary_order)
        expected = {s for k in range(1, 2 * g + 1) for s in (k, -k)}
        if set(order) != expected or len(order) != 4 * g:
            raise ValueError("boundary_order must contain each signed arc symbol once")
        cycles = _trace_boundary_cycles(order)
        if len(cycles) != 1:
            raise ValueError(
                f"cut system regluing has {len(cycles)} boundary circles, need 1"
            )
        object.__setattr__(self, "boundary_order", order)
        object.__setattr__(self, "_pos", {s: i for i, s in enumerate(order)})

    @property
    def arc_count(self):
        return 2 * self.genus

    def position(self, letter):
        """Index of a signed arc symbol in the cyclic boundary order."""
        return self._pos[letter]

    def arc_name(self, index):
        return self.cut_arcs[index - 1]

    def boundary_word(self):
        """Crossing word of a curve just inside the boundary.

        Pushing the boundary into the interior crosses every arc twice,
        once near each endpoint; following the single boundary cycle and
        recording the arc side crossed after each segment spells it out.
        """
        order = self.boundary_order
        n = len(order)
        where = {sym: i for i, sym in enumerate(order)}
        word = []
        p = 0
        for _ in range(n):
            nxt = order[(p + 1) % n]
            word.append(nxt)
            p = where[-nxt]
        return tuple(word)


def chain_boundary_order(g):
    """Boundary order of the cut system adapted to the standard chain.

    The 2g chain curves each cross exactly one arc once, so arc k is dual
    to chain curve k.  Consecutive chords must link and all others must
    not, which the staircase pattern 1, 2, -1, 3, -2, 4, -3, ... realizes.
    """
    n = 2 * g
    order = [1, 2, -1]
    for k in range(3, n + 1):
        order.extend((k, -(k - 1)))
    order.append(-n)
    return tuple(order)


@lru_cache(maxsize=None)
def standard_surface(g):
    """The surface of genus g with the chain-adapted cut system."""
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2")
    arcs = tuple(f"e{k}" for k in range(1, 2 * g + 1))
    return SurfaceSpec(genus=g, cut_arcs=arcs, boundary_order=chain_boundary_order(g))

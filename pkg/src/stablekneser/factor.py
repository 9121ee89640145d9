"""Shift-orbit cycles: the cycle factor that the Hamilton walk glues together.

Right-shifting any vertex by one position yields a disjoint (hence adjacent)
vertex, so each shift orbit is a cycle in the graph and the orbits partition
the vertex set into a cycle factor.  The canonical representative of an
orbit is the unique anchored vertex whose profile equals the orbit's
canonical (rotation-minimal) profile; a profile determines its bitstring, so
this representative is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitvertex import Params, Vertex
from .profiles import GapBlockSeq, canonical_profile


def vertex_from_profile(params: Params, seq: GapBlockSeq) -> Vertex:
    """Rebuild the anchored vertex whose profile is ``seq``."""
    s = params.s
    mask = 0
    pos = 0  # 0-based write cursor
    for i in range(len(seq) - 1, 0, -2):
        gap, block = seq[i], -seq[i - 1]
        pos += gap
        for _ in range(block // s):
            mask |= 1 << pos
            pos += s
    if pos != params.n:
        raise ValueError(f"profile {seq} does not fill {params.n} positions")
    return Vertex(params, mask)


@dataclass(frozen=True)
class OrbitCycle:
    """One cycle of the factor: canonical representative plus orbit size."""

    representative: Vertex
    length: int

    def vertices(self) -> list[Vertex]:
        """The cycle in shift order: rep, shift(rep, 1), ..., pairwise distinct."""
        return [self.representative.shift(t) for t in range(self.length)]


def orbit_cycle(x: Vertex) -> OrbitCycle:
    """The factor cycle through x."""
    bs = x.bits()
    period = (bs + bs).find(bs, 1)  # least t > 0 with shift(x, t) == x
    rep = vertex_from_profile(x.params, canonical_profile(x))
    return OrbitCycle(representative=rep, length=period)


def enumerate_factor(params: Params, *, guard: int = 200_000) -> list[OrbitCycle]:
    """All factor cycles of a desk-scale instance, sorted by representative.

    Verification support: cost is proportional to the vertex count, so the
    instance-size guard from the oracle applies.
    """
    from .oracle import enumerate_vertices  # deferred: oracle imports factor

    cycles: dict[Vertex, OrbitCycle] = {}
    total = 0
    for v in enumerate_vertices(params, guard=guard):
        cyc = orbit_cycle(v)
        total += 1
        prev = cycles.setdefault(cyc.representative, cyc)
        if prev.length != cyc.length:
            raise AssertionError("orbit length disagrees across members")
    if total != sum(c.length for c in cycles.values()):
        raise AssertionError("orbit lengths do not partition the vertex set")
    return sorted(cycles.values(), key=lambda c: c.representative.bits())

"""Connectors: 4-cycles that glue pairs of factor cycles, pinned at position p.

A vertex x is *connectable* at p when the window starting at p reads

    x[p .. p+s] = 1 0^(s-1) 0        (glider at p, then an unmatched zero).

The trailing zero at p + s is automatically unmatched: the positions
p+1 .. p+s-1 hold no 1, so the only 1 within distance s - 1 before p + s
would be at p + s itself, which is excluded by the window.  Pushing the
glider one step right and shifting the whole string right by one yields the
*tail* y of the connector (x, y); x and the unshifted rewrite agree
everywhere outside the window.  Head and tail are disjoint, so

    (x, shift(x, 1), shift(y, 1), y)

is a 4-cycle in the graph, and splicing it into two factor cycles merges
them into one.

For a head x with at least two blocks, its connector profile reads the run
lengths right to left starting behind the block that follows the pushed
glider's gap; its leading entries are (-b', g', -b, g) where b is the block
ending at p + s - 1, g the gap before it, g' the gap at p + s and b' the
block after that gap.  The heads whose connector profile equals the orbit's
canonical profile -- one per non-root orbit -- are the *tree heads*; their
connectors form a spanning tree over the factor cycles, which is what makes
the walk in :mod:`stablekneser.hamilton` a Hamilton cycle.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .bitvertex import ParameterError, Params, Vertex, mask_runs, rotate_mask
from .profiles import GapBlockSeq, min_rotation, profile_from_runs


def _check_position(params: Params, p: int) -> None:
    if not 1 <= p <= params.n:
        raise ParameterError(f"position p = {p} outside 1..{params.n}")


# -- raw-mask pattern tests (0-based bits; callers pass validated vertices) --


def head_pattern(mask: int, params: Params, p: int) -> bool:
    """Glider at p followed by a zero: 1 at bit p-1, 0 at bit (p-1+s) % n.

    The intermediate zeros are implied by stability, and the zero behind the
    glider is unmatched by the window argument in the module docstring.
    """
    n, s = params.n, params.s
    return bool(mask >> (p - 1) & 1) and not (mask >> ((p - 1 + s) % n) & 1)


def tail_pattern(mask: int, params: Params, p: int) -> bool:
    """mask is the tail of some connector at p.

    Written on y itself (w = shift(y, -1) carries the pushed glider): y needs
    a 1 at position p + 2, zeros at p + 3 .. p + s + 1 (implied by
    stability), and position p + 1 unmatched, i.e. no 1 anywhere in
    p - s + 2 .. p + 1.
    """
    n, s = params.n, params.s
    if not (mask >> ((p + 1) % n) & 1):
        return False
    window = 0
    for j in range(p - s + 1, p + 1):  # 0-based bits p-s+1 .. p
        window |= 1 << (j % n)
    return not (mask & window)


def push_mask(mask: int, params: Params, p: int) -> int:
    """Head mask -> tail mask: move the 1 from p to p + 1, then shift right."""
    n = params.n
    moved = mask ^ (1 << (p - 1)) ^ (1 << (p % n))
    return rotate_mask(moved, n, 1)


def unpush_mask(mask: int, params: Params, p: int) -> int:
    """Tail mask -> head mask: shift left, then move the 1 from p + 1 back to p."""
    n = params.n
    w = rotate_mask(mask, n, n - 1)
    return w ^ (1 << (p % n)) ^ (1 << (p - 1))


def _gap_run_index(runs: list[tuple[int, int, bool]], start0: int) -> int:
    """Index of the gap run starting at the 0-based position start0."""
    idx = bisect_left(runs, start0, key=lambda r: r[0])
    if idx == len(runs) or runs[idx][0] != start0 or runs[idx][2]:
        raise AssertionError(f"no gap run starts at bit {start0}")
    return idx


def _local_geometry(
    runs: list[tuple[int, int, bool]], params: Params, p: int
) -> tuple[int, int, int, int, int]:
    """(gap_idx, block, gap, trailing_gap, next_block) around a head at p.

    block ends at p + s - 1, gap precedes it, trailing_gap starts at p + s,
    next_block follows the trailing gap.
    """
    count = len(runs)
    gap_idx = _gap_run_index(runs, (p - 1 + params.s) % params.n)
    block = runs[(gap_idx - 1) % count][1]
    gap = runs[(gap_idx - 2) % count][1]
    trailing_gap = runs[gap_idx][1]
    next_block = runs[(gap_idx + 1) % count][1]
    return gap_idx, block, gap, trailing_gap, next_block


def connector_profile_from_runs(
    runs: list[tuple[int, int, bool]], params: Params, p: int
) -> GapBlockSeq:
    """Connector profile of a head at p, from its run decomposition.

    Anchoring two runs past the trailing gap starts the right-to-left read
    exactly behind the next block, so the profile leads with that block.
    """
    gap_idx = _gap_run_index(runs, (p - 1 + params.s) % params.n)
    return profile_from_runs(runs, (gap_idx + 2) % len(runs))


def tree_head_from_runs(
    runs: list[tuple[int, int, bool]], params: Params, p: int
) -> bool:
    """Spanning-tree membership of a connectable vertex, from its runs.

    True iff the vertex has at least two blocks and its connector profile is
    the rotation-minimal profile of its orbit.  The cheap filter first: the
    minimal rotation leads with the longest block, so a head whose leading
    block is not maximal cannot be minimal and needs no rotation scan.
    """
    if len(runs) < 4:
        return False
    prof = connector_profile_from_runs(runs, params, p)
    lead = prof[0]
    if any(is_block and -length < lead for _, length, is_block in runs):
        return False
    return min_rotation(prof)[1] == prof


def tree_head_mask(mask: int, params: Params, p: int) -> bool:
    """Is this connectable mask the spanning-tree head on its orbit?"""
    return tree_head_from_runs(mask_runs(mask, params), params, p)


# -- vertex-level API --


def is_connectable(x: Vertex, p: int) -> bool:
    """True iff x reads 1 0^(s-1) 0 starting at position p."""
    _check_position(x.params, p)
    return head_pattern(x.mask, x.params, p)


def connector_tail(x: Vertex, p: int) -> Vertex:
    """The unique tail y such that (x, y) is a connector pushed at p."""
    _check_position(x.params, p)
    if not head_pattern(x.mask, x.params, p):
        raise ValueError(f"{x.bits()} is not connectable at p = {p}")
    return Vertex._make(x.params, push_mask(x.mask, x.params, p))


def connector_head(y: Vertex, p: int) -> Vertex:
    """The unique head x such that (x, y) is a connector pushed at p."""
    _check_position(y.params, p)
    if not tail_pattern(y.mask, y.params, p):
        raise ValueError(f"{y.bits()} is not a connector tail at p = {p}")
    return Vertex._make(y.params, unpush_mask(y.mask, y.params, p))


@dataclass(frozen=True)
class Connector:
    """An ordered head/tail pair pushed at position p."""

    head: Vertex
    tail: Vertex
    p: int

    def __post_init__(self) -> None:
        if self.tail != connector_tail(self.head, self.p):
            raise ValueError("tail does not match the head pushed at p")

    @classmethod
    def from_head(cls, x: Vertex, p: int) -> "Connector":
        return cls(head=x, tail=connector_tail(x, p), p=p)


def four_cycle(c: Connector) -> tuple[Vertex, Vertex, Vertex, Vertex]:
    """The gluing 4-cycle (head, shift(head,1), shift(tail,1), tail)."""
    return (c.head, c.head.shift(1), c.tail.shift(1), c.tail)


def connector_profile(x: Vertex, p: int) -> GapBlockSeq:
    """Profile of a head read from behind its next block; needs >= 2 blocks."""
    _check_position(x.params, p)
    if not head_pattern(x.mask, x.params, p):
        raise ValueError(f"{x.bits()} is not connectable at p = {p}")
    runs = mask_runs(x.mask, x.params)
    if len(runs) < 4:
        raise ValueError("a single-block vertex has no connector profile")
    return connector_profile_from_runs(runs, x.params, p)


def descend(y: Vertex, p: int) -> Vertex:
    """A connectable vertex on the tail's orbit with a strictly smaller profile.

    Shift offsets by case: -2 when the trailing gap is longer than 1;
    s - 1 when it is 1 and the pushed block keeps another glider;
    gap + s - 1 when it is 1 and the pushed glider was the whole block.
    """
    x = connector_head(y, p)
    params = y.params
    runs = mask_runs(x.mask, params)
    if len(runs) < 4:
        raise ValueError("no descent from a single-block connector")
    _, block, gap, trailing_gap, _ = _local_geometry(runs, params, p)
    if trailing_gap > 1:
        t = -2
    elif block > params.s:
        t = params.s - 1
    else:
        t = gap + params.s - 1
    out = y.shift(t)
    assert head_pattern(out.mask, params, p), "descent must stay connectable"
    return out


def is_tree_head(x: Vertex, p: int) -> bool:
    """True iff (x, connector_tail(x, p)) belongs to the spanning tree at p."""
    _check_position(x.params, p)
    if not head_pattern(x.mask, x.params, p):
        return False
    return tree_head_mask(x.mask, x.params, p)

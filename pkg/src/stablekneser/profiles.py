"""Signed block/gap run profiles and their rotation-minimal canonical form.

A vertex whose position 1 is unmatched and whose position n is matched (we
call it *anchored*) decomposes left to right as

    gap_1 block_1 gap_2 block_2 ... gap_r block_r.

Its profile lists the run lengths from *right to left*, block lengths with a
negative sign:

    (-block_r, gap_r, ..., -block_1, gap_1).

Reading right to left and negating blocks makes lexicographic comparison of
profiles prefer long blocks preceded by short gaps, which is exactly the
order the spanning-tree construction in :mod:`stablekneser.connector` needs.
Profiles are plain tuples of nonzero ints; tuples already compare
lexicographically.  All profiles compared anywhere in this package are
rotations of one cyclic word and hence have equal length, so no padding rule
is required.
"""

from __future__ import annotations

from typing import Sequence

from .bitvertex import Vertex, matched_mask, mask_runs

GapBlockSeq = tuple[int, ...]


def is_anchored(x: Vertex) -> bool:
    """True iff position 1 of x is unmatched and position n is matched."""
    mm = matched_mask(x.mask, x.params.n, x.params.s)
    return not (mm & 1) and bool(mm >> (x.params.n - 1) & 1)


def profile_from_runs(runs: Sequence[tuple[int, int, bool]], gap_idx: int) -> GapBlockSeq:
    """Profile of the rotation that moves runs[gap_idx] (a gap) to position 1.

    ``runs`` is the cyclic (start, length, is_block) list from
    :func:`stablekneser.bitvertex.mask_runs`.
    """
    count = len(runs)
    assert not runs[gap_idx][2], "profile must be anchored at a gap run"
    out: list[int] = []
    i = (gap_idx - 1) % count
    for _ in range(count // 2):
        out.append(-runs[i][1])  # block length, sign-flipped
        out.append(runs[i - 1][1])  # the gap preceding that block
        i = (i - 2) % count
    return tuple(out)


def profile_of(x: Vertex) -> GapBlockSeq:
    """Signed right-to-left run profile of an anchored vertex.

    Raises ValueError when position 1 is matched or position n is unmatched.
    """
    if not is_anchored(x):
        raise ValueError(
            f"vertex {x.bits()} is not anchored "
            "(need position 1 unmatched and position n matched)"
        )
    runs = mask_runs(x.mask, x.params)
    return profile_from_runs(runs, 0)


def profile_at(x: Vertex, q: int) -> GapBlockSeq:
    """Profile read starting from position q (right to left).

    Requires position q matched and position q + 1 unmatched, so that
    shifting x left by q is anchored; equals ``profile_of(x.shift(-q))``.
    """
    n = x.params.n
    if not 1 <= q <= n:
        raise ValueError(f"position {q} outside 1..{n}")
    mm = matched_mask(x.mask, n, x.params.s)
    if not (mm >> (q - 1) & 1) or (mm >> (q % n) & 1):
        raise ValueError(
            f"position {q} of {x.bits()} must be matched with position {q + 1} unmatched"
        )
    return profile_of(x.shift(-q))


def min_rotation(seq: Sequence[int]) -> tuple[int, GapBlockSeq]:
    """Lexicographically least cyclic rotation of an integer sequence.

    Returns (offset, rotated) where the offset is the smallest one achieving
    the minimum.  Booth's algorithm over the doubled sequence: the failure
    function of the best candidate is grown one character at a time, and a
    mismatch either discards the candidate in favour of a smaller one or
    rules the new position out.  Runs in time linear in the length.
    """
    if not seq:
        raise ValueError("cannot rotate an empty sequence")
    doubled = tuple(seq) + tuple(seq)
    fail = [-1] * len(doubled)
    best = 0
    for j in range(1, len(doubled)):
        c = doubled[j]
        i = fail[j - best - 1]
        while i != -1 and c != doubled[best + i + 1]:
            if c < doubled[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if c != doubled[best + i + 1]:
            if c < doubled[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return best, doubled[best : best + len(seq)]


def canonical_profile(x: Vertex) -> GapBlockSeq:
    """Least profile over all anchored cyclic shifts of x: the necklace form.

    Equal for every vertex on the same shift orbit.  Computed as the minimal
    rotation of any single profile of x: anchored shifts of x yield exactly
    the rotations of the cyclic profile word that start at a (negative) block
    entry, and since negative entries compare below positive ones, the
    minimum over *all* rotations automatically starts at a block entry.
    Minimizing over all rotations therefore equals minimizing over anchored
    shifts.
    """
    runs = mask_runs(x.mask, x.params)
    gap_idx = 0 if not runs[0][2] else 1  # runs alternate, one of the first two is a gap
    return min_rotation(profile_from_runs(runs, gap_idx))[1]


def render_profile(seq: Sequence[int]) -> str:
    """Debug form, e.g. ``(-8,4,-6,2,-4,1,-2,3)``."""
    return "(" + ",".join(str(e) for e in seq) + ")"

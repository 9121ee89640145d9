"""Cyclic bitstring model for the vertices of s-stable Kneser graphs.

A vertex of S(n, k, s) is a k-element subset of {1, ..., n} in which any two
elements sit at cyclic distance at least s (s >= 2; s = 2 gives the Schrijver
graph).  We store the characteristic bitstring: position 1 is the leftmost
character of the textual form, and indices wrap around, so position n + i is
position i.  Edges of the graph join disjoint subsets.

Every 1 together with the s - 1 zeros cyclically following it forms a glider
occupying s positions.  The s*k positions covered by gliders are "matched";
the remaining n - s*k zeros are "unmatched" (rendered '-' in debug output
only; the canonical textual form uses '0'/'1').  Maximal cyclic runs of
matched positions are blocks (lengths are multiples of s), maximal runs of
unmatched positions are gaps.

Positions are 1-based in every public interface.  Internally bit i - 1 of a
plain Python int holds position i, so cyclic shifts, disjointness tests and
matched-position computations are word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class ParameterError(ValueError):
    """An (n, k, s) triple or a position argument outside the supported domain."""


class VertexError(ValueError):
    """Bits or elements that do not encode a valid vertex."""


class CardinalityError(VertexError):
    """Wrong number of elements (or ones)."""


class StabilityError(VertexError):
    """Two elements closer than s in cyclic distance."""


@dataclass(frozen=True)
class Params:
    """Instance parameters: ground-set size n, subset size k, stability s."""

    n: int
    k: int
    s: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError(f"k must be a positive integer, got {self.k}")
        if self.s < 2:
            raise ParameterError(f"s must be at least 2, got {self.s}")
        # n = s*k is degenerate (no gap at all); everything here needs n > s*k.
        if self.n < self.s * self.k + 1:
            raise ParameterError(
                f"n must be at least s*k + 1 = {self.s * self.k + 1}, got {self.n}"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def rotate_mask(mask: int, n: int, t: int) -> int:
    """Cyclic right shift of an n-bit mask by t: bit i moves to bit (i + t) mod n."""
    t %= n
    if t == 0:
        return mask
    return ((mask << t) | (mask >> (n - t))) & ((1 << n) - 1)


def matched_mask(mask: int, n: int, s: int) -> int:
    """Positions covered by gliders: every 1 plus the s - 1 bits after it."""
    mm = mask
    m = mask
    for _ in range(s - 1):
        m = rotate_mask(m, n, 1)
        mm |= m
    return mm


_BYTE_BITS = tuple(
    tuple(b for b in range(8) if byte >> b & 1) for byte in range(256)
)


def bit_positions(mask: int, n: int) -> list[int]:
    """Ascending 0-based indices of the set bits of an n-bit mask."""
    out: list[int] = []
    base = 0
    for byte in mask.to_bytes((n + 7) // 8, "little"):
        if byte:
            for b in _BYTE_BITS[byte]:
                out.append(base + b)
        base += 8
    return out


def mask_runs(mask: int, params: Params, mm: int | None = None) -> list[tuple[int, int, bool]]:
    """Alternating block/gap decomposition of a vertex mask.

    Returns (start, length, is_block) triples with 0-based starts in
    ascending order; the run starting last wraps across position n.  Since
    n > s*k there is at least one block and one gap, so the boundary mask is
    never empty.  ``mm`` may pass in a precomputed matched mask.
    """
    n = params.n
    if mm is None:
        mm = matched_mask(mask, n, params.s)
    boundaries = mm ^ rotate_mask(mm, n, 1)  # bit i set <=> a run starts at i
    starts: list[int] = []
    append = starts.append
    base = 0
    for byte in boundaries.to_bytes((n + 7) >> 3, "little"):
        if byte:
            for b in _BYTE_BITS[byte]:
                append(base + b)
        base += 8
    first = starts[0]
    is_block = bool(mm >> first & 1)
    runs = []
    prev = first
    for nxt in starts[1:]:
        runs.append((prev, nxt - prev, is_block))
        is_block = not is_block  # runs strictly alternate
        prev = nxt
    runs.append((prev, first + n - prev, is_block))
    return runs


class Vertex:
    """An s-stable k-subset of {1..n}, immutable after construction.

    Instances are value objects: equality and hashing use (params, bits), and
    all operations return new vertices, so they are safe to share between
    threads.
    """

    __slots__ = ("params", "mask")

    def __init__(self, params: Params, mask: int):
        if mask < 0 or mask >> params.n:
            raise VertexError("bit set outside positions 1..n")
        if mask.bit_count() != params.k:
            raise CardinalityError(
                f"expected {params.k} ones, got {mask.bit_count()}"
            )
        for j in range(1, params.s):
            if mask & rotate_mask(mask, params.n, j):
                raise StabilityError(
                    f"two elements at cyclic distance {j} < s = {params.s}"
                )
        self.params = params
        self.mask = mask

    @classmethod
    def _make(cls, params: Params, mask: int) -> "Vertex":
        """Wrap a mask already known to be valid (internal fast path)."""
        v = object.__new__(cls)
        v.params = params
        v.mask = mask
        return v

    @classmethod
    def from_set(cls, params: Params, elements: Iterable[int]) -> "Vertex":
        """Vertex with ones exactly at the given 1-based elements."""
        elems = set(elements)
        for e in elems:
            if not 1 <= e <= params.n:
                raise VertexError(f"element {e} outside 1..{params.n}")
        if len(elems) != params.k:
            raise CardinalityError(f"expected {params.k} elements, got {len(elems)}")
        mask = 0
        for e in elems:
            mask |= 1 << (e - 1)
        return cls(params, mask)

    @classmethod
    def from_bits(cls, params: Params, text: str) -> "Vertex":
        """Parse the canonical textual form: n characters over {0,1}, position 1 leftmost."""
        if len(text) != params.n or set(text) - {"0", "1"}:
            raise VertexError(
                f"expected {params.n} characters over 0/1, got {text!r}"
            )
        return cls(params, int(text[::-1], 2))

    def bits(self) -> str:
        """Canonical textual form (position 1 leftmost)."""
        return f"{self.mask:0{self.params.n}b}"[::-1]

    def pretty(self) -> str:
        """Debug rendering with unmatched zeros shown as '-'."""
        mm = matched_mask(self.mask, self.params.n, self.params.s)
        return "".join(
            "1" if self.mask >> i & 1 else ("0" if mm >> i & 1 else "-")
            for i in range(self.params.n)
        )

    def to_set(self) -> tuple[int, ...]:
        """Increasing 1-based positions of the ones; inverse of from_set."""
        return tuple(i + 1 for i in bit_positions(self.mask, self.params.n))

    def shift(self, t: int) -> "Vertex":
        """Cyclic right shift by t positions (negative t shifts left).

        Stability is shift-invariant, so no revalidation is needed.
        """
        return Vertex._make(self.params, rotate_mask(self.mask, self.params.n, t))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vertex):
            return NotImplemented
        return self.params == other.params and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.params, self.mask))

    def __repr__(self) -> str:
        p = self.params
        return f"Vertex({p.n},{p.k},{p.s}:{self.bits()})"


def is_edge(x: Vertex, y: Vertex) -> bool:
    """True iff the two subsets are disjoint (k >= 1 makes loops impossible)."""
    if x.params != y.params:
        raise ParameterError("vertices from different instances")
    return (x.mask & y.mask) == 0


class Run(NamedTuple):
    kind: str  # "block" or "gap"
    start: int  # 1-based position of the first bit of the run
    length: int


@dataclass(frozen=True)
class MatchProfile:
    """Matched/unmatched partition plus the block/gap run decomposition."""

    matched: frozenset[int]
    unmatched: frozenset[int]
    runs: tuple[Run, ...]

    def block_lengths(self) -> tuple[int, ...]:
        return tuple(r.length for r in self.runs if r.kind == "block")

    def gap_lengths(self) -> tuple[int, ...]:
        return tuple(r.length for r in self.runs if r.kind == "gap")


def match_profile(x: Vertex) -> MatchProfile:
    """Matched/unmatched positions of x and its alternating block/gap runs.

    |matched| = s*k always; runs are listed cyclically starting with the run
    containing position 1 (which may wrap across position n).
    """
    params = x.params
    n = params.n
    mm = matched_mask(x.mask, n, params.s)
    matched = frozenset(i + 1 for i in bit_positions(mm, n))
    unmatched = frozenset(range(1, n + 1)) - matched
    raw = mask_runs(x.mask, params)
    if raw[0][0] != 0:
        # first listed run must contain position 1, i.e. the wrapping one
        raw = raw[-1:] + raw[:-1]
    runs = tuple(
        Run("block" if is_block else "gap", st + 1, length)
        for st, length, is_block in raw
    )
    return MatchProfile(matched=matched, unmatched=unmatched, runs=runs)


def glider_starts(x: Vertex) -> tuple[int, ...]:
    """Start positions of the k gliders (each glider is a 1 and s-1 zeros)."""
    return x.to_set()

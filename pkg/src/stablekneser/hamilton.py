"""Streaming Hamilton-cycle walk with O(n) work and O(n) memory per vertex.

The walk follows the shift-orbit cycle factor and detours through the
spanning-tree connectors of :mod:`stablekneser.connector`.  Its state is the
current vertex plus a direction d in {-1, +1}; the default move is a cyclic
shift by d.  Writing w for the vertex the pattern tests look at (the current
vertex when d = +1, its left shift when d = -1), one of four detours fires
instead of the default:

  (i)   d = +1, w current and a tree head:     jump to the tail, d becomes -1
  (ii)  d = +1, w current and a tree tail:     jump to the head, d becomes -1
  (iii) d = -1, w a tree head:                 land on shift(tail, 1), d +1
  (iv)  d = -1, w a tree tail:                 land on shift(head, 1), d +1

Head and tail patterns at the same vertex exclude each other -- a head keeps
position p + 1 matched inside its glider while a tail needs it unmatched --
and the direction gates the pairs, so at most one detour applies per step.

Every step performs a bounded number of O(n) primitives (one shift, two
pattern tests, at most one tree-membership test with one minimal-rotation
scan), which gives the O(n)-per-vertex bound.  Initialization builds one
n-bit state, so startup cost and live memory are O(n) as well.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .bitvertex import _BYTE_BITS, ParameterError, Params, Vertex
from .connector import push_mask, tree_head_from_runs, tree_head_mask, unpush_mask


def default_start(params: Params) -> Vertex:
    """The all-gliders-adjacent vertex: n - s*k zeros, then k gliders."""
    mask = 0
    for j in range(params.k):
        mask |= 1 << (params.n - params.s * params.k + j * params.s)
    return Vertex._make(params, mask)


class Snapshot(NamedTuple):
    """Resumable generator state: instance, pin position, vertex, direction."""

    n: int
    k: int
    s: int
    p: int
    bits: str
    direction: int


class HamiltonGenerator:
    """Single-consumer walk state; see the module docstring for the step rule.

    Instances may be moved between threads between calls, but step() needs
    exclusive access.  Independent generators never share state.
    """

    __slots__ = (
        "params",
        "p",
        "start",
        "direction",
        "steps_emitted",
        "_mask",
        "_nbytes",
        "_bit_head_one",
        "_bit_head_zero",
        "_bit_tail_one",
        "_bit_tail_unm",
    )

    def __init__(self, params: Params, p: int = 1, start: Vertex | None = None):
        if not 1 <= p <= params.n:
            raise ParameterError(f"position p = {p} outside 1..{params.n}")
        if start is None:
            start = default_start(params)
        elif start.params != params:
            raise ParameterError("start vertex belongs to a different instance")
        self.params = params
        self.p = p
        self.start = start
        self.direction = 1
        self.steps_emitted = 0
        self._mask = start.mask
        self._nbytes = (params.n + 7) >> 3
        # fixed bit indices of the connector patterns at p (0-based)
        n, s = params.n, params.s
        self._bit_head_one = p - 1
        self._bit_head_zero = (p - 1 + s) % n
        self._bit_tail_one = (p + 1) % n
        self._bit_tail_unm = p % n

    @property
    def current(self) -> Vertex:
        return Vertex._make(self.params, self._mask)

    def step(self) -> Vertex:
        """Advance to the next vertex on the Hamilton cycle; O(n) per call.

        The walk keeps no state besides (vertex, direction): every step
        rereads the matched bits and run boundaries of the probed vertex from
        scratch, and a pattern hit rereads the runs of the derived head too.
        That is one shift, two pattern tests and at most two profile passes,
        each O(n).

        This is the one hot loop of the package, so the primitives from
        bitvertex/connector (rotate_mask, matched_mask, mask_runs, the
        pattern tests) are spelled out inline on local variables; the tests
        assert step-for-step agreement with the public operations.
        """
        params = self.params
        n = params.n
        p = self.p
        mask = self._mask
        d = self.direction
        full = (1 << n) - 1
        if d == 1:
            probe = mask
        else:  # probe the left neighbour: rotate_mask(mask, n, n - 1)
            probe = (mask >> 1) | ((mask & 1) << (n - 1))
        mm = probe
        part = probe
        for _ in range(params.s - 1):  # matched_mask
            part = ((part << 1) | (part >> (n - 1))) & full
            mm |= part
        boundaries = mm ^ (((mm << 1) | (mm >> (n - 1))) & full)
        boundary_bytes = boundaries.to_bytes(self._nbytes, "little")
        probe_bytes = probe.to_bytes(self._nbytes, "little")
        mm_bytes = mm.to_bytes(self._nbytes, "little")
        starts: list[int] = []
        grow = starts.append
        base = 0
        for byte in boundary_bytes:
            if byte:
                for b in _BYTE_BITS[byte]:
                    grow(base + b)
            base += 8
        i = self._bit_head_one
        j = self._bit_head_zero
        head = (
            probe_bytes[i >> 3] >> (i & 7) & 1
            and not probe_bytes[j >> 3] >> (j & 7) & 1
        )
        i = self._bit_tail_one
        j = self._bit_tail_unm
        tail = (
            probe_bytes[i >> 3] >> (i & 7) & 1
            and not mm_bytes[j >> 3] >> (j & 7) & 1
        )
        assert not (head and tail), "head and tail patterns must be exclusive"
        detour = None
        if head or tail:
            first = starts[0]
            is_block = bool(mm >> first & 1)
            runs = []
            prev = first
            for nxt in starts[1:]:
                runs.append((prev, nxt - prev, is_block))
                is_block = not is_block  # runs strictly alternate
                prev = nxt
            runs.append((prev, first + n - prev, is_block))
            if head:
                if tree_head_from_runs(runs, params, p):
                    detour = push_mask(probe, params, p)
            else:
                head_mask = unpush_mask(probe, params, p)
                if tree_head_mask(head_mask, params, p):
                    detour = head_mask
        if detour is None:
            if d == 1:
                self._mask = ((mask << 1) | (mask >> (n - 1))) & full
            else:
                self._mask = probe
        elif d == 1:
            self._mask = detour
            self.direction = -1
        else:
            self._mask = ((detour << 1) | (detour >> (n - 1))) & full
            self.direction = 1
        self.steps_emitted += 1
        return Vertex._make(params, self._mask)

    def snapshot(self) -> Snapshot:
        params = self.params
        return Snapshot(
            n=params.n,
            k=params.k,
            s=params.s,
            p=self.p,
            bits=self.current.bits(),
            direction=self.direction,
        )

    @classmethod
    def restore(cls, snap: Snapshot) -> "HamiltonGenerator":
        """Rebuild a generator; the restored vertex becomes its stream origin."""
        params = Params(snap.n, snap.k, snap.s)
        gen = cls(params, snap.p, start=Vertex.from_bits(params, snap.bits))
        if snap.direction not in (-1, 1):
            raise ParameterError(f"direction must be -1 or +1, got {snap.direction}")
        gen.direction = snap.direction
        return gen


def generate(
    params: Params,
    p: int = 1,
    limit: int | None = None,
    start: Vertex | None = None,
) -> Iterator[Vertex]:
    """Stream the Hamilton cycle: the start vertex, then each successor once.

    Stops after a full cycle (the walk returns to the start moving forward;
    the closing duplicate is not emitted, so a full stream has exactly one
    entry per vertex of the instance) or after ``limit`` vertices.
    """
    if limit is not None and limit < 1:
        raise ParameterError(f"limit must be at least 1, got {limit}")
    gen = HamiltonGenerator(params, p, start)
    start_mask = gen._mask
    yield gen.current
    emitted = 1
    while limit is None or emitted < limit:
        v = gen.step()
        if gen._mask == start_mask:
            # A full traversal re-enters the start through its other cycle
            # edge, so the outgoing direction must again be forward.
            assert gen.direction == 1, "walk closed against the start direction"
            return
        yield v
        emitted += 1

"""Brute-force ground truth at desk scale.

Everything here re-derives structure from first principles on bit *strings*
(not the mask arithmetic the library runs on): matched positions by marking
glider spans, profiles by scanning rotated strings, necklaces by taking the
least rotation with min().  The verification checks then compare the
library's answers against these independent derivations, and the
Hamiltonicity check consumes only the emitted vertex stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .bitvertex import ParameterError, Params, Vertex, is_edge
from .connector import connector_tail, descend, four_cycle, Connector, is_tree_head
from .factor import enumerate_factor
from .hamilton import default_start, generate

DEFAULT_GUARD = 200_000


class CountMismatchError(RuntimeError):
    """The closed-form vertex count disagrees with exhaustive enumeration."""


def count_formula(params: Params, *, enum_guard: int = DEFAULT_GUARD) -> int:
    """Closed-form |X(n, k, s)| = n / (n - (s-1)k) * C(n - (s-1)k, k).

    Instances small enough to enumerate (at most ``enum_guard`` vertices) are
    cross-checked against :func:`enumerate_vertices`; a disagreement raises
    CountMismatchError rather than returning either number.
    """
    m = params.n - (params.s - 1) * params.k
    numerator = params.n * comb(m, params.k)
    if numerator % m:
        raise CountMismatchError(
            f"count formula is not integral for n={params.n} k={params.k} s={params.s}"
        )
    value = numerator // m
    if value <= enum_guard:
        actual = len(_enumerate_masks(params))
        if actual != value:
            raise CountMismatchError(
                f"formula gives {value} but enumeration finds {actual} vertices "
                f"for n={params.n} k={params.k} s={params.s}"
            )
    return value


@lru_cache(maxsize=128)
def _enumerate_masks(params: Params) -> tuple[int, ...]:
    """All vertex masks, sorted by their textual form (position 1 first)."""
    n, k, s = params.n, params.k, params.s
    found: list[list[int]] = []

    def extend(prefix: list[int], start: int) -> None:
        if len(prefix) == k:
            found.append(prefix.copy())
            return
        remaining = k - len(prefix)
        # stay below first + n - s (cyclic wrap gap) and leave s per element
        hi = min(n, prefix[0] + n - s - (remaining - 1) * s)
        for a in range(start, hi + 1):
            prefix.append(a)
            extend(prefix, a + s)
            prefix.pop()

    for first in range(1, n - (k - 1) * s + 1):
        extend([first], first + s)

    masks = []
    for elems in found:
        mask = 0
        for e in elems:
            mask |= 1 << (e - 1)
        masks.append(mask)
    masks.sort(key=lambda mask: f"{mask:0{n}b}"[::-1])
    return tuple(masks)


def enumerate_vertices(params: Params, *, guard: int = DEFAULT_GUARD) -> list[Vertex]:
    """Every vertex of a desk-scale instance, in textual lexicographic order."""
    expected = count_formula(params, enum_guard=0)
    if expected > guard:
        raise ParameterError(
            f"instance has {expected} vertices, above the guard of {guard}"
        )
    return [Vertex._make(params, m) for m in _enumerate_masks(params)]


# -- independent string-level derivations --


def _matched_flags(bits: str, s: int) -> list[bool]:
    n = len(bits)
    flags = [False] * n
    for i, c in enumerate(bits):
        if c == "1":
            for j in range(s):
                flags[(i + j) % n] = True
    return flags


def _rotate_left(bits: str, t: int) -> str:
    t %= len(bits)
    return bits[t:] + bits[:t]


def _is_anchored_flags(flags: Sequence[bool]) -> bool:
    return not flags[0] and flags[-1]


def _profile_of_anchored(flags: Sequence[bool]) -> tuple[int, ...]:
    """Signed right-to-left run profile from a matched-flag sequence."""
    segments: list[tuple[bool, int]] = []
    for f in flags:
        if segments and segments[-1][0] == f:
            segments[-1] = (f, segments[-1][1] + 1)
        else:
            segments.append((f, 1))
    out: list[int] = []
    for i in range(len(segments) - 1, 0, -2):
        out.append(-segments[i][1])
        out.append(segments[i - 1][1])
    return tuple(out)


def naive_profiles(bits: str, s: int) -> dict[int, tuple[int, ...]]:
    """Profile of every anchored left-rotation of ``bits``, keyed by rotation."""
    n = len(bits)
    flags = _matched_flags(bits, s)
    out = {}
    for t in range(n):
        rotated = flags[t:] + flags[:t]
        if _is_anchored_flags(rotated):
            out[t] = _profile_of_anchored(rotated)
    return out


def naive_canonical_profile(bits: str, s: int) -> tuple[int, ...]:
    """Least profile over anchored rotations, by exhaustive comparison."""
    return min(naive_profiles(bits, s).values())


def naive_min_rotation(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """All-rotations minimum with the least offset on ties."""
    n = len(seq)
    rotated, offset = min(
        (tuple(seq[i:]) + tuple(seq[:i]), i) for i in range(n)
    )
    return offset, rotated


def necklace_key(bits: str) -> str:
    """Canonical necklace id: the least rotation of the textual form."""
    return min(bits[t:] + bits[:t] for t in range(len(bits)))


def _naive_connectable(bits: str, s: int, p: int) -> bool:
    n = len(bits)
    if bits[p - 1] != "1":
        return False
    return all(bits[(p - 1 + j) % n] == "0" for j in range(1, s + 1))


def _naive_connector_profile(
    bits: str, s: int, p: int, *, extended: bool = False
) -> tuple[int, ...] | None:
    """Definitional connector profile of a connectable vertex.

    Walks the matched flags outward from the pushed glider to find the
    trailing gap and the next block, then reads the profile of the rotation
    anchored right behind that block.  Single-block vertices have no
    connector profile proper (None); with ``extended`` the read-position
    formula is applied to them anyway, giving the two-entry orbit profile,
    which compares lexicographically below every multi-block profile (its
    leading block is the longest possible).  The descent check needs that
    extension for descents terminating on the single-block orbit.
    """
    n = len(bits)
    flags = _matched_flags(bits, s)
    i = (p - 1 + s) % n  # 0-based first position after the glider
    trailing_gap = 0
    while not flags[(i + trailing_gap) % n]:
        trailing_gap += 1
    next_block = 0
    while flags[(i + trailing_gap + next_block) % n]:
        next_block += 1
    if trailing_gap + next_block == n and not extended:  # single block
        return None
    q = (p + s - 1 + trailing_gap + next_block) % n or n  # 1-based end of that block
    rotated = flags[q:] + flags[:q]
    assert _is_anchored_flags(rotated)
    return _profile_of_anchored(rotated)


class _UnionFind:
    def __init__(self, items: Iterable[str]):
        self.parent = {item: item for item in items}

    def find(self, item: str) -> str:
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def component_count(self) -> int:
        return len({self.find(item) for item in self.parent})


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    params: Params
    p: int
    checks: tuple[CheckResult, ...]
    vertex_count: int
    cycle_count: int
    tree_edges: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [
            f"instance n={self.params.n} k={self.params.k} s={self.params.s} p={self.p}",
            f"vertex_count {self.vertex_count}",
            f"cycle_count {self.cycle_count}",
            f"tree_edges {self.tree_edges}",
        ]
        for c in self.checks:
            lines.append(f"{c.name} {'PASS' if c.passed else 'FAIL'} {c.detail}")
        return "\n".join(lines)


def check_stream(params: Params, stream: Iterable[Vertex]) -> tuple[bool, str]:
    """Is the stream a Hamilton cycle?  Consumes emitted vertices only."""
    expected = set(_enumerate_masks(params))
    seen: list[int] = []
    for v in stream:
        seen.append(v.mask)
    if len(seen) != len(expected):
        return False, f"stream emitted {len(seen)} of {len(expected)} vertices"
    if set(seen) != expected:
        return False, "stream is not a permutation of the vertex set"
    for i, mask in enumerate(seen):
        nxt = seen[(i + 1) % len(seen)]
        if mask & nxt:
            return False, f"consecutive vertices {i} and {i + 1} are not disjoint"
    return True, f"{len(seen)} vertices, all consecutive pairs disjoint"


def verify_instance(
    params: Params, p: int = 1, *, guard: int = DEFAULT_GUARD
) -> VerificationReport:
    """Run every structural check of the construction on one instance."""
    if not 1 <= p <= params.n:
        raise ParameterError(f"position p = {p} outside 1..{params.n}")
    n, k, s = params.n, params.k, params.s
    vertices = enumerate_vertices(params, guard=guard)
    all_masks = {v.mask for v in vertices}
    bits_of = {v.mask: v.bits() for v in vertices}
    checks: list[CheckResult] = []

    # (a) factor partition: orbit cycles cover every vertex exactly once and
    # consecutive cycle vertices (wrap included) are disjoint shifts.
    cycles = enumerate_factor(params, guard=guard)
    covered: set[int] = set()
    factor_ok = True
    factor_why = f"{len(cycles)} cycles cover {len(vertices)} vertices"
    for cyc in cycles:
        vs = cyc.vertices()
        masks = [v.mask for v in vs]
        rep_bits = vs[0].bits()
        period = next(
            t for t in range(1, len(rep_bits) + 1)
            if _rotate_left(rep_bits, len(rep_bits) - t) == rep_bits
        )
        if period != cyc.length or len(set(masks)) != cyc.length:
            factor_ok, factor_why = False, f"orbit of {rep_bits} has wrong length"
            break
        if covered & set(masks):
            factor_ok, factor_why = False, f"orbit of {rep_bits} overlaps another"
            break
        covered |= set(masks)
        for i, v in enumerate(vs):
            nxt = vs[(i + 1) % len(vs)]
            if nxt != v.shift(1) or not is_edge(v, nxt):
                factor_ok, factor_why = False, f"orbit of {rep_bits} is not a shift cycle"
                break
        if not factor_ok:
            break
    if factor_ok and covered != all_masks:
        factor_ok, factor_why = False, "cycles do not cover the vertex set"
    checks.append(CheckResult("factor_partition", factor_ok, factor_why))

    # connectors at p, from the independent string-level pattern test
    heads = [v for v in vertices if _naive_connectable(bits_of[v.mask], s, p)]
    connectors = [(x, connector_tail(x, p)) for x in heads]

    # (b) every connector yields a valid 4-cycle
    four_ok = True
    four_why = f"{len(connectors)} connectors checked"
    for x, y in connectors:
        if y.mask not in all_masks:
            four_ok, four_why = False, f"tail of {x.bits()} is not a vertex"
            break
        ring = four_cycle(Connector.from_head(x, p))
        for i in range(4):
            if not is_edge(ring[i], ring[(i + 1) % 4]):
                four_ok, four_why = False, f"4-cycle at {x.bits()} has a non-edge"
                break
        w = y.shift(-1)
        diff = {
            i for i in range(1, n + 1)
            if bits_of[x.mask][i - 1] != w.bits()[i - 1]
        }
        window = {(p - 1 + j) % n + 1 for j in range(s + 1)}
        if not diff <= window:
            four_ok, four_why = False, f"tail of {x.bits()} differs outside the window"
        if not four_ok:
            break
    checks.append(CheckResult("four_cycle_validity", four_ok, four_why))

    # (c) pairwise disjointness: heads are distinct by enumeration and map to
    # distinct tails, so {x,y} vs {x',y'} can only collide head-on-tail;
    # an empty heads/tails intersection rules that out.
    tails = {y.mask for _, y in connectors}
    disjoint_ok = len(tails) == len(connectors) and not (
        tails & {x.mask for x, _ in connectors}
    )
    checks.append(
        CheckResult(
            "connector_disjointness",
            disjoint_ok,
            f"{len(connectors)} connectors pairwise disjoint",
        )
    )

    # (d) the auxiliary graph over all connectors at p is connected
    keys = {mask: necklace_key(bits) for mask, bits in bits_of.items()}
    uf = _UnionFind(set(keys.values()))
    for x, y in connectors:
        uf.union(keys[x.mask], keys[y.mask])
    aux_ok = uf.component_count() == 1
    checks.append(
        CheckResult(
            "aux_graph_connected",
            aux_ok,
            f"{len(set(keys.values()))} cycles, {len(connectors)} connector edges",
        )
    )

    # (e) tree connectors: naive profile minimality must agree with the
    # library, pick exactly one head per non-root cycle, and span the cycles.
    root_key = necklace_key(default_start(params).bits())
    tree_ok = True
    tree_why = ""
    tree_heads: list[tuple[Vertex, Vertex]] = []
    heads_per_key: dict[str, int] = {}
    for x, y in connectors:
        prof = _naive_connector_profile(bits_of[x.mask], s, p)
        naive_member = prof is not None and prof == naive_canonical_profile(
            bits_of[x.mask], s
        )
        if naive_member != is_tree_head(x, p):
            tree_ok, tree_why = False, f"membership disagrees at {x.bits()}"
            break
        if naive_member:
            tree_heads.append((x, y))
            heads_per_key[keys[x.mask]] = heads_per_key.get(keys[x.mask], 0) + 1
            if keys[x.mask] == keys[y.mask]:
                tree_ok, tree_why = False, f"tree edge at {x.bits()} is a self-loop"
                break
    all_keys = set(keys.values())
    if tree_ok:
        non_root = all_keys - {root_key}
        if heads_per_key.get(root_key):
            tree_ok, tree_why = False, "root cycle carries a tree head"
        elif any(heads_per_key.get(key, 0) != 1 for key in non_root):
            tree_ok, tree_why = False, "some non-root cycle has head count != 1"
        elif len(tree_heads) != len(all_keys) - 1:
            tree_ok, tree_why = False, (
                f"{len(tree_heads)} tree edges over {len(all_keys)} cycles"
            )
        else:
            uf_tree = _UnionFind(all_keys)
            for x, y in tree_heads:
                uf_tree.union(keys[x.mask], keys[y.mask])
            if uf_tree.component_count() != 1:
                tree_ok, tree_why = False, "tree edges do not connect all cycles"
            else:
                tree_why = (
                    f"{len(tree_heads)} edges span {len(all_keys)} cycles, "
                    "membership agrees with the library"
                )
    checks.append(CheckResult("spanning_tree", tree_ok, tree_why))

    # (f) the generator's stream is a Hamilton cycle (emitted vertices only)
    ham_ok, ham_why = check_stream(params, generate(params, p))
    checks.append(CheckResult("hamilton_cycle", ham_ok, ham_why))

    # (g) strict profile descent across every multi-block connector
    descent_ok = True
    descent_count = 0
    increments: set[int] = set()
    descent_why = ""
    for x, y in connectors:
        prof_x = _naive_connector_profile(bits_of[x.mask], s, p)
        if prof_x is None:
            continue
        z = descend(y, p)
        prof_z = _naive_connector_profile(z.bits(), s, p, extended=True)
        if not prof_z < prof_x:
            descent_ok, descent_why = False, f"no strict descent at {x.bits()}"
            break
        descent_count += 1
        trailing_gap = prof_x[1]
        if trailing_gap > 1:
            if prof_z[0] != prof_x[0] or prof_z[1] != trailing_gap - 1:
                descent_ok, descent_why = False, (
                    f"long-gap descent has wrong leading entries at {x.bits()}"
                )
                break
        else:
            increments.add(prof_x[0] - prof_z[0])
            if s == 2 and prof_z[0] != prof_x[0] - 2:
                descent_ok, descent_why = False, (
                    f"unit-gap descent should deepen the block by 2 at {x.bits()}"
                )
                break
    if descent_ok:
        descent_why = f"{descent_count} descents strict"
        if increments:
            # observed block growth for unit trailing gaps (expected {s})
            descent_why += f", unit-gap block growth {sorted(increments)}"
    checks.append(CheckResult("profile_descent", descent_ok, descent_why))

    return VerificationReport(
        params=params,
        p=p,
        checks=tuple(checks),
        vertex_count=len(vertices),
        cycle_count=len(cycles),
        tree_edges=len(tree_heads) if tree_ok else 0,
    )

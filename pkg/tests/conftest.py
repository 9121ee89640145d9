"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from stablekneser import Params, Vertex


@st.composite
def valid_vertices(draw, max_n: int = 32, max_s: int = 4, max_k: int = 4) -> Vertex:
    """A random valid vertex: spread the slack zeros over the k cyclic gaps."""
    s = draw(st.integers(2, max_s))
    k = draw(st.integers(1, max_k))
    lo = s * k + 1
    n = draw(st.integers(lo, min(max_n, lo + 12)))
    params = Params(n, k, s)
    slack = n - s * k
    cuts = sorted(
        draw(st.lists(st.integers(0, slack), min_size=k - 1, max_size=k - 1))
    )
    extras = [b - a for a, b in zip([0] + cuts, cuts + [slack])]
    elements = []
    pos = 1
    for extra in extras:
        elements.append(pos)
        pos += s + extra
    offset = draw(st.integers(0, n - 1))
    return Vertex.from_set(params, {(e - 1 + offset) % n + 1 for e in elements})


def small_instances() -> list[Params]:
    """A cross-section of desk-scale instances covering s = 2..5."""
    return [
        Params(7, 2, 2),
        Params(9, 3, 2),
        Params(11, 5, 2),
        Params(12, 4, 2),
        Params(10, 3, 3),
        Params(14, 4, 3),
        Params(13, 3, 4),
        Params(17, 3, 5),
    ]

import pytest
from hypothesis import given, strategies as st

from stablekneser import (
    Params,
    Vertex,
    canonical_profile,
    is_anchored,
    min_rotation,
    profile_at,
    profile_of,
    render_profile,
)
from stablekneser.oracle import naive_min_rotation

from conftest import valid_vertices


def _thirty_bit_vertex() -> Vertex:
    bits = "0000" + "10101010" + "000" + "10" + "0" + "1010" + "00" + "101010"
    return Vertex.from_bits(Params(30, 10, 2), bits)


class TestProfileOf:
    def test_worked_example(self):
        assert profile_of(_thirty_bit_vertex()) == (-6, 2, -4, 1, -2, 3, -8, 4)

    def test_single_pair(self):
        k, n = 4, 11
        v = Vertex.from_bits(Params(n, k, 2), "0" * (n - 2 * k) + "10" * k)
        assert profile_of(v) == (-2 * k, n - 2 * k)

    def test_two_pairs(self):
        v = Vertex.from_bits(Params(7, 2, 2), "0010010")
        assert profile_of(v) == (-2, 1, -2, 2)

    def test_rejects_unanchored(self):
        v = Vertex.from_bits(Params(7, 2, 2), "1001000")
        assert not is_anchored(v)
        with pytest.raises(ValueError):
            profile_of(v)


class TestProfileAt:
    def test_at_block_end(self):
        v = Vertex.from_bits(Params(7, 2, 2), "1001000")
        assert profile_at(v, 5) == (-2, 1, -2, 2)

    def test_at_other_block_end(self):
        v = Vertex.from_bits(Params(7, 2, 2), "1001000")
        assert profile_at(v, 2) == (-2, 2, -2, 1)

    def test_at_n_equals_profile_of(self):
        v = Vertex.from_bits(Params(7, 2, 2), "0010010")
        assert profile_at(v, 7) == profile_of(v)

    def test_rejects_bad_position(self):
        v = Vertex.from_bits(Params(7, 2, 2), "1001000")
        with pytest.raises(ValueError):
            profile_at(v, 1)  # position 2 is matched, not unmatched
        with pytest.raises(ValueError):
            profile_at(v, 3)  # position 3 is unmatched itself


class TestMinRotation:
    def test_example(self):
        assert min_rotation((-2, 2, -2, 1)) == (2, (-2, 1, -2, 2))

    def test_constant(self):
        assert min_rotation((5, 5, 5)) == (0, (5, 5, 5))

    def test_already_minimal(self):
        seq = (-8, 4, -6, 2, -4, 1, -2, 3)
        assert min_rotation(seq) == (0, seq)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            min_rotation(())

    def test_tie_offset(self):
        # periodic input: both offsets 1 and 3 give the minimum; report 1
        assert min_rotation((2, 1, 2, 1)) == (1, (1, 2, 1, 2))

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=48))
    def test_matches_naive(self, seq):
        assert min_rotation(seq) == naive_min_rotation(seq)


class TestCanonicalProfile:
    def test_worked_example(self):
        assert canonical_profile(_thirty_bit_vertex()) == (-8, 4, -6, 2, -4, 1, -2, 3)

    def test_single_block(self):
        v = Vertex.from_bits(Params(11, 4, 2), "0" * 3 + "10" * 4)
        assert canonical_profile(v) == (-8, 3)

    def test_two_blocks(self):
        v = Vertex.from_bits(Params(7, 2, 2), "1001000")
        assert canonical_profile(v) == (-2, 1, -2, 2)

    @given(valid_vertices(), st.integers(-40, 40))
    def test_shift_invariance(self, v, t):
        assert canonical_profile(v) == canonical_profile(v.shift(t))

    @given(valid_vertices())
    def test_entries_multiset_shift_invariant(self, v):
        anchored = v
        while not is_anchored(anchored):
            anchored = anchored.shift(1)
        assert sorted(profile_of(anchored)) == sorted(canonical_profile(v))


def test_render_profile():
    assert render_profile((-8, 4, -6, 2)) == "(-8,4,-6,2)"

"""The involution: worked examples, exhaustive properties, the
reconstructed inverse against a brute-force preimage oracle, and random
large-n probes."""

from collections import Counter

import pytest
from hypothesis import given, settings

from partinv import (
    OrbitClass,
    PreconditionError,
    aux_r,
    aux_s,
    enumerate_all,
    format_partition,
    is_nonoverlapping,
    orbit_class,
    parse,
    sigma,
    sigma_inverse,
    stat_x,
    stat_y,
)
from oracles import preimage_map, set_partitions

FORWARD_EXAMPLES = [
    ("3/4/7/852/961", "6/7/852/9431"),
    ("2/431", "3/421"),
    ("3/4/652/7/981", "652/7/98431"),
    ("2/3/4/51", "54321"),
]


class TestExamples:
    @pytest.mark.parametrize("source, image", FORWARD_EXAMPLES)
    def test_forward(self, source, image):
        assert format_partition(sigma(parse(source))) == image

    @pytest.mark.parametrize("source, image", FORWARD_EXAMPLES)
    def test_backward(self, source, image):
        assert format_partition(sigma(parse(image))) == source

    def test_fixed_point(self):
        assert sigma(parse("21")) == parse("21")

    def test_inverse_examples(self):
        assert format_partition(sigma_inverse(parse("6/7/852/9431"))) == "3/4/7/852/961"
        assert format_partition(sigma_inverse(parse("54321"))) == "2/3/4/51"
        assert format_partition(sigma_inverse(parse("321"))) == "2/31"

    def test_inverse_rejects_non_upper_input(self):
        with pytest.raises(PreconditionError):
            sigma_inverse(parse("2/431"))   # X < Y
        with pytest.raises(PreconditionError):
            sigma_inverse(parse("21"))      # X = Y

    def test_orbit_class(self):
        assert orbit_class(parse("21")) is OrbitClass.FIXED
        assert orbit_class(parse("3/4/7/852/961")) is OrbitClass.LOWER
        assert orbit_class(parse("6/7/852/9431")) is OrbitClass.UPPER

    def test_orbit_class_values(self):
        assert OrbitClass.FIXED.value == "fixed"
        assert OrbitClass.LOWER.value == "lower"
        assert OrbitClass.UPPER.value == "upper"


def _span_multiset(p):
    return Counter((b[-1], b[0]) for b in p.blocks if len(b) > 1)


def test_everything_small_fixed():
    for n in (1, 2):
        for p in enumerate_all(n):
            assert sigma(p) == p
            assert stat_x(p) == stat_y(p)


def test_exhaustive_properties():
    """One fused sweep over P_n, n <= 8: involution, interchange, fixed
    points, span multiset, the nonoverlapping predicate, and which shape
    each forward case produces."""
    for n in range(1, 9):
        for p in enumerate_all(n):
            x, y = stat_x(p), stat_y(p)
            q = sigma(p)
            assert (stat_x(q), stat_y(q)) == (y, x)
            assert sigma(q) == p
            assert (q == p) == (x == y)
            assert _span_multiset(q) == _span_multiset(p)
            assert is_nonoverlapping(q) == is_nonoverlapping(p)
            if x < y:
                if aux_r(p) > aux_s(p):
                    assert len(q.blocks[0]) == 1
                else:
                    assert len(q.blocks[0]) > 1


def test_inverse_matches_brute_force_preimages():
    """sigma_inverse agrees with the unique preimage found by forward
    search, for every X > Y partition, n <= 6."""
    for n in range(1, 7):
        preimages = preimage_map(n)
        uppers = [p for p in enumerate_all(n) if stat_x(p) > stat_y(p)]
        assert set(preimages) == set(uppers)
        for q in uppers:
            assert len(preimages[q]) == 1
            assert sigma_inverse(q) == preimages[q][0]


@settings(max_examples=250)
@given(set_partitions(max_n=40))
def test_random_large_partitions(p):
    x, y = stat_x(p), stat_y(p)
    q = sigma(p)
    q.validate()
    assert (stat_x(q), stat_y(q)) == (y, x)
    assert sigma(q) == p
    assert _span_multiset(q) == _span_multiset(p)
    assert is_nonoverlapping(q) == is_nonoverlapping(p)

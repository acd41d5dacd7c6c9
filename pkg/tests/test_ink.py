import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from inktok import (
    IntegerInk,
    InvalidInk,
    InvalidParams,
    Overflow,
    QuantizationParams,
    RawInk,
    dequantize,
    quantize,
)
from conftest import strokes_strategy
from oracles import round_half_away


def test_strokes_are_frozen():
    ink = RawInk([[(0.0, 0.0), (1.5, -2.5)]])
    with pytest.raises(ValueError):
        ink.strokes[0][0, 0] = 99.0


def test_point_count_and_len():
    ink = RawInk([[(0, 0)], [(1, 1), (2, 2), (3, 3)]])
    assert len(ink) == 2
    assert ink.point_count == 4


def test_to_lists_round_trip():
    strokes = [[[0.5, -1.25]], [[3.0, 4.0], [5.0, 6.0]]]
    assert RawInk(strokes).to_lists() == strokes


def test_empty_ink_is_allowed_but_empty_stroke_is_not():
    assert len(RawInk([])) == 0
    with pytest.raises(InvalidInk):
        RawInk([[]])
    with pytest.raises(InvalidInk):
        IntegerInk([[(0, 0)], []])


def test_nonfinite_coordinates_rejected():
    with pytest.raises(InvalidInk):
        RawInk([[(0.0, float("nan"))]])
    with pytest.raises(InvalidInk):
        RawInk([[(float("inf"), 0.0)]])


def test_integer_ink_rejects_fractional_values():
    assert IntegerInk([[(2.0, -3.0)]]).to_lists() == [[[2, -3]]]
    with pytest.raises(InvalidInk):
        IntegerInk([[(0.5, 0.0)]])


def test_integer_ink_32bit_bounds():
    lo, hi = -(2**31), 2**31 - 1
    ok = IntegerInk([[(lo, hi)]])
    assert ok.to_lists() == [[[lo, hi]]]
    with pytest.raises(Overflow):
        IntegerInk([[(hi + 1, 0)]])
    with pytest.raises(Overflow):
        IntegerInk([[(0, lo - 1)]])


def test_equality_is_by_value():
    a = RawInk([[(1.0, 2.0)]])
    b = RawInk([[(1.0, 2.0)]])
    c = RawInk([[(1.0, 2.5)]])
    assert a == b and a != c
    assert IntegerInk([[(1, 2)]]) == IntegerInk([[(1, 2)]])
    assert a != IntegerInk([[(1, 2)]])


def test_quantization_params_validation():
    with pytest.raises(InvalidParams):
        QuantizationParams(0.0)
    with pytest.raises(InvalidParams):
        QuantizationParams(-8.0)
    with pytest.raises(InvalidParams):
        QuantizationParams(float("nan"))


def test_rounding_is_half_away_from_zero():
    """-4.1 at delta 8 scales to -0.5125 and must land in cell -1, not 0."""
    ink = RawInk([[(-4.1, 4.1), (4.0, -4.0), (12.0, -12.0)]])
    grid = quantize(ink, QuantizationParams(8.0))
    assert grid.to_lists() == [[[-1, 1], [1, -1], [2, -2]]]


def test_quantize_delta_one_is_identity_on_integers():
    ink = RawInk([[(3.0, -7.0), (0.0, 2.0)]])
    grid = quantize(ink, QuantizationParams(1.0))
    assert grid.to_lists() == [[[3, -7], [0, 2]]]


def test_quantize_overflow():
    ink = RawInk([[(2.0**40, 0.0)]])
    with pytest.raises(Overflow):
        quantize(ink, QuantizationParams(1.0))
    # a large delta brings the same ink back in range
    grid = quantize(ink, QuantizationParams(2.0**20))
    assert grid.to_lists() == [[[2**20, 0]]]


@given(
    st.lists(
        st.lists(
            st.tuples(
                st.floats(-1e6, 1e6, allow_nan=False),
                st.floats(-1e6, 1e6, allow_nan=False),
            ),
            min_size=1,
            max_size=8,
        ),
        min_size=1,
        max_size=4,
    ),
    st.sampled_from([0.25, 1.0, 2.0, 8.0, 12.5]),
)
def test_quantize_matches_scalar_oracle(strokes, delta):
    grid = quantize(RawInk(strokes), QuantizationParams(delta))
    expect = [[[round_half_away(x, delta), round_half_away(y, delta)] for x, y in s] for s in strokes]
    assert grid.to_lists() == expect


@given(
    st.lists(
        st.lists(
            st.tuples(
                st.floats(-1e6, 1e6, allow_nan=False),
                st.floats(-1e6, 1e6, allow_nan=False),
            ),
            min_size=1,
            max_size=8,
        ),
        min_size=1,
        max_size=4,
    ),
    st.sampled_from([0.25, 1.0, 8.0]),
)
def test_quantization_error_bounded_by_half_delta(strokes, delta):
    ink = RawInk(strokes)
    back = dequantize(quantize(ink, QuantizationParams(delta)), QuantizationParams(delta))
    for orig, rec in zip(ink.strokes, back.strokes):
        assert np.max(np.abs(orig - rec)) <= delta / 2 + 1e-9


@given(strokes_strategy())
def test_dequantize_quantize_identity_on_grid(strokes):
    """Grid-valued ink survives a delta-1 round trip exactly."""
    grid = IntegerInk(strokes)
    params = QuantizationParams(1.0)
    again = quantize(dequantize(grid, params), params)
    assert again == grid

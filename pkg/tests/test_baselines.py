import pytest
from hypothesis import given
from hypothesis import strategies as st

from inktok import (
    UNKNOWN_TOKEN,
    UP_TOKEN,
    IntegerInk,
    InvalidInk,
    InvalidToken,
    abs_decode,
    abs_encode,
    point3_decode,
    point3_encode,
    point5_decode,
    point5_encode,
    rel_decode,
    rel_encode,
    text_decode,
    text_encode,
)
from conftest import strokes_strategy

SP = " "


def origin_of(ink):
    return tuple(ink.strokes[0][0].tolist())


# -- Reference row goldens ----


def test_point3_reference_row(reference_ink):
    assert point3_encode(reference_ink) == [(1, 0, 1), (1, 1, 0), (2, -2, 1)]


def test_point5_reference_row(reference_ink):
    assert point5_encode(reference_ink) == [
        (1, 0, 1, 0, 0),
        (1, 1, 0, 1, 0),
        (2, -2, 0, 0, 1),
    ]


def test_abs_reference_row(reference_ink):
    assert abs_encode(reference_ink) == [(0, 0), (1, 0), UP_TOKEN, (2, 1), (4, -1), UP_TOKEN]


def test_rel_reference_row(reference_ink):
    assert rel_encode(reference_ink) == [(1, 0), UP_TOKEN, (1, 1), (2, -2), UP_TOKEN]


def test_text_reference_row(reference_ink):
    assert text_encode(reference_ink) == [
        "1", SP, "0", UP_TOKEN,
        "1", SP, "1", SP, "2", SP, "-", "2", UP_TOKEN,
    ]


# -- point3 ------------------------------------------------------------------


def test_point3_single_segment():
    assert point3_encode(IntegerInk([[(0, 0), (1, 0)]])) == [(1, 0, 1)]


def test_point3_one_point_stroke_encodes_nothing():
    assert point3_encode(IntegerInk([[(5, 5)]])) == []


def test_point3_empty_ink_rejected():
    with pytest.raises(InvalidInk):
        point3_encode(IntegerInk([]))
    with pytest.raises(InvalidInk):
        point5_encode(IntegerInk([]))


def test_point3_decode_empty_is_a_dot_at_origin():
    assert point3_decode([], origin=(3, -4)).to_lists() == [[[3, -4]]]


def test_point3_decode_accumulates():
    rows = [(1, 0, 0), (1, 0, 1)]
    assert point3_decode(rows, origin=(0, 0)).to_lists() == [[[0, 0], [1, 0], [2, 0]]]


def test_point3_decode_reference_row(reference_ink):
    rows = point3_encode(reference_ink)
    assert point3_decode(rows, origin=(0, 0)) == reference_ink


def test_point3_rejects_malformed_rows():
    with pytest.raises(InvalidToken):
        point3_decode([(1, 0)])


@given(strokes_strategy(min_points=2, max_points=6).filter(lambda s: len(s[0]) >= 2))
def test_point3_round_trip_when_first_stroke_draws(strokes):
    """The origin's own stroke break is not representable, so the property
    holds for inks whose first stroke has a transition."""
    ink = IntegerInk(strokes)
    assert point3_decode(point3_encode(ink), origin_of(ink)) == ink


# -- point5 ------------------------------------------------------------------


def test_point5_single_segment_carries_final_flag():
    assert point5_encode(IntegerInk([[(0, 0), (1, 0)]])) == [(1, 0, 0, 0, 1)]


def test_point5_flags_are_one_hot_and_final():
    ink = IntegerInk([[(0, 0), (2, 0)], [(5, 5)], [(6, 6), (7, 7)]])
    rows = point5_encode(ink)
    for dx, dy, p1, p2, p3 in rows[:-1]:
        assert (p1, p2, p3).count(1) == 1 and p3 == 0
    assert rows[-1][2:] == (0, 0, 1)


def test_point5_decode_reference_row(reference_ink):
    rows = point5_encode(reference_ink)
    assert point5_decode(rows, origin=(0, 0)) == reference_ink


def test_point5_rejects_malformed_rows():
    with pytest.raises(InvalidToken):
        point5_decode([(1, 0, 1)])


@given(strokes_strategy(min_points=2, max_points=6).filter(lambda s: len(s[-1]) >= 2))
def test_point5_round_trip_when_last_stroke_draws(strokes):
    """The final row's p3 masks the pen state, so a one-point last stroke
    cannot carry its in-air flag; everything else round-trips."""
    ink = IntegerInk(strokes)
    assert point5_decode(point5_encode(ink), origin_of(ink)) == ink


# -- abs ---------------------------------------------------------------------


def test_abs_vocabulary_maps_unseen_to_unknown(reference_ink):
    vocab = {(0, 0), (1, 0), (2, 1)}
    tokens = abs_encode(reference_ink, vocab)
    assert tokens == [(0, 0), (1, 0), UP_TOKEN, (2, 1), UNKNOWN_TOKEN, UP_TOKEN]


def test_abs_decode_skips_unknown():
    tokens = [(0, 0), UNKNOWN_TOKEN, (2, 2), UP_TOKEN]
    assert abs_decode(tokens).to_lists() == [[[0, 0], [2, 2]]]


def test_abs_decode_rejects_malformed():
    with pytest.raises(InvalidToken):
        abs_decode([(1, 2, 3)])


@given(strokes_strategy(max_points=6))
def test_abs_round_trip(strokes):
    ink = IntegerInk(strokes)
    assert abs_decode(abs_encode(ink)) == ink


# -- rel ---------------------------------------------------------------------


def test_rel_unknown_decodes_as_zero_displacement():
    tokens = [(1, 0), UNKNOWN_TOKEN, (0, 1), UP_TOKEN]
    assert rel_decode(tokens, origin=(0, 0)).to_lists() == [[[0, 0], [1, 0], [1, 0], [1, 1]]]


def test_rel_vocabulary_maps_unseen_offset_to_unknown(reference_ink):
    vocab = {(1, 0), (1, 1)}
    assert rel_encode(reference_ink, vocab) == [(1, 0), UP_TOKEN, (1, 1), UNKNOWN_TOKEN, UP_TOKEN]


def test_rel_decode_empty_is_empty():
    assert len(rel_decode([])) == 0


def test_rel_up_before_any_offset_is_a_one_point_stroke():
    assert rel_decode([UP_TOKEN], origin=(2, 2)).to_lists() == [[[2, 2]]]


@given(strokes_strategy(max_points=6))
def test_rel_round_trip(strokes):
    ink = IntegerInk(strokes)
    assert rel_decode(rel_encode(ink), origin_of(ink)) == ink


# -- text --------------------------------------------------------------------


def test_text_multidigit_offsets():
    ink = IntegerInk([[(0, 0), (12, -3)]])
    assert text_encode(ink) == ["1", "2", SP, "-", "3", UP_TOKEN]


def test_text_odd_number_count_drops_the_trailing_number():
    tokens = ["1", SP, "0", SP, "5", UP_TOKEN]
    assert text_decode(tokens, origin=(0, 0)).to_lists() == [[[0, 0], [1, 0]]]


def test_text_unparseable_run_is_dropped():
    # the lone "-" fails to parse, leaving [1, 2, 3]; the odd count then
    # drops the trailing 3
    tokens = ["1", SP, "-", SP, "2", SP, "3", UP_TOKEN]
    assert text_decode(tokens, origin=(0, 0)).to_lists() == [[[0, 0], [1, 2]]]


def test_text_empty_span_skipped():
    assert text_decode([UP_TOKEN, UP_TOKEN, "1", SP, "1", UP_TOKEN]).to_lists() == [
        [[0, 0]],
        [[1, 1]],
    ]


@given(strokes_strategy(max_points=6))
def test_text_round_trip(strokes):
    ink = IntegerInk(strokes)
    assert text_decode(text_encode(ink), origin_of(ink)) == ink


@given(st.lists(st.sampled_from("0123456789-") | st.sampled_from([SP, UP_TOKEN]), max_size=64))
def test_text_decode_is_total(tokens):
    text_decode(tokens)


@given(
    st.lists(
        st.one_of(
            st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
            st.sampled_from([UP_TOKEN, UNKNOWN_TOKEN]),
        ),
        max_size=64,
    )
)
def test_rel_decode_is_total(tokens):
    rel_decode(tokens)


# -- telescoping -------------------------------------------------------------


@given(strokes_strategy(max_points=6))
def test_offsets_telescope_to_net_displacement(strokes):
    """Summed offsets of every offset encoding equal last point - first point."""
    ink = IntegerInk(strokes)
    first = ink.strokes[0][0]
    last = ink.strokes[-1][-1]
    net = (int(last[0] - first[0]), int(last[1] - first[1]))

    p3 = point3_encode(ink)
    assert (sum(r[0] for r in p3), sum(r[1] for r in p3)) == net
    p5 = point5_encode(ink)
    assert (sum(r[0] for r in p5), sum(r[1] for r in p5)) == net
    rel = [t for t in rel_encode(ink) if t != UP_TOKEN]
    assert (sum(t[0] for t in rel), sum(t[1] for t in rel)) == net

    nums = []
    run = ""
    for t in text_encode(ink):
        if t in "0123456789-":
            run += t
        else:
            if run:
                nums.append(int(run))
            run = ""
    if run:
        nums.append(int(run))
    assert (sum(nums[0::2]), sum(nums[1::2])) == net

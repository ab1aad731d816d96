import pytest

from tspread.borel import borel_gens, phi_shift
from tspread.classify import (
    CASE_LABELS,
    ClassificationResult,
    classify_closed_form,
    classify_intro_variant,
    matches_start_pattern,
)
from tspread.errors import InvalidInput, Unsupported
from tspread.harness import enumerate_spread_words
from tspread.ideal import is_freiman_direct
from tspread.monomial import SpreadWord


def W(*indices, t):
    return SpreadWord(indices, t)


@pytest.mark.parametrize(
    "u, verdict, label",
    [
        (W(5, t=3), True, "d=1"),
        (W(2, 4, 6, t=2), True, "special1"),
        (W(2, 4, 7, t=2), True, "special2"),
        (W(2, 4, 8, t=2), False, "end-1"),
        (W(3, 5, 9, t=2), False, "end-2"),
        (W(3, 4, t=1), False, "deg2-a"),
        (W(2, 9, t=1), True, "deg2-a"),
        (W(3, 5, t=2), True, "deg2-b"),
        (W(3, 6, t=2), False, "deg2-b"),
        (W(4, 7, t=3), False, "deg2-b"),
        (W(1, 3, 9, t=2), True, "lemma-simple"),
        (W(1, 4, 7, t=2), True, "start-2-i"),
        (W(1, 5, 7, t=2), True, "start-2-i"),
        (W(1, 3, 4, 5, t=1), True, "start-1-ii"),
        (W(1, 3, 9, t=1), True, "start-1-i"),
        (W(1, 4, 5, t=1), False, "phi-reduction"),
    ],
)
def test_closed_form_cases(u, verdict, label):
    res = classify_closed_form(u)
    assert (res.verdict, res.case_label) == (verdict, label)
    assert res.verdict == is_freiman_direct(borel_gens(u)).is_freiman


def test_x1x2x4_reduction_example():
    u = W(1, 2, 4, t=1)
    res = classify_closed_form(u)
    assert res.verdict is True
    assert res.verdict == classify_closed_form(W(1, 3, t=1)).verdict
    # i_1, i_2 are minimal, so the complete-graph family decides before phi
    assert res.case_label == "lemma-simple"
    assert classify_closed_form(W(1, 3, 4, 6, t=1)).reductions == 1


def test_errors():
    with pytest.raises(Unsupported):
        classify_closed_form(W(1, 1, t=0))
    with pytest.raises(Unsupported):
        classify_intro_variant(W(2, 2, t=0))
    with pytest.raises(InvalidInput):
        classify_closed_form((1, 3))
    with pytest.raises(InvalidInput):
        ClassificationResult(True, "no-such-case")
    with pytest.raises(InvalidInput):
        ClassificationResult(True, "d=1", -1)


def test_intro_variant_examples():
    assert classify_intro_variant(W(3, 4, t=1)).verdict is True
    assert classify_intro_variant(W(5, t=3)).verdict is True
    assert classify_intro_variant(W(3, 5, 9, t=2)).verdict is False


def test_start_pattern_requires_i1_equal_one():
    assert matches_start_pattern(W(2, 3, 4, t=1)) is None
    assert matches_start_pattern(W(1, 3, t=1)) is None


def test_every_label_is_in_vocabulary():
    for t in (1, 2, 3):
        for d in range(1, 6):
            for u in enumerate_spread_words(d, t, (d - 1) * t + 4):
                assert classify_closed_form(u).case_label in CASE_LABELS
                assert classify_intro_variant(u).case_label in CASE_LABELS


def test_phi_soundness():
    for t in (1, 2, 3):
        for d in (4, 5):
            for u in enumerate_spread_words(d, t, (d - 1) * t + 5):
                if u.indices[0] == 1:
                    assert classify_closed_form(u).verdict == classify_closed_form(phi_shift(u)).verdict


def test_freiman_transport_under_phi():
    for t in (1, 2):
        for d in (2, 3, 4):
            for u in enumerate_spread_words(d, t, (d - 1) * t + 5):
                if u.indices[0] == 1:
                    a = is_freiman_direct(borel_gens(u)).is_freiman
                    b = is_freiman_direct(borel_gens(phi_shift(u))).is_freiman
                    assert a == b


def test_unconstrained_last_index_in_start_case_i():
    # i_{d-1} = (d-2)t + 2 with head minimal: Freiman for every admissible i_d
    for t in (1, 2, 3):
        for d in (3, 4):
            head = tuple((j - 1) * t + 1 for j in range(1, d - 1)) + ((d - 2) * t + 2,)
            for last in range(head[-1] + t, head[-1] + t + 8):
                u = SpreadWord(head + (last,), t)
                assert is_freiman_direct(borel_gens(u)).is_freiman
                assert classify_closed_form(u).verdict

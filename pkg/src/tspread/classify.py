"""Closed-form Freiman classification of B_t(u) for t >= 1.

``classify_closed_form`` follows the proved case chain: degree one, degree
two, i_1 >= 3, i_1 = 2, and for i_1 = 1 either the complete-graph family or
repeated reduction by ``phi_shift``.  ``classify_intro_variant`` applies the
summary theorem literally; it exists only to report where the summary and the
ground truth part ways.
"""

from __future__ import annotations

from dataclasses import dataclass

from .borel import phi_shift
from .errors import InvalidInput, Unsupported
from .monomial import SpreadWord

__all__ = [
    "ClassificationResult",
    "CASE_LABELS",
    "CLOSED_FORM_LABELS",
    "INTRO_LABELS",
    "classify_closed_form",
    "classify_intro_variant",
    "matches_start_pattern",
]

CLOSED_FORM_LABELS = (
    "d=1",
    "deg2-a",
    "deg2-b",
    "lemma-simple",
    "special1",
    "special2",
    "end-1",
    "end-2",
    "start-1-i",
    "start-1-ii",
    "start-2-i",
    "start-2-ii",
    "phi-reduction",
)
INTRO_LABELS = ("intro-1", "intro-2", "intro-3", "intro-4", "intro-5", "intro-6")
CASE_LABELS = CLOSED_FORM_LABELS + INTRO_LABELS


@dataclass(frozen=True)
class ClassificationResult:
    verdict: bool
    case_label: str
    reductions: int = 0

    def __post_init__(self) -> None:
        if self.case_label not in CASE_LABELS:
            raise InvalidInput(f"unknown case label {self.case_label!r}")
        if self.reductions < 0:
            raise InvalidInput("reductions must be nonnegative")


def _check(u: SpreadWord) -> None:
    if not isinstance(u, SpreadWord):
        raise InvalidInput(f"expected a SpreadWord, got {type(u).__name__}")
    if u.t < 1:
        raise Unsupported("the classification covers t >= 1 only")


def _minimal(j: int, t: int) -> int:
    # smallest possible j-th index (1-based) of a t-spread word
    return (j - 1) * t + 1


def _is_special1(idx: tuple[int, ...], t: int) -> bool:
    return all(i == _minimal(j, t) + 1 for j, i in enumerate(idx, start=1))


def _is_special2(idx: tuple[int, ...], t: int) -> bool:
    d = len(idx)
    return _is_special1(idx[:-1], t) and idx[-1] == _minimal(d, t) + 2


def _head_minimal(idx: tuple[int, ...], t: int, upto: int) -> bool:
    return all(idx[j - 1] == _minimal(j, t) for j in range(1, upto + 1))


def _degree_two(i1: int, i2: int, t: int) -> bool:
    if t == 1:
        return i1 <= 2
    return i1 <= 2 or (i1 == 3 and i2 == t + 3)


def matches_start_pattern(u: SpreadWord) -> str | None:
    """Which subcase ("i" or "ii") of the i_1 = 1 theorem u matches, if any."""
    idx, t, d = u.indices, u.t, u.degree
    if d < 3 or idx[0] != 1:
        return None
    head = _head_minimal(idx, t, d - 2)
    if head and idx[d - 2] in (_minimal(d - 1, t), _minimal(d - 1, t) + 1):
        return "i"
    if t >= 2 and head and idx[d - 2] == _minimal(d - 1, t) + 2 and idx[d - 1] == _minimal(d, t) + 2:
        return "i"
    for p in range(1, d - 2):
        if (
            _head_minimal(idx, t, p)
            and all(idx[j - 1] == _minimal(j, t) + 1 for j in range(p + 1, d))
            and idx[d - 1] in (_minimal(d, t) + 1, _minimal(d, t) + 2)
        ):
            return "ii"
    return None


def _decide(u: SpreadWord) -> tuple[bool, str, int]:
    idx, t, d = u.indices, u.t, u.degree
    if d == 1:
        return True, "d=1", 0
    if d == 2:
        return _degree_two(idx[0], idx[1], t), ("deg2-a" if t == 1 else "deg2-b"), 0
    if idx[0] >= 3:
        return False, "end-2", 0
    if idx[0] == 2:
        if _is_special1(idx, t):
            return True, "special1", 0
        if _is_special2(idx, t):
            return True, "special2", 0
        return False, "end-1", 0
    if _head_minimal(idx, t, d - 1):
        return True, "lemma-simple", 0
    verdict, _, n = _decide(phi_shift(u))
    return verdict, "phi-reduction", n + 1


def classify_closed_form(u: SpreadWord) -> ClassificationResult:
    _check(u)
    verdict, label, reductions = _decide(u)
    if label == "phi-reduction":
        sub = matches_start_pattern(u)
        if sub is not None:
            label = f"start-{1 if u.t == 1 else 2}-{sub}"
    return ClassificationResult(verdict, label, reductions)


def classify_intro_variant(u: SpreadWord) -> ClassificationResult:
    _check(u)
    idx, t, d = u.indices, u.t, u.degree
    if d == 1:
        return ClassificationResult(True, "intro-1")
    if d == 2:
        i1, i2 = idx
        return ClassificationResult(i1 <= 2 or (i1 == 3 and i2 == t + 3), "intro-2")
    if idx[0] == 1:
        return ClassificationResult(
            matches_start_pattern(u) is not None, "intro-3" if t == 1 else "intro-4"
        )
    if idx[0] == 2:
        return ClassificationResult(_is_special1(idx, t) or _is_special2(idx, t), "intro-5")
    return ClassificationResult(False, "intro-6")

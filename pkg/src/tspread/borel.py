"""Generators of t-spread principal Borel ideals B_t(u)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InvalidInput
from .monomial import Monomial, SpreadWord, sort_indices

__all__ = [
    "GeneratorSet",
    "borel_gens",
    "borel_gens_direct",
    "is_sortable",
    "phi_shift",
]


@dataclass(frozen=True)
class GeneratorSet:
    """Minimal generating set of an equigenerated monomial ideal.

    Members share one degree, so none divides another and the set is its own
    minimal generating set.  Iteration yields members in descending lex order.
    """

    degree: int
    generators: frozenset[Monomial]
    t: Optional[int] = None

    def __post_init__(self) -> None:
        gens = frozenset(self.generators)
        object.__setattr__(self, "generators", gens)
        bad = [g for g in gens if g.degree != self.degree]
        if bad:
            raise InvalidInput(f"generators of wrong degree (expected {self.degree}): {bad}")

    @classmethod
    def of(cls, monomials: Iterable[Monomial], t: Optional[int] = None) -> GeneratorSet:
        gens = frozenset(monomials)
        if not gens:
            raise InvalidInput("cannot infer the degree of an empty generator set")
        degree = next(iter(gens)).degree
        return cls(degree, gens, t)

    def ordered(self) -> list[Monomial]:
        return sorted(self.generators, key=lambda m: m.lex_key)

    def index_tuples(self) -> set[tuple[int, ...]]:
        return {g.indices for g in self.generators}

    @property
    def num_variables(self) -> int:
        return max((max(g.indices) for g in self.generators if g.indices), default=0)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.ordered())

    def __contains__(self, m: object) -> bool:
        return m in self.generators


def _exchange_moves(word: tuple[int, ...], t: int) -> Iterator[tuple[int, ...]]:
    """All words x_i * (word / x_j) with i < j, j in the support, t-spread."""
    for pos, j in enumerate(word):
        if pos > 0 and word[pos - 1] == j:
            continue
        rest = word[:pos] + word[pos + 1:]
        for i in range(1, j):
            cand = tuple(sorted(rest + (i,)))
            if all(b - a >= t for a, b in zip(cand, cand[1:])):
                yield cand


def borel_gens(u: SpreadWord) -> GeneratorSet:
    """Close {u} under t-spread exchange moves (breadth first)."""
    if not isinstance(u, SpreadWord):
        raise InvalidInput(f"expected a SpreadWord, got {type(u).__name__}")
    start = u.indices
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in _exchange_moves(w, u.t):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return GeneratorSet(u.degree, frozenset(Monomial(w) for w in seen), u.t)


def borel_gens_direct(u: SpreadWord) -> GeneratorSet:
    """All t-spread words of degree d bounded componentwise by u."""
    if not isinstance(u, SpreadWord):
        raise InvalidInput(f"expected a SpreadWord, got {type(u).__name__}")
    bound, t, d = u.indices, u.t, u.degree
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        k = len(prefix)
        if k == d:
            out.append(prefix)
            return
        lo = prefix[-1] + t if prefix else 1
        for j in range(max(lo, 1), bound[k] + 1):
            extend(prefix + (j,))

    extend(())
    return GeneratorSet(d, frozenset(Monomial(w) for w in out), t)


def is_sortable(gens: GeneratorSet) -> bool:
    keys = gens.index_tuples()
    ordered = sorted(keys)
    for n, a in enumerate(ordered):
        for b in ordered[n + 1:]:
            p, q = sort_indices(a, b)
            if p not in keys or q not in keys:
                return False
    return True


def phi_shift(u: SpreadWord) -> SpreadWord:
    """Drop the leading x1 and shift the remaining indices down by t."""
    if u.degree < 2:
        raise InvalidInput("phi_shift needs degree at least 2")
    if u.indices[0] != 1:
        raise InvalidInput(f"phi_shift needs i_1 = 1, got {u.indices}")
    return SpreadWord(tuple(i - u.t for i in u.indices[1:]), u.t)

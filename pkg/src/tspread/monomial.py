"""Monomials in x_1, x_2, ... and the sorting operator.

A monomial is stored as its weakly ascending index sequence, so that
x1^2*x3 is ``(1, 1, 3)``.  That tuple is a canonical key: two monomials are
equal exactly when their exponent maps are equal.  For monomials of equal
degree, ascending order of these tuples is *descending* lex order (with
x1 > x2 > ...), which is why ``Monomial.lex_key`` is just the tuple.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput

__all__ = [
    "Monomial",
    "SpreadWord",
    "is_t_spread",
    "product",
    "lex_compare",
    "sort_pair",
    "is_sorted_pair",
    "parse_monomial",
]

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        idx = tuple(self.indices)
        if any(not isinstance(i, int) or i < 1 for i in idx):
            raise InvalidInput(f"variable indices must be positive integers: {idx}")
        if any(a > b for a, b in zip(idx, idx[1:])):
            idx = tuple(sorted(idx))
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> Monomial:
        idx: list[int] = []
        for var, e in sorted(exponents.items()):
            if e < 0:
                raise InvalidInput(f"negative exponent for x{var}")
            idx.extend([var] * e)
        return cls(tuple(idx))

    @property
    def exponents(self) -> dict[int, int]:
        """Sparse exponent map; zero multiplicities never appear."""
        return dict(Counter(self.indices))

    @property
    def degree(self) -> int:
        return len(self.indices)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.indices)

    @property
    def lex_key(self) -> tuple[int, ...]:
        return self.indices

    def exponent_vector(self, n: int) -> list[int]:
        vec = [0] * n
        for i in self.indices:
            vec[i - 1] += 1
        return vec

    def __mul__(self, other: Monomial) -> Monomial:
        return product(self, other)

    def __str__(self) -> str:
        if not self.indices:
            return "1"
        parts = []
        for var, e in sorted(Counter(self.indices).items()):
            parts.append(f"x{var}" if e == 1 else f"x{var}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


def parse_monomial(text: str) -> Monomial:
    """Parse ``"x1*x3^2"``-style text.  ``"1"`` is the unit monomial."""
    text = text.strip()
    if text == "1":
        return Monomial()
    if not text:
        raise InvalidInput("empty monomial text")
    idx: list[int] = []
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if m is None:
            raise InvalidInput(f"cannot parse factor {factor!r} in {text!r}")
        var = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if var < 1:
            raise InvalidInput(f"variable index must be positive in {text!r}")
        if e < 1:
            raise InvalidInput(f"exponent must be positive in {text!r}")
        idx.extend([var] * e)
    return Monomial(tuple(sorted(idx)))


def is_t_spread(indices: Sequence[int], t: int) -> bool:
    if len(indices) == 0:
        raise InvalidInput("index sequence must be nonempty")
    if t < 0:
        raise InvalidInput(f"t must be nonnegative, got {t}")
    if any(b < a for a, b in zip(indices, indices[1:])):
        raise InvalidInput(f"indices must be weakly ascending: {tuple(indices)}")
    return all(b - a >= t for a, b in zip(indices, indices[1:]))


@dataclass(frozen=True)
class SpreadWord:
    """A t-spread monomial x_{i_1}...x_{i_d}, kept with its spread parameter."""

    indices: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        if self.t < 0:
            raise InvalidInput(f"t must be nonnegative, got {self.t}")
        if any(i < 1 for i in idx):
            raise InvalidInput(f"indices must be positive: {idx}")
        if not is_t_spread(idx, self.t):
            raise InvalidInput(f"{idx} is not {self.t}-spread")

    @classmethod
    def from_monomial(cls, u: Monomial, t: int) -> SpreadWord:
        return cls(u.indices, t)

    @property
    def degree(self) -> int:
        return len(self.indices)

    def to_monomial(self) -> Monomial:
        return Monomial(self.indices)

    def __str__(self) -> str:
        return str(self.to_monomial())


def _check_same_degree(u: Monomial, v: Monomial) -> None:
    if u.degree != v.degree:
        raise InvalidInput(f"degrees differ: {u} has {u.degree}, {v} has {v.degree}")


def product(u: Monomial, v: Monomial) -> Monomial:
    return Monomial(tuple(sorted(u.indices + v.indices)))


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Return 1, 0 or -1 as u is lex greater, equal or smaller than v.

    Exponent vectors are read from x1 upward; a larger exponent on the first
    differing variable wins.
    """
    _check_same_degree(u, v)
    eu, ev = u.exponents, v.exponents
    for var in sorted(set(eu) | set(ev)):
        a, b = eu.get(var, 0), ev.get(var, 0)
        if a != b:
            return 1 if a > b else -1
    return 0


def sort_indices(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sorting operator on raw index tuples (hot path for sweeps)."""
    merged = sorted(a + b)
    return tuple(merged[0::2]), tuple(merged[1::2])


def sort_pair(u: Monomial, v: Monomial) -> tuple[Monomial, Monomial]:
    _check_same_degree(u, v)
    a, b = sort_indices(u.indices, v.indices)
    return Monomial(a), Monomial(b)


def is_sorted_pair(u: Monomial, v: Monomial) -> bool:
    _check_same_degree(u, v)
    a, b = sort_indices(u.indices, v.indices)
    return (a == u.indices and b == v.indices) or (a == v.indices and b == u.indices)


def monomials(texts: Iterable[str]) -> list[Monomial]:
    return [parse_monomial(s) for s in texts]

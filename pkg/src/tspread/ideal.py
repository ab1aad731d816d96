"""Generator counts of powers, analytic spread, and the direct Freiman test."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .borel import GeneratorSet
from .errors import InvalidInput
from .monomial import Monomial

__all__ = [
    "FreimanVerdict",
    "power_gens",
    "mu",
    "integer_rank",
    "analytic_spread",
    "freiman_bound",
    "is_freiman_direct",
    "predicted_mu_power",
]


@dataclass(frozen=True)
class FreimanVerdict:
    mu: int
    ell: int
    mu2: int
    bound: int
    is_freiman: bool

    def __post_init__(self) -> None:
        if not 1 <= self.ell <= self.mu:
            raise InvalidInput(f"need 1 <= ell <= mu, got ell={self.ell}, mu={self.mu}")
        if self.mu2 < self.bound:
            raise AssertionError(
                f"mu(I^2)={self.mu2} is below the Freiman bound {self.bound}"
            )


def _power_keys(gens: GeneratorSet, k: int) -> set[tuple[int, ...]]:
    if k < 1:
        raise InvalidInput(f"power must be positive, got {k}")
    base = sorted(gens.index_tuples())
    current = set(base)
    for _ in range(k - 1):
        current = {tuple(sorted(p + g)) for p in current for g in base}
    return current


def power_gens(gens: GeneratorSet, k: int) -> GeneratorSet:
    """Distinct k-fold products of generators.

    In one degree divisibility forces equality, so these are exactly the
    minimal generators of I^k.  Built as G^{k-1} * G over the deduplicated
    (k-1)-st power, which is the same set as all k-multisets of G.
    """
    keys = _power_keys(gens, k)
    return GeneratorSet(gens.degree * k, frozenset(Monomial(w) for w in keys), gens.t)


def mu_power(gens: GeneratorSet, k: int) -> int:
    return len(_power_keys(gens, k))


def mu(gens: GeneratorSet) -> int:
    if len(gens) == 0:
        raise InvalidInput("empty generator set")
    return len(gens)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            row, prow = m[r], m[rank]
            for c in range(col, ncols):
                # exact: Bareiss guarantees divisibility by the previous pivot
                row[c] = (p * row[c] - a * prow[c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def analytic_spread(gens: GeneratorSet) -> int:
    """Rank of the exponent matrix (one row per generator)."""
    if len(gens) == 0:
        raise InvalidInput("empty generator set")
    n = gens.num_variables
    return integer_rank([g.exponent_vector(n) for g in gens.ordered()])


def freiman_bound(mu: int, ell: int) -> int:
    if mu < 1 or ell < 1 or ell > mu:
        raise InvalidInput(f"need 1 <= ell <= mu, got mu={mu}, ell={ell}")
    return ell * mu - comb(ell, 2)


def is_freiman_direct(gens: GeneratorSet) -> FreimanVerdict:
    m = mu(gens)
    ell = analytic_spread(gens)
    mu2 = mu_power(gens, 2)
    bound = freiman_bound(m, ell)
    return FreimanVerdict(mu=m, ell=ell, mu2=mu2, bound=bound, is_freiman=mu2 == bound)


def predicted_mu_power(mu: int, ell: int, k: int) -> int:
    """mu(I^k) for a Freiman ideal, read off the Hilbert function of a
    Cohen-Macaulay algebra of dimension ell with h-vector (1, mu - ell)."""
    if mu < 1 or ell < 1 or ell > mu:
        raise InvalidInput(f"need 1 <= ell <= mu, got mu={mu}, ell={ell}")
    if k < 1:
        raise InvalidInput(f"power must be positive, got {k}")
    return comb(ell - 1 + k, ell - 1) + (mu - ell) * comb(ell - 2 + k, ell - 1)

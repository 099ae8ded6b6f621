"""Sparse exact Laurent polynomials over the weight lattice.

Monomials x^v are indexed by integer exponent vectors of length m+n,
slot i standing for the formal exponential of eps_i.  The Verma
character numerator of a Borel b at shifted parameter lam is

    x^(lam - rho_b + rho) * prod over gamma in the odd positive system
    of b of (1 + x^(-gamma)),

with rho the Weyl vector of the empty partition.  Multiplying out the
mn binomial factors and cancelling the Borel-independent even
denominator turns character identities into finite polynomial ones; the
fixed x^rho normalization keeps all exponents integral for integral
input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .borels import Partition, odd_positive_roots, rho_b
from .weights import Rank, Weight, rho

__all__ = [
    "LaurentPoly",
    "monomial",
    "one",
    "verma_numerator",
    "characters_equal_iff",
]


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial; zero coefficients are never stored."""

    rank: Rank
    terms: Mapping[tuple[int, ...], int]

    def __post_init__(self) -> None:
        cleaned = {}
        for exp, coeff in self.terms.items():
            if len(exp) != self.rank.dim:
                raise ValueError(f"exponent {exp} has wrong length for rank {self.rank}")
            if coeff != 0:
                cleaned[tuple(int(e) for e in exp)] = int(coeff)
        object.__setattr__(self, "terms", cleaned)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return LaurentPoly(self.rank, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return LaurentPoly(self.rank, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exp), 0)

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def render(self) -> str:
        """Sorted 'coeff * x1^a1 ...' lines for golden comparisons."""
        lines = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp]
            factors = " ".join(f"x{i+1}^{e}" for i, e in enumerate(exp) if e != 0)
            lines.append(f"{coeff} * {factors}" if factors else str(coeff))
        return "\n".join(lines) + "\n"

    def _check(self, other: "LaurentPoly") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")


def one(rank: Rank) -> LaurentPoly:
    return LaurentPoly(rank, {(0,) * rank.dim: 1})


def _exponent(w: Weight) -> tuple[int, ...]:
    if any(c.denominator != 1 for c in w.coeffs):
        raise ValueError(f"non-integral exponent {w.coeffs}")
    return tuple(int(c) for c in w.coeffs)


def monomial(w: Weight) -> LaurentPoly:
    """x^w for an integral weight w."""
    return LaurentPoly(w.rank, {_exponent(w): 1})


@lru_cache(maxsize=None)
def _odd_factor_product(p: Partition) -> LaurentPoly:
    """Product of (1 + x^-gamma) over the odd positive system of p."""
    rank = p.rank
    poly = one(rank)
    for signed in odd_positive_roots(p):
        poly = poly * (one(rank) + monomial(-signed.weight(rank)))
    return poly


def verma_numerator(p: Partition, lam: Weight) -> LaurentPoly:
    """Character numerator of the Verma with shifted parameter lam at p.

    lam - rho_b(p) must be integral.  Equal parameters lam produce equal
    numerators for every Borel, and the coefficient at lam - rho_b + rho
    (the normalized highest exponent) is 1.
    """
    rank = p.rank
    base = lam - rho_b(p) + rho(rank)
    return monomial(base) * _odd_factor_product(p)


def characters_equal_iff(p: Partition, lam: Weight, p2: Partition, lam2: Weight) -> bool:
    """Whether the Vermas with highest weights lam at p and lam2 at p2 share a character.

    Computed on the numerators; asserted equivalent to the weight
    identity lam + rho_b(p) == lam2 + rho_b(p2).
    """
    num = verma_numerator(p, lam + rho_b(p))
    num2 = verma_numerator(p2, lam2 + rho_b(p2))
    equal = num == num2
    identity = (lam + rho_b(p)) == (lam2 + rho_b(p2))
    if equal != identity:
        raise AssertionError(
            f"character equality ({equal}) disagrees with the weight identity "
            f"({identity}) for {p.rows}/{lam.coeffs} vs {p2.rows}/{lam2.coeffs}"
        )
    return equal

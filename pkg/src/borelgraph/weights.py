"""Exact weight arithmetic on the Cartan dual of gl(m|n).

A weight is a coefficient vector over the basis eps_1..eps_m,
delta_1..delta_n, with delta_j stored in slot m+j.  The bilinear form is
+1 on the eps block and -1 on the delta block, so every odd root
eps_p - delta_q is isotropic.  All arithmetic uses Fraction; nothing in
this module ever rounds.

Conventions used throughout the package:

* the "raw tuple" of a weight u is (u, eps_1), ..., (u, eps_{m+n}); on
  the delta block this negates the coefficient;
* the tuple encoding of a highest weight lam is the raw tuple of
  lam + rho, where rho is the Weyl vector of the one-row Borel labelled
  by the empty partition;
* antidominant means both blocks of the tuple are weakly increasing,
  dominant means both are weakly decreasing.  The delta block direction
  matches the box labelling of the lattice figures (delta indices count
  rectangle columns from the right; see borelgraph.borels.box_to_root).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Rank",
    "Weight",
    "TupleWeight",
    "OddRoot",
    "bilinear_form",
    "ber",
    "rho_zero",
    "rho_one_distinguished",
    "rho",
    "tuple_encode",
    "tuple_decode",
    "is_integral",
    "is_antidominant",
    "is_dominant",
    "is_regular",
    "is_antidominant_shifted",
    "is_dominant_shifted",
    "is_regular_shifted",
    "atypicality",
    "atypicality_entries",
    "parse_weight",
    "format_weight",
]


@dataclass(frozen=True)
class Rank:
    """Block sizes (m, n) of gl(m|n)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"rank needs m >= 1 and n >= 1, got ({self.m}, {self.n})")

    @property
    def dim(self) -> int:
        return self.m + self.n


class OddRoot(NamedTuple):
    """Unordered odd root class {eps_p - delta_q, delta_q - eps_p}."""

    p: int
    q: int


def _fractions(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Weight:
    """Element of h* with exact rational coefficients over eps/delta."""

    rank: Rank
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = _fractions(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.rank.dim:
            raise ValueError(
                f"expected {self.rank.dim} coefficients, got {len(coeffs)}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(self.rank, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(self.rank, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(self.rank, tuple(-a for a in self.coeffs))

    def scaled(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(self.rank, tuple(c * a for a in self.coeffs))

    def raw_tuple(self) -> tuple[Fraction, ...]:
        """Pairings (self, eps_i) for i = 1..m+n; negates the delta block."""
        m = self.rank.m
        return tuple(c if i < m else -c for i, c in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    @staticmethod
    def zero(rank: Rank) -> "Weight":
        return Weight(rank, (Fraction(0),) * rank.dim)

    @staticmethod
    def eps(rank: Rank, p: int) -> "Weight":
        if not 1 <= p <= rank.m:
            raise ValueError(f"eps index {p} out of range 1..{rank.m}")
        coeffs = [Fraction(0)] * rank.dim
        coeffs[p - 1] = Fraction(1)
        return Weight(rank, tuple(coeffs))

    @staticmethod
    def delta(rank: Rank, q: int) -> "Weight":
        if not 1 <= q <= rank.n:
            raise ValueError(f"delta index {q} out of range 1..{rank.n}")
        coeffs = [Fraction(0)] * rank.dim
        coeffs[rank.m + q - 1] = Fraction(1)
        return Weight(rank, tuple(coeffs))

    @staticmethod
    def from_raw_tuple(rank: Rank, entries: Sequence) -> "Weight":
        """Inverse of raw_tuple: undo the delta-block negation."""
        entries = _fractions(entries)
        if len(entries) != rank.dim:
            raise ValueError(f"expected {rank.dim} entries, got {len(entries)}")
        m = rank.m
        return Weight(rank, tuple(e if i < m else -e for i, e in enumerate(entries)))

    @staticmethod
    def odd_root(rank: Rank, root: OddRoot, eps_first: bool = True) -> "Weight":
        w = Weight.eps(rank, root.p) - Weight.delta(rank, root.q)
        return w if eps_first else -w


@dataclass(frozen=True)
class TupleWeight:
    """Tuple encoding of a highest weight: entry i is (lam + rho, eps_i)."""

    rank: Rank
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        entries = _fractions(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rank.dim:
            raise ValueError(f"expected {self.rank.dim} entries, got {len(entries)}")

    def eps_block(self) -> tuple[Fraction, ...]:
        return self.entries[: self.rank.m]

    def delta_block(self) -> tuple[Fraction, ...]:
        return self.entries[self.rank.m :]


def bilinear_form(u: Weight, v: Weight) -> Fraction:
    """Symmetric form with (eps_i, eps_i) = 1 and (delta_j, delta_j) = -1."""
    u._check_rank(v)
    m = u.rank.m
    total = Fraction(0)
    for i, (a, b) in enumerate(zip(u.coeffs, v.coeffs)):
        total += a * b if i < m else -a * b
    return total


def ber(rank: Rank) -> Weight:
    """The weight eps_1+...+eps_m - (delta_1+...+delta_n), orthogonal to all roots."""
    return Weight(rank, (Fraction(1),) * rank.m + (Fraction(-1),) * rank.n)


def rho_zero(rank: Rank) -> Weight:
    """Half-sum of the standard even positive roots."""
    m, n = rank.m, rank.n
    eps_part = [Fraction(m + 1 - 2 * i, 2) for i in range(1, m + 1)]
    delta_part = [Fraction(n + 1 - 2 * j, 2) for j in range(1, n + 1)]
    return Weight(rank, tuple(eps_part + delta_part))


def rho_one_distinguished(rank: Rank) -> Weight:
    """Half-sum of all eps_p - delta_q, the odd positive system of the empty partition."""
    m, n = rank.m, rank.n
    return Weight(rank, (Fraction(n, 2),) * m + (Fraction(-m, 2),) * n)


@lru_cache(maxsize=None)
def rho(rank: Rank) -> Weight:
    """Integral Weyl vector of the distinguished Borel.

    rho = rho_zero - rho_one_distinguished - (m+n-1)/2 * ber; the three
    half-integral pieces always combine to an integral vector, which is
    asserted here because every tuple encoding depends on it.
    """
    w = (
        rho_zero(rank)
        - rho_one_distinguished(rank)
        - ber(rank).scaled(Fraction(rank.m + rank.n - 1, 2))
    )
    if any(c.denominator != 1 for c in w.coeffs):
        raise AssertionError(f"non-integral Weyl vector {w.coeffs} for rank {rank}")
    return w


def tuple_encode(lam: Weight) -> TupleWeight:
    """Tuple encoding t_i = (lam + rho, eps_i)."""
    shifted = lam + rho(lam.rank)
    return TupleWeight(lam.rank, shifted.raw_tuple())


def tuple_decode(t: TupleWeight) -> Weight:
    """Inverse of tuple_encode."""
    return Weight.from_raw_tuple(t.rank, t.entries) - rho(t.rank)


# Entry-level predicates.  These operate on plain sequences so that the
# verification sweeps can stay on small integer tuples.

def _weakly_increasing(block: Sequence) -> bool:
    return all(a <= b for a, b in zip(block, block[1:]))


def _weakly_decreasing(block: Sequence) -> bool:
    return all(a >= b for a, b in zip(block, block[1:]))


def is_integral_entries(entries: Sequence[Fraction]) -> bool:
    return all(Fraction(e).denominator == 1 for e in entries)


def is_antidominant_entries(entries: Sequence, m: int) -> bool:
    return _weakly_increasing(entries[:m]) and _weakly_increasing(entries[m:])


def is_dominant_entries(entries: Sequence, m: int) -> bool:
    return _weakly_decreasing(entries[:m]) and _weakly_decreasing(entries[m:])


def is_regular_entries(entries: Sequence, m: int) -> bool:
    eps, delta = entries[:m], entries[m:]
    return len(set(eps)) == len(eps) and len(set(delta)) == len(delta)


def is_integral(lam: Weight) -> bool:
    """True when lam is an integer combination of eps's and delta's."""
    return is_integral_entries(lam.coeffs)


def is_antidominant(lam: Weight) -> bool:
    t = tuple_encode(lam)
    return is_antidominant_entries(t.entries, lam.rank.m)


def is_dominant(lam: Weight) -> bool:
    t = tuple_encode(lam)
    return is_dominant_entries(t.entries, lam.rank.m)


def is_regular(lam: Weight) -> bool:
    """Entries pairwise distinct within each block (cross-block ties allowed)."""
    t = tuple_encode(lam)
    return is_regular_entries(t.entries, lam.rank.m)


def is_antidominant_shifted(nu: Weight) -> bool:
    """Same predicate on the raw pairings of an already-shifted parameter."""
    return is_antidominant_entries(nu.raw_tuple(), nu.rank.m)


def is_dominant_shifted(nu: Weight) -> bool:
    return is_dominant_entries(nu.raw_tuple(), nu.rank.m)


def is_regular_shifted(nu: Weight) -> bool:
    return is_regular_entries(nu.raw_tuple(), nu.rank.m)


def atypicality_entries(entries: Sequence, m: int, n: int) -> int:
    """Maximum matching between eps and delta slots holding equal entries.

    Odd roots eps_p - delta_q and eps_p' - delta_q' are orthogonal exactly
    when p != p' and q != q', so a maximal set of mutually orthogonal roots
    annihilating the parameter is a maximal matching of the equality graph.
    """
    match_of_col = [-1] * n

    def augment(p: int, seen: list[bool]) -> bool:
        for q in range(n):
            if entries[p] == entries[m + q] and not seen[q]:
                seen[q] = True
                if match_of_col[q] < 0 or augment(match_of_col[q], seen):
                    match_of_col[q] = p
                    return True
        return False

    size = 0
    for p in range(m):
        if augment(p, [False] * n):
            size += 1
    return size


def atypicality(nu: Weight) -> int:
    """Atypicality of a shifted parameter nu (the caller supplies lam + rho^b)."""
    return atypicality_entries(nu.raw_tuple(), nu.rank.m, nu.rank.n)


def parse_weight(text: str, rank: Rank) -> Weight:
    """Parse "a_1,..,a_m|b_1,..,b_n" with exact rationals like 3/2."""
    parts = text.split("|")
    if len(parts) != 2:
        raise ValueError(f"expected one '|' separator in weight {text!r}")
    try:
        eps = [Fraction(s.strip()) for s in parts[0].split(",")] if parts[0].strip() else []
        delta = [Fraction(s.strip()) for s in parts[1].split(",")] if parts[1].strip() else []
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational in weight {text!r}: {exc}") from None
    if len(eps) != rank.m or len(delta) != rank.n:
        raise ValueError(
            f"weight {text!r} has block sizes ({len(eps)},{len(delta)}), "
            f"expected ({rank.m},{rank.n})"
        )
    return Weight(rank, tuple(eps + delta))


def format_weight(values: Sequence[Fraction], m: int) -> str:
    return ",".join(str(v) for v in values[:m]) + "|" + ",".join(str(v) for v in values[m:])

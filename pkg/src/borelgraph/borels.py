"""Borel subalgebras of gl(m|n) with the standard even part.

Each such Borel is labelled by a partition inside the m x n rectangle.
A box has coordinates (col, row) with col counted from the left
(1..n) and row indexing the weakly decreasing row list (1..m, longest
row first).  The odd root attached to a box is

    box (i, j)  <->  eps_{m+1-j} - delta_{n+1-i},

the unique assignment (among the eight dihedral relabellings of the
rectangle) compatible with the edge labels of the colored Young lattice
produced by :mod:`borelgraph.lattice`.  Under it the delta indices count
columns from the right; the weight predicates in
:mod:`borelgraph.weights` follow the same convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .weights import (
    OddRoot,
    Rank,
    Weight,
    ber,
    bilinear_form,
    rho_zero,
)

__all__ = [
    "Box",
    "Partition",
    "SignedOddRoot",
    "EpsDeltaSequence",
    "box_to_root",
    "root_to_box",
    "all_partitions",
    "partition_to_sequence",
    "sequence_to_partition",
    "odd_positive_roots",
    "simple_odd_roots",
    "rho_b",
    "odd_reflection",
    "monotone_walk",
    "transport_verma",
    "transport_simple",
    "transport_simple_trace",
    "pairing_with_root",
]


class Box(NamedTuple):
    """Rectangle cell: col from the left (1..n), row into the sorted row list (1..m)."""

    col: int
    row: int

    def text(self) -> str:
        return f"({self.col},{self.row})"


@dataclass(frozen=True)
class SignedOddRoot:
    """An odd root class with a chosen orientation."""

    root: OddRoot
    eps_first: bool

    def weight(self, rank: Rank) -> Weight:
        return Weight.odd_root(rank, self.root, self.eps_first)

    def text(self) -> str:
        p, q = self.root
        return f"eps{p}-delta{q}" if self.eps_first else f"delta{q}-eps{p}"


@dataclass(frozen=True)
class Partition:
    """Young diagram inside the m x n rectangle; canonical Borel label."""

    rank: Rank
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        if any(r < 0 for r in rows):
            raise ValueError(f"negative row in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows not weakly decreasing: {rows}")
        if len(rows) > self.rank.m or (rows and rows[0] > self.rank.n):
            raise ValueError(f"partition {rows} does not fit in {self.rank.m}x{self.rank.n}")

    def row_length(self, j: int) -> int:
        return self.rows[j - 1] if 1 <= j <= len(self.rows) else 0

    def size(self) -> int:
        return sum(self.rows)

    def contains(self, box: Box) -> bool:
        return 1 <= box.row <= self.rank.m and 1 <= box.col <= self.row_length(box.row)

    def boxes(self) -> Iterator[Box]:
        for j, r in enumerate(self.rows, start=1):
            for i in range(1, r + 1):
                yield Box(i, j)

    def addable_boxes(self) -> list[Box]:
        out = []
        for j in range(1, self.rank.m + 1):
            i = self.row_length(j) + 1
            if i <= self.rank.n and (j == 1 or self.row_length(j - 1) >= i):
                out.append(Box(i, j))
        return out

    def removable_boxes(self) -> list[Box]:
        out = []
        for j in range(1, len(self.rows) + 1):
            i = self.row_length(j)
            if i > 0 and self.row_length(j + 1) < i:
                out.append(Box(i, j))
        return out

    def toggle(self, box: Box) -> "Partition":
        """Add or remove one box; raises if the result is not a partition."""
        rows = list(self.rows) + [0] * (self.rank.m - len(self.rows))
        if self.contains(box):
            if box.col != self.row_length(box.row):
                raise ValueError(f"box {box} is not removable from {self.rows}")
            rows[box.row - 1] -= 1
        else:
            if box.col != self.row_length(box.row) + 1:
                raise ValueError(f"box {box} is not addable to {self.rows}")
            rows[box.row - 1] += 1
        return Partition(self.rank, tuple(rows))

    def is_full(self) -> bool:
        return self.rows == (self.rank.n,) * self.rank.m

    def text(self) -> str:
        return ",".join(str(r) for r in self.rows) if self.rows else "()"

    @staticmethod
    def parse(text: str, rank: Rank) -> "Partition":
        text = text.strip()
        if text in ("()", ""):
            return Partition(rank, ())
        try:
            rows = tuple(int(s.strip()) for s in text.split(","))
        except ValueError:
            raise ValueError(f"bad partition text {text!r}") from None
        return Partition(rank, rows)

    @staticmethod
    def empty(rank: Rank) -> "Partition":
        return Partition(rank, ())

    @staticmethod
    def full(rank: Rank) -> "Partition":
        return Partition(rank, (rank.n,) * rank.m)


def box_to_root(box: Box, rank: Rank) -> OddRoot:
    """Odd root class of a box: (p, q) = (m+1-row, n+1-col)."""
    if not (1 <= box.col <= rank.n and 1 <= box.row <= rank.m):
        raise ValueError(f"box {box} outside the {rank.m}x{rank.n} rectangle")
    return OddRoot(rank.m + 1 - box.row, rank.n + 1 - box.col)


def root_to_box(root: OddRoot, rank: Rank) -> Box:
    if not (1 <= root.p <= rank.m and 1 <= root.q <= rank.n):
        raise ValueError(f"root {root} outside rank {rank}")
    return Box(rank.n + 1 - root.q, rank.m + 1 - root.p)


@lru_cache(maxsize=None)
def all_partitions(rank: Rank) -> tuple[Partition, ...]:
    """All partitions in the rectangle, in lexicographic row order."""
    rows_list: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], limit: int) -> None:
        rows_list.append(prefix)
        if len(prefix) == rank.m:
            return
        for r in range(1, limit + 1):
            grow(prefix + (r,), r)

    grow((), rank.n)
    return tuple(Partition(rank, rows) for rows in sorted(rows_list))


@dataclass(frozen=True)
class EpsDeltaSequence:
    """Word over {eps, delta} with m eps letters and n delta letters.

    Letters are tagged in display order (eps_1..eps_m, delta_1..delta_n
    each increasing along the word); this is a derived view of the
    partition label, and its delta tags deliberately run opposite to the
    root labelling of boxes.
    """

    rank: Rank
    word: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        eps = [idx for kind, idx in self.word if kind == "eps"]
        delta = [idx for kind, idx in self.word if kind == "delta"]
        if len(self.word) != self.rank.dim or {k for k, _ in self.word} - {"eps", "delta"}:
            raise ValueError(f"malformed word {self.word}")
        if eps != list(range(1, self.rank.m + 1)) or delta != list(range(1, self.rank.n + 1)):
            raise ValueError(f"letter tags must increase within each class: {self.word}")

    def shape(self) -> str:
        return "".join("e" if kind == "eps" else "d" for kind, _ in self.word)

    def text(self) -> str:
        return " ".join(f"{kind[0]}{idx}" for kind, idx in self.word)

    def shuffle(self) -> tuple[int, ...]:
        """One-line permutation w with w(1)<..<w(m) and w(m+1)<..<w(m+n).

        w(k) is the word position (1-based) of eps_k for k <= m and of
        delta_{k-m} for k > m.
        """
        pos = [0] * self.rank.dim
        for where, (kind, idx) in enumerate(self.word, start=1):
            slot = idx - 1 if kind == "eps" else self.rank.m + idx - 1
            pos[slot] = where
        return tuple(pos)

    @staticmethod
    def from_shape(shape: str, rank: Rank) -> "EpsDeltaSequence":
        word = []
        e = d = 0
        for ch in shape:
            if ch == "e":
                e += 1
                word.append(("eps", e))
            elif ch == "d":
                d += 1
                word.append(("delta", d))
            else:
                raise ValueError(f"bad letter {ch!r} in shape {shape!r}")
        return EpsDeltaSequence(rank, tuple(word))


def partition_to_sequence(p: Partition) -> EpsDeltaSequence:
    """Bijection partitions -> eps/delta words; () maps to e..ed..d."""
    m, n = p.rank.m, p.rank.n
    # eps_k is preceded by row_length(m+1-k) delta letters.
    counts = [p.row_length(m + 1 - k) for k in range(1, m + 1)]
    shape = []
    emitted = 0
    for c in counts:
        shape.append("d" * (c - emitted))
        shape.append("e")
        emitted = c
    shape.append("d" * (n - emitted))
    return EpsDeltaSequence.from_shape("".join(shape), p.rank)


def sequence_to_partition(seq: EpsDeltaSequence) -> Partition:
    m = seq.rank.m
    counts = []
    seen_delta = 0
    for kind, _ in seq.word:
        if kind == "delta":
            seen_delta += 1
        else:
            counts.append(seen_delta)
    rows = tuple(counts[m - j] for j in range(1, m + 1))
    return Partition(seq.rank, rows)


def odd_positive_roots(p: Partition) -> list[SignedOddRoot]:
    """The mn odd roots oriented positively for this Borel.

    A box outside the partition contributes its eps-first orientation, a
    box inside the delta-first one.
    """
    rank = p.rank
    out = []
    for row in range(1, rank.m + 1):
        for col in range(1, rank.n + 1):
            box = Box(col, row)
            out.append(SignedOddRoot(box_to_root(box, rank), eps_first=not p.contains(box)))
    return out


def simple_odd_roots(p: Partition) -> list[SignedOddRoot]:
    """Odd simple roots: one per addable or removable box, source-positive."""
    rank = p.rank
    out = [SignedOddRoot(box_to_root(b, rank), True) for b in p.addable_boxes()]
    out += [SignedOddRoot(box_to_root(b, rank), False) for b in p.removable_boxes()]
    return out


@lru_cache(maxsize=None)
def rho_b(p: Partition) -> Weight:
    """Weyl vector of the Borel labelled by p; always integral."""
    rank = p.rank
    half_sum = Weight.zero(rank)
    for signed in odd_positive_roots(p):
        half_sum = half_sum + signed.weight(rank)
    w = (
        rho_zero(rank)
        - half_sum.scaled(Fraction(1, 2))
        - ber(rank).scaled(Fraction(rank.dim - 1, 2))
    )
    if any(c.denominator != 1 for c in w.coeffs):
        raise AssertionError(f"non-integral Weyl vector for partition {p.rows}")
    return w


def odd_reflection(p: Partition, box: Box) -> tuple[Partition, SignedOddRoot]:
    """Toggle one box; returns the new Borel and the reflected root.

    The root is oriented positively for the source Borel, so
    rho_b(new) = rho_b(p) + root.weight() holds on the nose.
    """
    adding = not p.contains(box)
    new = p.toggle(box)
    return new, SignedOddRoot(box_to_root(box, p.rank), eps_first=adding)


def monotone_walk(p: Partition) -> list[Box]:
    """Column-major box additions from the empty partition to p."""
    walk = []
    for col in range(1, p.rank.n + 1):
        for row in range(1, p.rank.m + 1):
            if p.row_length(row) >= col:
                walk.append(Box(col, row))
    return walk


def _check_walk(start: Partition, walk: Sequence[Box]) -> list[Partition]:
    current = start
    trail = [current]
    for box in walk:
        current = current.toggle(box)
        trail.append(current)
    return trail


def transport_verma(nu: Weight, start: Partition, walk: Sequence[Box]) -> Weight:
    """Shifted Verma parameters are Borel-independent: the identity map.

    Provided for symmetry with transport_simple; still validates the walk.
    """
    _check_walk(start, walk)
    return nu


def transport_simple_trace(
    nu: Weight, start: Partition, walk: Sequence[Box]
) -> list[Weight]:
    """Shifted parameter of one simple module along a walk, step by step.

    Crossing an edge whose source-positive root alpha pairs to zero with
    the current parameter replaces nu by nu + alpha (both raw-tuple slots
    of the root move by +1, or -1 when a box is removed); otherwise the
    parameter is unchanged.
    """
    rank = start.rank
    entries = list(nu.raw_tuple())
    current = start
    trace = [nu]
    for box in walk:
        adding = not current.contains(box)
        root = box_to_root(box, rank)
        a, b = root.p - 1, rank.m + root.q - 1
        if entries[a] == entries[b]:
            step = 1 if adding else -1
            entries[a] += step
            entries[b] += step
        current = current.toggle(box)
        trace.append(Weight.from_raw_tuple(rank, entries))
    return trace


def transport_simple(nu: Weight, start: Partition, walk: Sequence[Box]) -> Weight:
    return transport_simple_trace(nu, start, walk)[-1]


def pairing_with_root(nu: Weight, root: OddRoot) -> Fraction:
    """(nu, eps_p - delta_q) computed on raw pairings."""
    raw = nu.raw_tuple()
    return raw[root.p - 1] - raw[nu.rank.m + root.q - 1]

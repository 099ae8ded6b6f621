"""Verification sweeps tying weights, Borels, graphs and characters together.

Every suite exhaustively checks one structural law over a box of integral
shifted parameters and returns a :class:`VerificationReport`.  Sweeps are
normalized modulo the uniform shift by the Berezinian weight (which moves
every raw-tuple entry by the same constant and changes nothing checked
here), so representatives have minimum entry 0 and entries in
[0, 2*bound].  Graph-level assertions are deduplicated by the surviving
color set, since the contraction depends on the parameter only through
its equality pattern.

The suites:

* ``farthest``      -- the full-rectangle class is the unique vertex
                       geodesically maximal over the empty-partition class;
* ``rainbow``       -- walks are rainbow exactly when they are shortest,
                       and rainbow endpoints depend only on the color set;
* ``pair``          -- for antidominant parameters the two distinguished
                       classes form the unique mutually-unique maximal
                       pair, and a bridge isolates the empty-partition
                       class;
* ``census``        -- exploratory count of mutually-unique maximal pairs
                       over all parameters (no assertion outside the
                       antidominant case);
* ``typicality``    -- atypicality zero iff the contraction is a point;
* ``bridges``       -- every bridge side contains a geodesically maximal
                       vertex for each fixed vertex on the other side;
* ``rho``           -- reflection law, simple-root orthogonality and
                       integrality of the per-Borel Weyl vectors;
* ``characters``    -- Verma numerators are Borel-independent with top
                       coefficient one, and equal iff the shifted weights
                       agree;
* ``transport``     -- highest-weight transport agrees along all shortest
                       walks and preserves antidominance stepwise
                       (regularity loss is counted, not asserted: it does
                       occur, see the transport suite notes);
* ``disconnected``  -- diagram criterion and path-for-every-Borel agree on
                       regular dominant parameters; regular antidominant
                       parameters are totally disconnected; for n = 1
                       every parameter is.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Sequence

from .borels import (
    Box,
    Partition,
    all_partitions,
    box_to_root,
    monotone_walk,
    rho_b,
)
from .characters import verma_numerator
from .lattice import (
    ColoredGraph,
    build_lattice,
    bridges,
    contract_colors,
    audit_rainbow_shortest,
    distances,
    geodesically_maximal,
    is_path_graph,
    mutually_unique_maximal_pairs,
    rainbow_endpoint_map,
)
from .weights import (
    Rank,
    TupleWeight,
    Weight,
    atypicality,
    atypicality_entries,
    is_antidominant_entries,
    is_dominant_entries,
    is_integral,
    is_integral_entries,
    is_regular_entries,
    rho,
    tuple_encode,
)

__all__ = [
    "SweepConfig",
    "VerificationReport",
    "WeightDiagram",
    "weight_diagram",
    "diagram_to_tuple",
    "diagram_condition",
    "is_typical",
    "is_totally_disconnected",
    "defect_sweep",
    "sweep_tuples",
    "verify_unique_farthest",
    "verify_rainbow_walks",
    "verify_antidominant_pair",
    "survey_maximal_pairs",
    "verify_typicality",
    "verify_bridge_lemma",
    "verify_reflection_laws",
    "verify_character_identity",
    "verify_transport",
    "verify_disconnected",
    "SUITES",
    "run_all",
    "render_report_table",
]

JOBS_ENV = "BORELGRAPH_JOBS"
_VIOLATION_CAP = 20


@dataclass(frozen=True)
class SweepConfig:
    """Integral parameter box: raw-tuple entries in [-bound, bound].

    With mod_shift the sweep enumerates one representative per
    uniform-shift orbit (minimum entry 0, entries in [0, 2*bound]).
    """

    bound: int = 3
    mod_shift: bool = True


@dataclass
class VerificationReport:
    suite: str
    rank: tuple[int, int]
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def note(self, message: str) -> None:
        if len(self.violations) < _VIOLATION_CAP:
            self.violations.append(message)
        elif len(self.violations) == _VIOLATION_CAP:
            self.violations.append("... further violations suppressed")

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "rank": list(self.rank),
            "checked": self.checked,
            "violations": self.violations,
            "seconds": round(self.seconds, 3),
            "stats": {k: self.stats[k] for k in sorted(self.stats)},
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def render_report_table(reports: Sequence[VerificationReport]) -> str:
    header = f"{'suite':<14} {'rank':<8} {'checked':>9} {'violations':>11} {'seconds':>8}  status"
    lines = [header, "-" * len(header)]
    for r in reports:
        lines.append(
            f"{r.suite:<14} {str(r.rank):<8} {r.checked:>9} {len(r.violations):>11} "
            f"{r.seconds:>8.2f}  {'ok' if r.ok else 'FAIL'}"
        )
    return "\n".join(lines) + "\n"


def sweep_tuples(rank: Rank, cfg: SweepConfig) -> Iterator[tuple[int, ...]]:
    """Integral raw tuples of the sweep, deterministically ordered."""
    dim = rank.dim
    if cfg.mod_shift:
        top = 2 * cfg.bound
        for t in product(range(top + 1), repeat=dim):
            if min(t) == 0:
                yield t
    else:
        yield from product(range(-cfg.bound, cfg.bound + 1), repeat=dim)


# ---------------------------------------------------------------------------
# Weight diagrams and totally disconnected parameters


@dataclass(frozen=True)
class WeightDiagram:
    """Labelling of the integers by x, o, v; everything else is a wedge.

    x marks values taken only by the eps block, o only by the delta
    block, v by both.
    """

    labels: tuple[tuple[int, str], ...]

    def label(self, k: int) -> str:
        for pos, lab in self.labels:
            if pos == k:
                return lab
        return "^"

    def positions(self, lab: str) -> tuple[int, ...]:
        return tuple(pos for pos, l in self.labels if l == lab)

    def render(self) -> str:
        if not self.labels:
            return "(empty diagram)\n"
        lo = min(pos for pos, _ in self.labels) - 1
        hi = max(pos for pos, _ in self.labels) + 1
        nums = " ".join(f"{k:>3}" for k in range(lo, hi + 1))
        syms = " ".join(f"{self.label(k):>3}" for k in range(lo, hi + 1))
        return nums + "\n" + syms + "\n"


def weight_diagram(t: TupleWeight) -> WeightDiagram:
    """Diagram of a regular dominant integral tuple."""
    m = t.rank.m
    if not is_integral_entries(t.entries):
        raise ValueError("weight diagram needs an integral tuple")
    if not is_regular_entries(t.entries, m):
        raise ValueError("weight diagram needs a regular tuple")
    if not is_dominant_entries(t.entries, m):
        raise ValueError("weight diagram needs a dominant tuple")
    cross = {int(e) for e in t.entries[:m]}
    circle = {int(e) for e in t.entries[m:]}
    labels = [(k, "v") for k in cross & circle]
    labels += [(k, "x") for k in cross - circle]
    labels += [(k, "o") for k in circle - cross]
    return WeightDiagram(tuple(sorted(labels)))


def diagram_to_tuple(d: WeightDiagram, rank: Rank) -> TupleWeight:
    """Reconstruct the regular dominant tuple from its diagram."""
    eps = sorted(d.positions("x") + d.positions("v"), reverse=True)
    delta = sorted(d.positions("o") + d.positions("v"), reverse=True)
    if len(eps) != rank.m or len(delta) != rank.n:
        raise ValueError(f"diagram does not match rank {rank}")
    return TupleWeight(rank, tuple(Fraction(v) for v in eps + delta))


def diagram_condition_entries(entries: Sequence[int], m: int) -> bool:
    """At least one unlabelled integer strictly between consecutive v's."""
    cross = {int(e) for e in entries[:m]}
    circle = {int(e) for e in entries[m:]}
    vees = sorted(cross & circle)
    marked = cross | circle
    for a, b in zip(vees, vees[1:]):
        if all(z in marked for z in range(a + 1, b)):
            return False
    return True


def diagram_condition(t: TupleWeight) -> bool:
    weight_diagram(t)  # validates the precondition
    return diagram_condition_entries([int(e) for e in t.entries], t.rank.m)


def is_typical(nu: Weight) -> bool:
    """Atypicality zero; equivalently the contraction at nu is a point."""
    return atypicality(nu) == 0


_LATTICES: dict[Rank, ColoredGraph] = {}


def _lattice(rank: Rank) -> ColoredGraph:
    if rank not in _LATTICES:
        _LATTICES[rank] = build_lattice(rank)
    return _LATTICES[rank]


class _GraphCache:
    """Contractions of one lattice keyed by surviving-color bitmask.

    For a box at (col, row) the bit is (row-1)*n + (col-1); the bit is
    set when the box's root pairs to zero with the parameter tuple.
    """

    def __init__(self, rank: Rank):
        self.rank = rank
        self.lattice = _lattice(rank)
        self._graphs: dict[int, ColoredGraph] = {}
        m, n = rank.m, rank.n
        self._pairs = [
            (p - 1, m + q - 1, 1 << ((m - p) * n + (n - q)))
            for p in range(1, m + 1)
            for q in range(1, n + 1)
        ]
        self._colors = sorted(self.lattice.colorset)

    def mask_of(self, t: Sequence[int]) -> int:
        mask = 0
        for a, b, bit in self._pairs:
            if t[a] == t[b]:
                mask |= bit
        return mask

    def graph(self, mask: int) -> ColoredGraph:
        if mask not in self._graphs:
            n = self.rank.n
            kill = [
                box
                for box in self._colors
                if not mask & (1 << ((box.row - 1) * n + (box.col - 1)))
            ]
            self._graphs[mask] = contract_colors(self.lattice, kill)
        return self._graphs[mask]

    def graph_for(self, t: Sequence[int]) -> ColoredGraph:
        return self.graph(self.mask_of(t))


def _walk_steps(start: Partition, walk: Sequence[Box]) -> tuple[tuple[int, int, int], ...]:
    """Raw-tuple transport actions: (eps slot, delta slot, +-1) per edge."""
    rank = start.rank
    steps = []
    current = start
    for box in walk:
        adding = not current.contains(box)
        root = box_to_root(box, rank)
        steps.append((root.p - 1, rank.m + root.q - 1, 1 if adding else -1))
        current = current.toggle(box)
    return tuple(steps)


def _apply_steps(t: Sequence[int], steps) -> tuple[int, ...]:
    out = list(t)
    for a, b, s in steps:
        if out[a] == out[b]:
            out[a] += s
            out[b] += s
    return tuple(out)


_MONOTONE_STEPS: dict[Rank, dict[tuple[int, ...], tuple]] = {}


def _monotone_steps(rank: Rank) -> dict[tuple[int, ...], tuple]:
    if rank not in _MONOTONE_STEPS:
        _MONOTONE_STEPS[rank] = {
            p.rows: _walk_steps(Partition.empty(rank), monotone_walk(p))
            for p in all_partitions(rank)
        }
    return _MONOTONE_STEPS[rank]


def totally_disconnected_entries(t: Sequence[int], rank: Rank, cache: _GraphCache | None = None) -> bool:
    """Path test for the contraction at every Borel relabelling of t."""
    cache = cache or _GraphCache(rank)
    for steps in _monotone_steps(rank).values():
        relabelled = _apply_steps(t, steps)
        if not is_path_graph(cache.graph_for(relabelled)):
            return False
    return True


def is_totally_disconnected(lam: Weight) -> bool:
    """Whether every Borel relabelling of lam contracts to a path.

    lam is an integral highest weight; its relabellings are computed by
    transporting lam + rho along monotone walks from the empty partition.
    """
    if not is_integral(lam):
        raise ValueError("totally disconnected is defined for integral weights")
    t = tuple(int(e) for e in tuple_encode(lam).entries)
    return totally_disconnected_entries(t, lam.rank, _GraphCache(lam.rank))


def defect_sweep(rank: Rank, bound: int) -> int:
    """Maximum atypicality over shifted tuples with entries in [-bound, bound]."""
    m, n = rank.m, rank.n
    best = 0
    for t in sweep_tuples(rank, SweepConfig(bound=bound)):
        best = max(best, atypicality_entries(t, m, n))
        if best == min(m, n):
            break  # cannot exceed the defect
    return best


# ---------------------------------------------------------------------------
# Suites


def _timed(fn: Callable[[VerificationReport], None], suite: str, rank: Rank) -> VerificationReport:
    report = VerificationReport(suite=suite, rank=(rank.m, rank.n))
    start = time.perf_counter()
    fn(report)
    report.seconds = time.perf_counter() - start
    return report


def verify_unique_farthest(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Unique geodesically maximal vertex over the empty-partition class."""

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        full = Partition.full(rank).rows
        verdicts: dict[int, bool] = {}
        for t in sweep_tuples(rank, cfg):
            report.checked += 1
            mask = cache.mask_of(t)
            if mask not in verdicts:
                g = cache.graph(mask)
                maximal = geodesically_maximal(g, g.vertex_of(()))
                verdicts[mask] = maximal == frozenset({g.vertex_of(full)})
            if not verdicts[mask]:
                report.note(f"non-unique farthest vertex for tuple {t}")
        report.stats["distinct_graphs"] = len(verdicts)

    return _timed(run, "farthest", rank)


def verify_rainbow_walks(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Rainbow <=> shortest over all walks, endpoint determined by colors."""

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        verdicts: dict[int, str | None] = {}
        states = 0
        for t in sweep_tuples(rank, cfg):
            report.checked += 1
            mask = cache.mask_of(t)
            if mask not in verdicts:
                g = cache.graph(mask)
                problem = None
                try:
                    states += audit_rainbow_shortest(g)["rainbow_states"]
                    for a in g.vertices:
                        rainbow_endpoint_map(g, a)
                except AssertionError as exc:
                    problem = str(exc)
                verdicts[mask] = problem
            if verdicts[mask]:
                report.note(f"tuple {t}: {verdicts[mask]}")
        report.stats["distinct_graphs"] = len(verdicts)
        report.stats["rainbow_states"] = states

    return _timed(run, "rainbow", rank)


def _endpoint_pair_verdict(g: ColoredGraph) -> str | None:
    """None if fine; otherwise a description of the failure."""
    if g.n_vertices == 1:
        return None  # typical parameter: vacuous
    a, b = g.vertex_of(()), g.vertex_of(Partition.full(g.rank).rows)
    pairs = mutually_unique_maximal_pairs(g)
    if pairs != {frozenset({a, b})}:
        return f"maximal pairs {sorted(sorted(p) for p in pairs)} != the endpoint pair"
    if len(g.adj[a]) != 1:
        return "no bridge isolates the empty-partition class"
    return None


def verify_antidominant_pair(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Antidominant parameters: endpoint classes are the unique maximal pair.

    Also checks the bridge structure: for atypical antidominant
    parameters the empty-partition class is pendant, so its one edge is a
    bridge isolating it.
    """

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        verdicts: dict[int, str | None] = {}
        vacuous = 0
        for t in sweep_tuples(rank, cfg):
            if not is_antidominant_entries(t, rank.m):
                continue
            report.checked += 1
            mask = cache.mask_of(t)
            if mask not in verdicts:
                verdicts[mask] = _endpoint_pair_verdict(cache.graph(mask))
            if cache.graph(mask).n_vertices == 1:
                vacuous += 1
            if verdicts[mask]:
                report.note(f"antidominant tuple {t}: {verdicts[mask]}")
        report.stats["distinct_graphs"] = len(verdicts)
        report.stats["typical_vacuous"] = vacuous

    return _timed(run, "pair", rank)


def survey_maximal_pairs(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Census of mutually-unique maximal pairs over the whole sweep.

    Exploratory: whether a unique such pair forces the endpoint pair is
    only asserted for antidominant parameters; the rest is counted.
    """

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        kinds: dict[int, str] = {}
        counts = {"single_vertex": 0, "endpoint_pair": 0, "other_pair": 0, "no_unique_pair": 0}
        for t in sweep_tuples(rank, cfg):
            report.checked += 1
            mask = cache.mask_of(t)
            if mask not in kinds:
                g = cache.graph(mask)
                if g.n_vertices == 1:
                    kinds[mask] = "single_vertex"
                else:
                    pairs = mutually_unique_maximal_pairs(g)
                    endpoint = frozenset(
                        {g.vertex_of(()), g.vertex_of(Partition.full(rank).rows)}
                    )
                    if pairs == {endpoint}:
                        kinds[mask] = "endpoint_pair"
                    elif pairs:
                        kinds[mask] = "other_pair"
                    else:
                        kinds[mask] = "no_unique_pair"
            kind = kinds[mask]
            counts[kind] += 1
            if kind == "other_pair" and is_antidominant_entries(t, rank.m):
                report.note(f"antidominant tuple {t} has a non-endpoint maximal pair")
        report.stats.update(counts)
        report.stats["distinct_graphs"] = len(kinds)

    return _timed(run, "census", rank)


def verify_typicality(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Atypicality zero iff the contraction has a single vertex."""

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        seen: dict[int, bool] = {}
        for t in sweep_tuples(rank, cfg):
            report.checked += 1
            mask = cache.mask_of(t)
            if mask not in seen:
                aty = atypicality_entries(t, rank.m, rank.n)
                seen[mask] = (aty == 0) == (cache.graph(mask).n_vertices == 1)
            if not seen[mask]:
                report.note(f"tuple {t}: typicality and point-contraction disagree")
        report.stats["distinct_graphs"] = len(seen)

    return _timed(run, "typicality", rank)


def verify_bridge_lemma(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Across any bridge, each fixed vertex sees a maximal vertex beyond it."""

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        seen: dict[int, str | None] = {}
        for t in sweep_tuples(rank, cfg):
            report.checked += 1
            mask = cache.mask_of(t)
            if mask not in seen:
                seen[mask] = _bridge_lemma_verdict(cache.graph(mask))
            if seen[mask]:
                report.note(f"tuple {t}: {seen[mask]}")
        report.stats["distinct_graphs"] = len(seen)

    return _timed(run, "bridges", rank)


def _bridge_lemma_verdict(g: ColoredGraph) -> str | None:
    table = distances(g)
    for edge in bridges(g):
        u, v = sorted(edge)
        # components after deleting the bridge: vertices closer to u than to v
        side_u = {x for x in g.vertices if table[x][u] < table[x][v]}
        side_v = set(g.vertices) - side_u
        for c1 in sorted(side_u):
            maximal = geodesically_maximal(g, c1, table)
            if not maximal & side_v:
                return f"bridge {u}--{v}: no maximal vertex across it for {c1}"
        for c1 in sorted(side_v):
            maximal = geodesically_maximal(g, c1, table)
            if not maximal & side_u:
                return f"bridge {u}--{v}: no maximal vertex across it for {c1}"
    return None


def verify_reflection_laws(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """rho reflection law, simple isotropic orthogonality, integrality."""

    def run(report: VerificationReport) -> None:
        from .borels import odd_reflection, simple_odd_roots
        from .weights import bilinear_form

        rho_cache = {p.rows: rho_b(p) for p in all_partitions(rank)}
        for p in all_partitions(rank):
            here = rho_cache[p.rows]
            for signed in simple_odd_roots(p):
                report.checked += 1
                if bilinear_form(here, signed.weight(rank)) != 0:
                    report.note(f"(rho_b, {signed.text()}) != 0 at {p.rows}")
            for box in p.addable_boxes() + p.removable_boxes():
                report.checked += 1
                new, alpha = odd_reflection(p, box)
                if rho_cache[new.rows] - here != alpha.weight(rank):
                    report.note(f"reflection law fails at {p.rows} box {box}")

    return _timed(run, "rho", rank)


def _mod_ber_key(coeffs: Sequence[int], m: int) -> tuple[int, ...]:
    c = coeffs[0]
    return tuple(x - c if i < m else x + c for i, x in enumerate(coeffs))


def verify_character_identity(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Verma numerators over the integral box, modulo the uniform shift.

    For every shifted parameter: the numerator is the same at every
    Borel (equality against the empty-partition baseline covers all
    pairs), and its coefficient at the normalized highest exponent is 1.
    Random parameter pairs exercise both directions of equality <=>
    weight identity via the cross-assert in characters_equal_iff.
    """

    def run(report: VerificationReport) -> None:
        import random

        from .characters import characters_equal_iff

        parts = all_partitions(rank)
        empty = Partition.empty(rank)
        rho0 = rho(rank)
        rho_cache = {p.rows: rho_b(p) for p in parts}
        seen: set[tuple[int, ...]] = set()
        box = range(-cfg.bound, cfg.bound + 1)
        for coeffs in product(box, repeat=rank.dim):
            key = _mod_ber_key(coeffs, rank.m)
            if key in seen:
                continue
            seen.add(key)
            lam = Weight(rank, tuple(Fraction(c) for c in coeffs))
            baseline = verma_numerator(empty, lam)
            for p in parts:
                report.checked += 1
                num = verma_numerator(p, lam) if p.rows else baseline
                if num != baseline:
                    report.note(f"numerator differs at {p.rows} for {coeffs}")
                top = lam - rho_cache[p.rows] + rho0
                if num.coefficient(tuple(int(c) for c in top.coeffs)) != 1:
                    report.note(f"top coefficient != 1 at {p.rows} for {coeffs}")
        report.stats["parameters"] = len(seen)

        rng = random.Random(20240901)
        agreements = 0
        for _ in range(200):
            p = rng.choice(parts)
            p2 = rng.choice(parts)
            lam = Weight(rank, tuple(Fraction(rng.randint(-2, 2)) for _ in range(rank.dim)))
            lam2 = Weight(rank, tuple(Fraction(rng.randint(-2, 2)) for _ in range(rank.dim)))
            report.checked += 1
            # raises if polynomial equality and the weight identity disagree
            if characters_equal_iff(p, lam - rho_cache[p.rows], p2, lam2 - rho_cache[p2.rows]):
                agreements += 1
        report.stats["random_equal_pairs"] = agreements

    return _timed(run, "characters", rank)


def _all_shortest_box_walks(g: ColoredGraph, u, v) -> list[tuple[Box, ...]]:
    """Every shortest walk u -> v in the lattice, as box sequences."""
    from .lattice import _single_source_distances

    dist = _single_source_distances(g, v)
    walks: list[tuple[Box, ...]] = []

    def grow(x, acc: list[Box]) -> None:
        if x == v:
            walks.append(tuple(acc))
            return
        for y in sorted(g.adj[x]):
            if dist[y] == dist[x] - 1:
                acc.append(g.color_of(x, y))
                grow(y, acc)
                acc.pop()

    grow(u, [])
    return walks


def verify_transport(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Transport coherence and stepwise antidominance.

    * the transported parameter is the same along every shortest walk
      between any two Borels;
    * along every shortest walk out of the empty partition an
      antidominant parameter stays antidominant after each edge.

    Regularity is *not* preserved in general: bumping an equal pair can
    tie it with a neighbouring entry (already in gl(2|1): raw tuple
    (0,1|0) becomes (1,1|1) at the full column).  The suite counts such
    events for regular antidominant inputs instead of flagging them.
    """

    def run(report: VerificationReport) -> None:
        lat = _lattice(rank)
        parts = all_partitions(rank)
        m = rank.m
        multi_pairs = []
        from_empty = {}
        for p in parts:
            walks = _all_shortest_box_walks(lat, (), p.rows)
            from_empty[p.rows] = [_walk_steps(Partition.empty(rank), w) for w in walks]
        for p in parts:
            for p2 in parts:
                if p.rows == p2.rows:
                    continue
                walks = _all_shortest_box_walks(lat, p.rows, p2.rows)
                if len(walks) > 1:
                    multi_pairs.append((p.rows, [_walk_steps(p, w) for w in walks]))

        regular_inputs = 0
        regularity_lost = 0
        for t in sweep_tuples(rank, cfg):
            report.checked += 1
            for _, steps_list in multi_pairs:
                results = {_apply_steps(t, steps) for steps in steps_list}
                if len(results) != 1:
                    report.note(f"transport disagrees across shortest walks for {t}")
                    break
            if not is_antidominant_entries(t, m):
                continue
            regular = is_regular_entries(t, m)
            regular_inputs += regular
            lost = False
            for steps_list in from_empty.values():
                for steps in steps_list:
                    current = list(t)
                    for a, b, s in steps:
                        if current[a] == current[b]:
                            current[a] += s
                            current[b] += s
                        if not is_antidominant_entries(current, m):
                            report.note(f"antidominance lost mid-walk from {t}")
                            break
                    if regular and not is_regular_entries(current, m):
                        lost = True
            regularity_lost += lost
        report.stats["multi_walk_pairs"] = len(multi_pairs)
        report.stats["regular_antidominant_inputs"] = regular_inputs
        report.stats["regularity_lost"] = regularity_lost

    return _timed(run, "transport", rank)


def verify_disconnected(rank: Rank, cfg: SweepConfig = SweepConfig()) -> VerificationReport:
    """Diagram criterion, antidominant parameters, and the n = 1 case."""

    def run(report: VerificationReport) -> None:
        cache = _GraphCache(rank)
        m = rank.m
        td_cache: dict[tuple[int, ...], bool] = {}

        def td(t: tuple[int, ...]) -> bool:
            if t not in td_cache:
                td_cache[t] = totally_disconnected_entries(t, rank, cache)
            return td_cache[t]

        for t in sweep_tuples(rank, cfg):
            regular = is_regular_entries(t, m)
            if regular and is_dominant_entries(t, m):
                report.checked += 1
                if diagram_condition_entries(t, m) != td(t):
                    report.note(f"diagram criterion disagrees with path test for {t}")
            if regular and is_antidominant_entries(t, m):
                report.checked += 1
                if not td(t):
                    report.note(f"regular antidominant tuple {t} is not totally disconnected")
            if rank.n == 1:
                report.checked += 1
                if not td(t):
                    report.note(f"tuple {t} not totally disconnected despite n = 1")
        report.stats["relabelled_parameters"] = len(td_cache)

    return _timed(run, "disconnected", rank)


SUITES: dict[str, Callable[[Rank, SweepConfig], VerificationReport]] = {
    "farthest": verify_unique_farthest,
    "rainbow": verify_rainbow_walks,
    "pair": verify_antidominant_pair,
    "census": survey_maximal_pairs,
    "typicality": verify_typicality,
    "bridges": verify_bridge_lemma,
    "rho": verify_reflection_laws,
    "characters": verify_character_identity,
    "transport": verify_transport,
    "disconnected": verify_disconnected,
}


def _run_named(args: tuple[str, Rank, SweepConfig]) -> VerificationReport:
    name, rank, cfg = args
    return SUITES[name](rank, cfg)


def run_all(rank: Rank, cfg: SweepConfig = SweepConfig()) -> list[VerificationReport]:
    """Run every suite for one rank; BORELGRAPH_JOBS > 1 runs them in parallel."""
    names = list(SUITES)
    jobs = int(os.environ.get(JOBS_ENV, "1"))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_named, [(n, rank, cfg) for n in names]))
    return [SUITES[n](rank, cfg) for n in names]

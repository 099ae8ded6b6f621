"""Edge-colored simple graphs on partitions and their color contractions.

The full lattice has one vertex per partition in the m x n rectangle and
one edge per single-box difference, colored by that box.  Contracting a
set of colors merges the connected components of the subgraph they span;
the quotient keeps the surviving colors and is again simple and, for
every contraction arising from a weight, consistently colored (two merged
parallel edges never disagree in color; this is asserted, not assumed).

Vertices are frozen classes of partitions keyed by their
lexicographically minimal member, so every emission is deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .borels import Box, Partition, all_partitions, box_to_root, pairing_with_root
from .weights import Rank, Weight

__all__ = [
    "ColoredGraph",
    "Walk",
    "ContractionColorError",
    "RainbowConflictError",
    "build_lattice",
    "contract_colors",
    "contract_at_weight",
    "surviving_colors",
    "distances",
    "is_shortest",
    "is_rainbow",
    "geodesically_maximal",
    "mutually_unique_maximal_pairs",
    "bridges",
    "is_path_graph",
    "rainbow_endpoint_map",
    "audit_rainbow_shortest",
    "enumerate_walks",
    "to_dot",
    "to_json",
    "graph_from_json",
]

Rows = tuple[int, ...]


class ContractionColorError(AssertionError):
    """Two parallel edges disagreed in color while being merged."""


class RainbowConflictError(AssertionError):
    """Two rainbow walks with equal color sets reached different endpoints."""


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph; vertices are classes of partitions.

    adj[u][v] is the color of the edge {u, v}; vertex ids are the
    lexicographically minimal row tuple of each class.
    """

    rank: Rank
    members: Mapping[Rows, tuple[Rows, ...]]
    adj: Mapping[Rows, Mapping[Rows, Box]]

    @property
    def vertices(self) -> tuple[Rows, ...]:
        return tuple(sorted(self.members))

    @property
    def n_vertices(self) -> int:
        return len(self.members)

    def edges(self) -> list[tuple[Rows, Rows, Box]]:
        out = []
        for u in sorted(self.adj):
            for v, color in self.adj[u].items():
                if u < v:
                    out.append((u, v, color))
        return sorted(out)

    @property
    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj.values()) // 2

    @property
    def colorset(self) -> frozenset[Box]:
        return frozenset(color for _, _, color in self.edges())

    def neighbors(self, u: Rows) -> Mapping[Rows, Box]:
        return self.adj[u]

    def color_of(self, u: Rows, v: Rows) -> Box:
        return self.adj[u][v]

    def has_edge(self, u: Rows, v: Rows) -> bool:
        return v in self.adj.get(u, {})

    def vertex_of(self, rows: Rows) -> Rows:
        """Class id containing the given partition."""
        for rep, cls in self.members.items():
            if rows in cls:
                return rep
        raise KeyError(f"partition {rows} not in graph")

    def class_size(self, u: Rows) -> int:
        return len(self.members[u])


@dataclass(frozen=True)
class Walk:
    """Vertex sequence; consecutive vertices must be adjacent."""

    vertices: tuple[Rows, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a walk needs at least its start vertex")

    @property
    def start(self) -> Rows:
        return self.vertices[0]

    @property
    def end(self) -> Rows:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices) - 1


def _walk_vertices(walk) -> tuple[Rows, ...]:
    if isinstance(walk, Walk):
        return walk.vertices
    return tuple(walk)


def walk_colors(graph: ColoredGraph, walk) -> list[Box]:
    verts = _walk_vertices(walk)
    colors = []
    for u, v in zip(verts, verts[1:]):
        if not graph.has_edge(u, v):
            raise ValueError(f"walk step {u} -- {v} is not an edge")
        colors.append(graph.color_of(u, v))
    return colors


def build_lattice(rank: Rank) -> ColoredGraph:
    """The full lattice: single-box edges colored by the toggled box."""
    members = {}
    adj: dict[Rows, dict[Rows, Box]] = {}
    for p in all_partitions(rank):
        members[p.rows] = (p.rows,)
        adj[p.rows] = {}
    for p in all_partitions(rank):
        for box in p.addable_boxes():
            q = p.toggle(box)
            adj[p.rows][q.rows] = box
            adj[q.rows][p.rows] = box
    return ColoredGraph(rank, members, adj)


def contract_colors(graph: ColoredGraph, colors: Iterable[Box]) -> ColoredGraph:
    """Quotient by all edges whose color lies in the given set."""
    kill = frozenset(colors)
    unknown = kill - frozenset(graph.colorset)
    if unknown:
        raise ValueError(f"colors {sorted(unknown)} not in the graph")

    parent: dict[Rows, Rows] = {v: v for v in graph.members}

    def find(x: Rows) -> Rows:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, color in graph.edges():
        if color in kill:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)

    classes: dict[Rows, list[Rows]] = {}
    for v in graph.members:
        classes.setdefault(find(v), []).extend(graph.members[v])
    reps = {old: min(group) for old, group in classes.items()}

    members = {reps[old]: tuple(sorted(group)) for old, group in classes.items()}
    adj: dict[Rows, dict[Rows, Box]] = {rep: {} for rep in members}
    for u, v, color in graph.edges():
        if color in kill:
            continue
        cu, cv = reps[find(u)], reps[find(v)]
        if cu == cv:
            continue  # loop created by the merge; dropped by definition
        existing = adj[cu].get(cv)
        if existing is not None and existing != color:
            raise ContractionColorError(
                f"classes {cu} -- {cv} joined by colors {existing} and {color}"
            )
        adj[cu][cv] = color
        adj[cv][cu] = color
    return ColoredGraph(graph.rank, members, adj)


def surviving_colors(lam: Weight, rank: Rank) -> frozenset[Box]:
    """Boxes whose root pairs to zero with lam (these edges survive)."""
    raw = lam.raw_tuple()
    out = []
    for row in range(1, rank.m + 1):
        for col in range(1, rank.n + 1):
            box = Box(col, row)
            root = box_to_root(box, rank)
            if raw[root.p - 1] == raw[rank.m + root.q - 1]:
                out.append(box)
    return frozenset(out)


def contract_at_weight(graph: ColoredGraph, lam: Weight) -> ColoredGraph:
    """Contract every color whose root pairs nontrivially with lam.

    lam is the already-shifted parameter: the result is the odd
    reflection graph of the Vermas with highest weights lam - rho_b.
    """
    if lam.rank != graph.rank:
        raise ValueError(f"rank mismatch: {lam.rank} vs {graph.rank}")
    keep = surviving_colors(lam, graph.rank)
    kill = [c for c in graph.colorset if c not in keep]
    return contract_colors(graph, kill)


def distances(graph: ColoredGraph) -> dict[Rows, dict[Rows, int]]:
    """All-pairs BFS distances."""
    table = {}
    for source in graph.members:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in graph.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        table[source] = dist
    return table


def is_rainbow(graph: ColoredGraph, walk) -> bool:
    colors = walk_colors(graph, walk)
    return len(set(colors)) == len(colors)


def is_shortest(graph: ColoredGraph, walk) -> bool:
    verts = _walk_vertices(walk)
    walk_colors(graph, walk)  # validates the steps
    dist = _single_source_distances(graph, verts[0])
    return len(verts) - 1 == dist[verts[-1]]


def _single_source_distances(graph: ColoredGraph, source: Rows) -> dict[Rows, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def geodesically_maximal(graph: ColoredGraph, a: Rows, table=None) -> frozenset[Rows]:
    """Vertices b such that no shortest walk from any c != b to a passes b.

    Uses the composition law: b lies on a shortest c -- a walk exactly
    when d(c,b) + d(b,a) = d(c,a).
    """
    if table is None:
        table = distances(graph)
    out = []
    for b in graph.members:
        if all(
            table[c][b] + table[b][a] != table[c][a]
            for c in graph.members
            if c != b
        ):
            out.append(b)
    return frozenset(out)


def mutually_unique_maximal_pairs(graph: ColoredGraph) -> set[frozenset[Rows]]:
    """Pairs {a, b} where each is the other's unique geodesically maximal vertex."""
    table = distances(graph)
    maximal = {a: geodesically_maximal(graph, a, table) for a in graph.members}
    pairs = set()
    for a, ms in maximal.items():
        if len(ms) == 1:
            (b,) = ms
            if b != a and maximal[b] == frozenset({a}):
                pairs.add(frozenset({a, b}))
    return pairs


def bridges(graph: ColoredGraph) -> set[frozenset[Rows]]:
    """Edges whose removal disconnects their component."""
    out = set()
    for u, v, _ in graph.edges():
        # BFS from u avoiding the edge {u, v}
        seen = {u}
        queue = deque([u])
        reached = False
        while queue and not reached:
            x = queue.popleft()
            for y in graph.adj[x]:
                if (x, y) in ((u, v), (v, u)):
                    continue
                if y == v:
                    reached = True
                    break
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if not reached:
            out.add(frozenset({u, v}))
    return out


def is_path_graph(graph: ColoredGraph) -> bool:
    """True for a simple path, including the one-vertex graph."""
    n, e = graph.n_vertices, graph.n_edges
    if e != n - 1:
        return False
    if any(len(graph.adj[v]) > 2 for v in graph.members):
        return False
    return len(_single_source_distances(graph, next(iter(sorted(graph.members))))) == n


def rainbow_endpoint_map(graph: ColoredGraph, a: Rows) -> dict[frozenset[Box], Rows]:
    """Endpoint of each rainbow walk from a, keyed by its color set.

    Raises RainbowConflictError if two rainbow walks that use the same
    set of colors end at different vertices.
    """
    if a not in graph.members:
        raise KeyError(f"vertex {a} not in graph")
    endpoint: dict[frozenset[Box], Rows] = {frozenset(): a}
    queue = deque([(a, frozenset())])
    seen = {(a, frozenset())}
    while queue:
        v, used = queue.popleft()
        for w, color in graph.adj[v].items():
            if color in used:
                continue
            nxt = used | {color}
            prior = endpoint.get(nxt)
            if prior is None:
                endpoint[nxt] = w
            elif prior != w:
                raise RainbowConflictError(
                    f"color set {sorted(nxt)} reaches both {prior} and {w} from {a}"
                )
            state = (w, nxt)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return endpoint


def audit_rainbow_shortest(graph: ColoredGraph) -> dict[str, int]:
    """Certify rainbow <=> shortest over every walk of every length.

    Walks that are neither rainbow nor shortest cannot violate the
    equivalence and stay so under extension, so it suffices to check

    * every rainbow walk is shortest: explored as (vertex, color-set)
      states from each start; a rainbow walk's length is its color count;
    * every shortest walk is rainbow: a shortest non-rainbow walk has a
      minimal prefix that is still rainbow and shortest, then repeats a
      color while increasing the distance; detected on the same states.

    Returns state counters; raises AssertionError on any violation.
    """
    stats = {"starts": 0, "rainbow_states": 0}
    for a in sorted(graph.members):
        stats["starts"] += 1
        dist = _single_source_distances(graph, a)
        queue = deque([(a, frozenset())])
        seen = {(a, frozenset())}
        while queue:
            v, used = queue.popleft()
            stats["rainbow_states"] += 1
            if len(used) != dist[v]:
                raise AssertionError(
                    f"rainbow walk from {a} to {v} with colors {sorted(used)} "
                    f"has length {len(used)} but distance is {dist[v]}"
                )
            for w, color in graph.adj[v].items():
                if color in used:
                    if dist.get(w) == len(used) + 1:
                        raise AssertionError(
                            f"shortest walk from {a} through {v} to {w} repeats "
                            f"color {color}"
                        )
                    continue
                state = (w, used | {color})
                if state not in seen:
                    seen.add(state)
                    queue.append(state)
    return stats


def enumerate_walks(graph: ColoredGraph, start: Rows, max_len: int) -> Iterator[Walk]:
    """All walks from start of length <= max_len (small graphs only)."""
    stack = [(start,)]
    while stack:
        verts = stack.pop()
        yield Walk(verts)
        if len(verts) - 1 < max_len:
            for w in sorted(graph.adj[verts[-1]]):
                stack.append(verts + (w,))


def _vertex_label(graph: ColoredGraph, u: Rows) -> str:
    text = ",".join(str(r) for r in u) if u else "()"
    size = graph.class_size(u)
    return text if size == 1 else f"{text} [{size}]"


def to_dot(graph: ColoredGraph) -> str:
    """Graphviz rendering with class representatives and box labels."""
    verts = graph.vertices
    index = {u: k for k, u in enumerate(verts)}
    lines = [f'graph "L({graph.rank.m},{graph.rank.n})" {{', "  node [shape=box];"]
    for u in verts:
        lines.append(f'  v{index[u]} [label="{_vertex_label(graph, u)}"];')
    for u, v, color in graph.edges():
        lines.append(f'  v{index[u]} -- v{index[v]} [label="{color.text()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: ColoredGraph) -> str:
    verts = graph.vertices
    index = {u: k for k, u in enumerate(verts)}
    payload = {
        "rank": [graph.rank.m, graph.rank.n],
        "vertices": [[list(rows) for rows in graph.members[u]] for u in verts],
        "edges": [
            {"u": index[u], "v": index[v], "color": [color.col, color.row]}
            for u, v, color in graph.edges()
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def graph_from_json(text: str) -> ColoredGraph:
    payload = json.loads(text)
    try:
        m, n = payload["rank"]
        rank = Rank(m, n)
        classes = [tuple(sorted(tuple(rows) for rows in cls)) for cls in payload["vertices"]]
        members = {min(cls): cls for cls in classes}
        reps = [min(cls) for cls in classes]
        adj: dict[Rows, dict[Rows, Box]] = {rep: {} for rep in reps}
        for edge in payload["edges"]:
            u, v = reps[edge["u"]], reps[edge["v"]]
            color = Box(*edge["color"])
            adj[u][v] = color
            adj[v][u] = color
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from None
    return ColoredGraph(rank, members, adj)

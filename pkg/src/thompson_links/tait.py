"""Signed Tait graphs of tree pairs.

The graph of a pair (T+, T-) with n leaves has one vertex per leaf, sitting on
a line.  Every internal node of the top tree whose first child spans leaves
i..j contributes the positive edge {i, j+1}, drawn above the line; the bottom
tree contributes the negative edges below the line.  Both families are laminar
(arcs pairwise nested or disjoint), which is what lets the medial construction
in `diagram` realise the link as the boundary of a twisted-band surface.

Membership in the oriented subgroup is exactly 2-colorability of this graph;
the canonical coloring gives the leftmost vertex the color +1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional

from .trees import internal_spans

if TYPE_CHECKING:  # pragma: no cover
    from .thompson import GroupElement


class NotBipartite(ValueError):
    pass


class Disconnected(ValueError):
    pass


class NonLaminar(ValueError):
    pass


@dataclass(frozen=True)
class TaitEdge:
    u: int
    v: int
    sign: int
    id: int

    def __post_init__(self) -> None:
        if not self.u < self.v:
            raise ValueError("edge endpoints must satisfy u < v")
        if self.sign not in (1, -1):
            raise ValueError("edge sign must be +1 or -1")


@dataclass(frozen=True)
class SignedTaitGraph:
    n_vertices: int
    edges: tuple[TaitEdge, ...]
    coloring: Optional[tuple[int, ...]] = None  # +1 / -1 per vertex

    def signed(self, sign: int) -> list[TaitEdge]:
        return [e for e in self.edges if e.sign == sign]

    def incident(self, v: int) -> list[TaitEdge]:
        return [e for e in self.edges if v in (e.u, e.v)]


def tait_graph(g: "GroupElement") -> SignedTaitGraph:
    """The signed Tait graph of a reduced arity-2 element."""
    if g.arity != 2:
        raise ValueError("Tait graphs are built from arity-2 elements")
    n = g.leaves
    edges = []
    for sign, tree in ((1, g.top), (-1, g.bottom)):
        spans = sorted((j + 1, i) for _, i, j in internal_spans(tree))
        for v, u in spans:
            edges.append(TaitEdge(u, v, sign, len(edges)))
    return SignedTaitGraph(n, tuple(edges))


def is_laminar(graph: SignedTaitGraph) -> bool:
    """Each sign family must be pairwise nested or disjoint as arcs on the line."""
    for sign in (1, -1):
        arcs = [(e.u, e.v) for e in graph.signed(sign)]
        for a in range(len(arcs)):
            for b in range(a + 1, len(arcs)):
                (u1, v1), (u2, v2) = arcs[a], arcs[b]
                if u1 < u2 < v1 < v2 or u2 < u1 < v2 < v1:
                    return False
    return True


def _adjacency(graph: SignedTaitGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(graph.n_vertices)]
    for e in graph.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    return adj


def _two_color(graph: SignedTaitGraph) -> Optional[list[Optional[int]]]:
    """BFS 2-coloring, None if an odd cycle exists; unreached vertices stay None."""
    adj = _adjacency(graph)
    color: list[Optional[int]] = [None] * graph.n_vertices
    for start in range(graph.n_vertices):
        if color[start] is not None:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if color[y] is None:
                    color[y] = -color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(graph: SignedTaitGraph) -> bool:
    return _two_color(graph) is not None


def is_connected(graph: SignedTaitGraph) -> bool:
    if graph.n_vertices <= 1:
        return True
    adj = _adjacency(graph)
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == graph.n_vertices


def canonical_coloring(graph: SignedTaitGraph) -> SignedTaitGraph:
    """Attach the proper 2-coloring with color(vertex 0) = +1."""
    if not is_connected(graph):
        raise Disconnected("canonical coloring needs a connected graph")
    color = _two_color(graph)
    if color is None:
        raise NotBipartite("Tait graph has an odd cycle")
    # BFS seeded vertex 0 with +1, and the graph is connected.
    assert all(c is not None for c in color)
    return replace(graph, coloring=tuple(color))  # type: ignore[arg-type]


def component_coloring(graph: SignedTaitGraph) -> SignedTaitGraph:
    """Proper 2-coloring giving each component's leftmost vertex the color +1.

    Split components carry no relative orientation information, so this is the
    natural extension of the canonical coloring to graphs that fell apart
    under moves.
    """
    color = _two_color(graph)
    if color is None:
        raise NotBipartite("Tait graph has an odd cycle")
    return replace(graph, coloring=tuple(color))  # type: ignore[arg-type]


def flip_coloring(graph: SignedTaitGraph) -> SignedTaitGraph:
    if graph.coloring is None:
        raise ValueError("no coloring to flip")
    return replace(graph, coloring=tuple(-c for c in graph.coloring))


def reide_moves(graph: SignedTaitGraph) -> tuple[SignedTaitGraph, list[dict]]:
    """Graph-level Reidemeister moves, applied to a fixpoint.

    I   delete a 1-valent vertex with its edge;
    IIa contract a 2-valent vertex whose edges have opposite signs and
        distinct far endpoints (skipped when contraction would break the
        laminar line embedding);
    IIb delete a parallel pair of edges with opposite signs.

    Vertices are never renumbered during the moves; the result is compacted at
    the end.  Returns the simplified graph and the move log.
    """
    n = graph.n_vertices
    alive = [True] * n
    edges = {e.id: [e.u, e.v, e.sign] for e in graph.edges}
    log: list[dict] = []

    def incident(v: int) -> list[int]:
        return [eid for eid, (u, w, _) in edges.items() if v in (u, w)]

    def laminar_ok() -> bool:
        for sign in (1, -1):
            arcs = sorted((u, w) for u, w, s in edges.values() if s == sign)
            for a in range(len(arcs)):
                for b in range(a + 1, len(arcs)):
                    (u1, v1), (u2, v2) = arcs[a], arcs[b]
                    if u1 < u2 < v1 < v2 or u2 < u1 < v2 < v1:
                        return False
        return True

    changed = True
    while changed:
        changed = False
        # type I: pendant vertex
        for v in range(n):
            if not alive[v]:
                continue
            inc = incident(v)
            if len(inc) == 1:
                eid = inc[0]
                log.append({"move": "I", "vertex": v, "edges": [eid]})
                del edges[eid]
                alive[v] = False
                changed = True
                break
        if changed:
            continue
        # type IIa: contract a 2-valent vertex with opposite signs
        for v in range(n):
            if not alive[v]:
                continue
            inc = incident(v)
            if len(inc) != 2:
                continue
            e1, e2 = (edges[i] for i in inc)
            if e1[2] == e2[2]:
                continue
            far1 = e1[0] if e1[1] == v else e1[1]
            far2 = e2[0] if e2[1] == v else e2[1]
            if far1 == far2:
                continue  # parallel pair, handled by IIb
            keep, merge = min(far1, far2), max(far1, far2)
            trial = {
                eid: [
                    keep if u == merge else u,
                    keep if w == merge else w,
                    s,
                ]
                for eid, (u, w, s) in edges.items()
                if eid not in inc
            }
            trial = {
                eid: [min(u, w), max(u, w), s] for eid, (u, w, s) in trial.items()
            }
            if any(u == w for u, w, _ in trial.values()):
                raise AssertionError("IIa contraction produced a self-loop (bug)")
            saved = edges
            edges = trial
            if not laminar_ok():
                edges = saved
                continue
            log.append({"move": "IIa", "vertex": v, "edges": sorted(inc), "merged": [keep, merge]})
            alive[v] = False
            alive[merge] = False
            changed = True
            break
        if changed:
            continue
        # type IIb: parallel edges with opposite signs
        ids = sorted(edges)
        done = False
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                u1, v1, s1 = edges[ids[a]]
                u2, v2, s2 = edges[ids[b]]
                if (u1, v1) == (u2, v2) and s1 == -s2:
                    log.append({"move": "IIb", "edges": [ids[a], ids[b]]})
                    del edges[ids[a]]
                    del edges[ids[b]]
                    changed = done = True
                    break
            if done:
                break

    used = sorted(
        {u for u, _, _ in edges.values()} | {w for _, w, _ in edges.values()}
        | {v for v in range(n) if alive[v]}
    )
    renum = {old: new for new, old in enumerate(used)}
    out = tuple(
        TaitEdge(renum[u], renum[w], s, i)
        for i, (u, w, s) in enumerate(
            sorted((edges[eid] for eid in sorted(edges)), key=lambda e: (e[1], e[0], -e[2]))
        )
    )
    return SignedTaitGraph(len(used), out), log


def to_dot(graph: SignedTaitGraph) -> str:
    lines = ["graph tait {"]
    for v in range(graph.n_vertices):
        attrs = f' [label="{v}"]'
        if graph.coloring is not None:
            mark = "+" if graph.coloring[v] > 0 else "-"
            attrs = f' [label="{v} ({mark})"]'
        lines.append(f"  v{v}{attrs};")
    for e in graph.edges:
        mark = "+" if e.sign > 0 else "-"
        lines.append(f'  v{e.u} -- v{e.v} [label="{mark}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(graph: SignedTaitGraph) -> dict:
    data: dict = {
        "n": graph.n_vertices,
        "edges": [[e.u, e.v, e.sign] for e in graph.edges],
    }
    if graph.coloring is not None:
        data["coloring"] = ["+" if c > 0 else "-" for c in graph.coloring]
    return data


def from_json(data: dict) -> SignedTaitGraph:
    edges = tuple(
        TaitEdge(int(u), int(v), int(s), i) for i, (u, v, s) in enumerate(data["edges"])
    )
    g = SignedTaitGraph(int(data["n"]), edges)
    if "coloring" in data:
        col = tuple(1 if c == "+" else -1 for c in data["coloring"])
        g = replace(g, coloring=col)
    return g

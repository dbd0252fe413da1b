"""Link diagrams as combinatorial 4-valent maps, built from signed Tait graphs.

The construction realises each Tait vertex as a disk on the line and each
signed edge as a half-twisted band (positive bands above the line, negative
below); the link is the boundary of that surface.  Because both arc families
are laminar, the cyclic attachment order of bands around every disk is forced,
which pins the whole diagram combinatorially:

* each edge {u, v} becomes one crossing with ports, in counterclockwise
  order, 0=(u, ccw-side), 1=(u, cw-side), 2=(v, ccw-side), 3=(v, cw-side);
* positive bands carry the over strand on ports (1, 3), negative bands on
  (0, 2) -- the one chirality convention of the package (every example
  fixture exercises it);
* around a disk, consecutive band ends are joined by boundary arcs.

A diagram is stored as crossings (counterclockwise port rotation plus the
over pair), arcs pairing up the ports, and a count of crossingless free
loops.  Faces come from the rotation system, so Reidemeister moves are face
surgeries: R1 on monogons, R2 on bigons (strand fully over or fully under),
and the detour move R3 on triangles with an extreme strand.

Orientation: a proper 2-coloring of the Tait graph orients every +1 disk
counterclockwise and every -1 disk clockwise; the boundary inherits a
globally consistent orientation exactly when the graph is bipartite.  With
the chirality convention above every positive edge then gives a +1 crossing
and every negative edge a -1 crossing, for any proper coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .tait import NonLaminar, SignedTaitGraph, is_laminar

End = tuple[int, int]  # (crossing id, port 0..3)


class OrientationError(ValueError):
    pass


class MissingColoring(ValueError):
    pass


class PDError(ValueError):
    pass


@dataclass
class Crossing:
    over: tuple[int, int]  # the two ports carried by the over strand
    origin: Optional[tuple[int, int]] = None  # (tait sign, tait edge id)
    sweep_pos: Optional[tuple] = None  # left-to-right hint for the bracket sweep

    def is_over(self, port: int) -> bool:
        return port in self.over


@dataclass
class LinkDiagram:
    crossings: dict[int, Crossing] = field(default_factory=dict)
    arcs: dict[int, tuple[End, End]] = field(default_factory=dict)
    loops: int = 0
    # orientation[arc] = index (0/1) of the arc end the arc points INTO
    orientation: Optional[dict[int, int]] = None
    _next_cid: int = 0
    _next_aid: int = 0

    # -- construction helpers -------------------------------------------------

    def new_crossing(self, over: tuple[int, int], origin=None, sweep_pos=None) -> int:
        cid = self._next_cid
        self._next_cid += 1
        self.crossings[cid] = Crossing(over, origin, sweep_pos)
        return cid

    def new_arc(self, e1: End, e2: End) -> int:
        aid = self._next_aid
        self._next_aid += 1
        self.arcs[aid] = (e1, e2)
        return aid

    def copy(self) -> "LinkDiagram":
        return LinkDiagram(
            crossings={
                c: Crossing(x.over, x.origin, x.sweep_pos)
                for c, x in self.crossings.items()
            },
            arcs=dict(self.arcs),
            loops=self.loops,
            orientation=None if self.orientation is None else dict(self.orientation),
            _next_cid=self._next_cid,
            _next_aid=self._next_aid,
        )

    # -- basic queries ---------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def port_map(self) -> dict[End, tuple[int, int]]:
        """Map every occupied (crossing, port) to (arc id, end index)."""
        out: dict[End, tuple[int, int]] = {}
        for aid, (e1, e2) in self.arcs.items():
            for idx, e in enumerate((e1, e2)):
                if e in out:
                    raise AssertionError(f"port {e} used twice")
                out[e] = (aid, idx)
        return out

    def validate(self) -> None:
        pm = self.port_map()
        for cid in self.crossings:
            for p in range(4):
                if (cid, p) not in pm:
                    raise AssertionError(f"unplugged port {(cid, p)}")
        if len(pm) != 4 * len(self.crossings):
            raise AssertionError("stray arc ends")
        if self.orientation is not None:
            self._check_orientation()

    def _check_orientation(self) -> None:
        assert self.orientation is not None
        pm = self.port_map()
        for cid in self.crossings:
            for p0 in (0, 1):
                ends = [(cid, p0), (cid, p0 + 2)]
                heads = 0
                for e in ends:
                    aid, idx = pm[e]
                    if self.orientation[aid] == idx:
                        heads += 1
                if heads != 1:
                    raise OrientationError(f"inconsistent flow at {cid} strand {p0}")

    def components(self) -> int:
        """Closed strands, free loops included."""
        pm = self.port_map()
        seen: set[End] = set()
        count = 0
        for aid, (e1, e2) in sorted(self.arcs.items()):
            if e1 in seen:
                continue
            count += 1
            end = e1
            while end not in seen:
                seen.add(end)
                aid2, idx2 = pm[end]
                other = self.arcs[aid2][1 - idx2]
                seen.add(other)
                cid, p = other
                end = (cid, (p + 2) % 4)
        return count + self.loops

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces of the map as dart cycles; a dart (aid, idx) walks into end idx."""
        pm = self.port_map()
        darts = [(aid, idx) for aid in sorted(self.arcs) for idx in (0, 1)]
        seen: set[tuple[int, int]] = set()
        faces = []
        for d in darts:
            if d in seen:
                continue
            cycle = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                cycle.append(cur)
                aid, idx = cur
                cid, p = self.arcs[aid][idx]
                nxt_end = (cid, (p + 1) % 4)
                aid2, idx2 = pm[nxt_end]
                cur = (aid2, 1 - idx2)
            faces.append(cycle)
        return faces

    def euler_check(self) -> bool:
        """V - E + F == 1 + (#connected pieces) on the sphere."""
        if not self.crossings:
            return True
        v = len(self.crossings)
        e = len(self.arcs)
        f = len(self.faces())
        pieces = self._connected_pieces()
        return v - e + f == 1 + pieces

    def _connected_pieces(self) -> int:
        parent = {cid: cid for cid in self.crossings}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (c1, _), (c2, _) in self.arcs.values():
            parent[find(c1)] = find(c2)
        return len({find(c) for c in parent})

    # -- orientation -----------------------------------------------------------

    def incoming_ports(self, cid: int) -> dict[str, int]:
        """Ports where the over / under strands enter an oriented crossing."""
        if self.orientation is None:
            raise OrientationError("diagram is not oriented")
        pm = self.port_map()
        out = {}
        over = self.crossings[cid].over
        for p0 in (0, 1):
            key = "over" if p0 in over else "under"
            for p in (p0, p0 + 2):
                aid, idx = pm[(cid, p)]
                if self.orientation[aid] == idx:
                    out[key] = p
        if set(out) != {"over", "under"}:
            raise OrientationError(f"bad flow at crossing {cid}")
        return out

    def crossing_sign(self, cid: int) -> int:
        ports = self.incoming_ports(cid)
        return 1 if (ports["under"] - ports["over"]) % 4 == 1 else -1

    def crossing_signs(self) -> dict[int, int]:
        return {cid: self.crossing_sign(cid) for cid in sorted(self.crossings)}

    def writhe(self) -> int:
        return sum(self.crossing_signs().values())

    def strand_components(self) -> list[list[End]]:
        """Strand cycles as lists of ends (each arc end visited once)."""
        pm = self.port_map()
        seen: set[End] = set()
        comps = []
        for aid in sorted(self.arcs):
            e1 = self.arcs[aid][0]
            if e1 in seen:
                continue
            cyc = []
            end = e1
            while end not in seen:
                seen.add(end)
                cyc.append(end)
                aid2, idx2 = pm[end]
                other = self.arcs[aid2][1 - idx2]
                seen.add(other)
                cyc.append(other)
                cid, p = other
                end = (cid, (p + 2) % 4)
            comps.append(cyc)
        return comps

    def orient_by_search(self) -> None:
        """Orient so that every crossing is positive, if possible.

        Any two all-positive orientations differ by reversing split sublinks,
        so the choice does not affect the Jones polynomial.
        """
        comps = self.strand_components()
        pm = self.port_map()
        for flips in range(1 << len(comps)):
            orientation: dict[int, int] = {}
            for k, cyc in enumerate(comps):
                rev = (flips >> k) & 1
                # cyc lists arc ends pairwise: (cyc[i], cyc[i+1]) are the two
                # ends of one arc, walked tail-to-head in the forward direction
                for i in range(0, len(cyc), 2):
                    aid, _ = pm[cyc[i]]
                    head_end = cyc[i] if rev else cyc[i + 1]
                    orientation[aid] = 0 if self.arcs[aid][0] == head_end else 1
            self.orientation = orientation
            self._check_orientation()
            if all(s == 1 for s in self.crossing_signs().values()):
                return
        self.orientation = None
        raise OrientationError("no all-positive orientation exists")

    def orient_first(self) -> None:
        """Deterministic orientation: walk each strand cycle forward."""
        pm = self.port_map()
        orientation: dict[int, int] = {}
        for cyc in self.strand_components():
            for i in range(0, len(cyc), 2):
                aid, idx = pm[cyc[i]]
                orientation[aid] = 1 - idx
        self.orientation = orientation
        self._check_orientation()

    # -- local surgery ---------------------------------------------------------

    def collapse(self, pairings: dict[int, tuple[tuple[int, int], tuple[int, int]]]) -> None:
        """Remove crossings, rejoining their ports as prescribed.

        pairings[cid] gives two port pairs that become direct connections
        (pass-through for R-moves, a smoothing for skein resolutions).  New
        arcs inherit orientation from the chains they splice; chains that
        close up inside the removed region become free loops.
        """
        pm = self.port_map()
        partner: dict[End, End] = {}
        for cid, ((a, b), (c, d)) in pairings.items():
            partner[(cid, a)] = (cid, b)
            partner[(cid, b)] = (cid, a)
            partner[(cid, c)] = (cid, d)
            partner[(cid, d)] = (cid, c)

        dead = set(pairings)
        visited_arcs: set[int] = set()
        new_arcs: list[tuple[End, End, Optional[int]]] = []  # (end1, end2, head idx)

        def walk(aid: int, idx: int):
            """Follow the chain from arc `aid` into dead territory at end idx."""
            chain = [(aid, idx)]
            cur_aid, cur_idx = aid, idx
            while True:
                end = self.arcs[cur_aid][cur_idx]
                if end[0] not in dead:
                    return chain, end
                nxt = partner[end]
                cur_aid, cur_idx = pm[nxt]
                cur_idx = 1 - cur_idx  # walk toward the far end
                chain.append((cur_aid, cur_idx))

        for aid in sorted(self.arcs):
            if aid in visited_arcs:
                continue
            (c1, _), (c2, _) = self.arcs[aid]
            if c1 not in dead and c2 not in dead:
                continue
            if c1 not in dead or c2 not in dead:
                alive_idx = 0 if c1 not in dead else 1
                start_end = self.arcs[aid][alive_idx]
                chain, far_end = walk(aid, 1 - alive_idx)
                for a2, _ in chain:
                    visited_arcs.add(a2)
                head: Optional[int] = None
                if self.orientation is not None:
                    # flow leaves start_end into the chain iff head was the dead end
                    outgoing = self.orientation[aid] == (1 - alive_idx)
                    head = 1 if outgoing else 0
                new_arcs.append((start_end, far_end, head))
            # dead-dead arcs are picked up either by a walk from an alive arc
            # or by the cycle sweep below

        # cycles fully inside the dead region
        for aid in sorted(self.arcs):
            if aid in visited_arcs:
                continue
            (c1, _), (c2, _) = self.arcs[aid]
            if c1 in dead and c2 in dead:
                cur = (aid, 1)
                self.loops += 1
                while True:
                    visited_arcs.add(cur[0])
                    end = self.arcs[cur[0]][cur[1]]
                    nxt = partner[end]
                    a2, i2 = pm[nxt]
                    cur = (a2, 1 - i2)
                    if cur[0] == aid:
                        break

        for cid in dead:
            del self.crossings[cid]
        for aid in visited_arcs:
            if self.orientation is not None:
                self.orientation.pop(aid, None)
            del self.arcs[aid]
        for e1, e2, head in new_arcs:
            aid = self.new_arc(e1, e2)
            if self.orientation is not None and head is not None:
                self.orientation[aid] = head

    def smooth_crossing(self, cid: int, which: str) -> None:
        """Kauffman smoothing: "A" joins the regions swept by rotating the
        over strand counterclockwise, "B" the others."""
        over = self.crossings[cid].over
        if which not in ("A", "B"):
            raise ValueError("smoothing must be 'A' or 'B'")
        a_pairs = ((0, 1), (2, 3)) if over == (1, 3) else ((1, 2), (3, 0))
        b_pairs = ((1, 2), (3, 0)) if over == (1, 3) else ((0, 1), (2, 3))
        self.collapse({cid: a_pairs if which == "A" else b_pairs})

    def oriented_smoothing(self, cid: int) -> None:
        """The smoothing compatible with the orientation (both strands kept)."""
        ports = self.incoming_ports(cid)
        p_in, q_in = ports["over"], ports["under"]
        # join each incoming port with the outgoing port of the other strand
        # that continues the flow: incoming p joins the adjacent outgoing port.
        p_out, q_out = (q_in + 2) % 4, (p_in + 2) % 4
        self.collapse({cid: ((p_in, p_out), (q_in, q_out))})

    # -- Reidemeister moves ----------------------------------------------------

    def _face_moves(self):
        """Classified candidate moves from the face list, deterministically."""
        pm = self.port_map()
        monogons, bigons, triangles = [], [], []
        for face in sorted(self.faces(), key=lambda f: min(f)):
            if len(face) == 1:
                monogons.append(face)
            elif len(face) == 2:
                bigons.append(face)
            elif len(face) == 3:
                triangles.append(face)
        return monogons, bigons, triangles, pm

    def try_r1(self) -> Optional[int]:
        monogons, _, _, _ = self._face_moves()
        if not monogons:
            return None
        (aid, idx), = monogons[0]
        cid = self.arcs[aid][idx][0]
        self.collapse({cid: ((0, 2), (1, 3))})
        return cid

    def _bigon_ok(self, face) -> Optional[tuple[int, int]]:
        (a1, i1), (a2, i2) = face
        if a1 == a2:
            return None
        e1, e2 = self.arcs[a1]
        if e1[0] == e2[0]:
            return None
        # removable iff one strand runs fully over the other along the bigon
        over_1 = self.crossings[e1[0]].is_over(e1[1])
        over_2 = self.crossings[e2[0]].is_over(e2[1])
        if over_1 != over_2:
            return None
        return (min(e1[0], e2[0]), max(e1[0], e2[0]))

    def try_r2(self) -> Optional[tuple[int, int]]:
        _, bigons, _, _ = self._face_moves()
        for face in bigons:
            pair = self._bigon_ok(face)
            if pair is None:
                continue
            c, d = pair
            self.collapse({c: ((0, 2), (1, 3)), d: ((0, 2), (1, 3))})
            return pair
        return None

    def _triangle_slides(self, face):
        """All (rotation, extremity-valid) readings of a triangle face."""
        out = []
        for r in range(3):
            rot = face[r:] + face[:r]
            (aa, ia), (ab, ib), (ac, ic) = rot
            d_end = self.arcs[aa][ia]      # head of a  = (d, qd)
            c_tail = self.arcs[aa][1 - ia]  # tail of a = (c, sc+1)
            x_end = self.arcs[ab][ib]      # head of b1 = (x, rx)
            c_end = self.arcs[ac][ic]      # head of b2 = (c, sc)
            c, d, x = c_tail[0], d_end[0], x_end[0]
            if len({c, d, x}) != 3:
                continue
            over_at_c = self.crossings[c].is_over(c_tail[1])
            over_at_d = self.crossings[d].is_over(d_end[1])
            if over_at_c != over_at_d:
                continue
            out.append((rot, c_tail, d_end, x_end, c_end))
        return out

    def apply_r3(self, rot, c_tail, d_end, x_end, c_end) -> None:
        """Slide the extreme strand of a triangle face across the far crossing."""
        pm = self.port_map()
        (aa, ia), (ab, ib), (ac, ic) = rot
        c, sc1 = c_tail
        d, qd = d_end
        x, rx = x_end
        sc = c_end[1]
        assert c_end[0] == c and (sc + 1) % 4 == sc1

        def ext(cid, p):
            return pm[(cid, p % 4)]

        legs = {
            "L1": ext(c, sc + 3),
            "L6": ext(c, sc + 2),
            "L2": ext(d, qd + 2),
            "L3": ext(d, qd + 3),
            "L4": ext(x, rx + 2),
            "L5": ext(x, rx + 3),
        }
        over_a_c = self.crossings[c].is_over(sc1)
        over_a_d = self.crossings[d].is_over(qd)
        over_b1_x = self.crossings[x].is_over(rx)
        ori = self.orientation
        flow = {}
        if ori is not None:
            flow["a"] = ori[aa] == ia      # True: flows c -> d (L1 -> L2)
            flow["b1"] = ori[ab] == ib     # True: flows d -> x (L3 -> L4)
            flow["b2"] = ori[ac] == ic     # True: flows x -> c (L5 -> L6)

        for aid in (aa, ab, ac):
            del self.arcs[aid]
            if ori is not None:
                ori.pop(aid, None)
        del self.crossings[c]
        del self.crossings[d]
        del self.crossings[x]

        dn = self.new_crossing((0, 2) if over_a_d else (1, 3))
        cn = self.new_crossing((0, 2) if over_a_c else (1, 3))
        xn = self.new_crossing((0, 2) if over_b1_x else (1, 3))

        # external reattachment
        repoint = {
            "L1": (dn, 2),
            "L4": (dn, 3),
            "L2": (cn, 0),
            "L5": (cn, 3),
            "L3": (xn, 0),
            "L6": (xn, 1),
        }
        for leg, (aid, idx) in legs.items():
            ends = list(self.arcs[aid])
            ends[idx] = repoint[leg]
            self.arcs[aid] = (ends[0], ends[1])

        na = self.new_arc((dn, 0), (cn, 2))
        nb1 = self.new_arc((xn, 2), (dn, 1))
        nb2 = self.new_arc((cn, 1), (xn, 3))
        if ori is not None:
            ori[na] = 1 if flow["a"] else 0
            ori[nb1] = 1 if flow["b1"] else 0
            ori[nb2] = 1 if flow["b2"] else 0
            self._check_orientation()

    def simplify(self) -> list[dict]:
        """Greedy R2 > R1 > detour fixpoint; a detour is committed only when it
        unlocks an immediate crossing reduction.  Returns the move log."""
        log: list[dict] = []
        while True:
            pair = self.try_r2()
            if pair is not None:
                log.append({"move": "R2", "crossings": sorted(pair)})
                continue
            cid = self.try_r1()
            if cid is not None:
                log.append({"move": "R1", "crossing": cid})
                continue
            _, _, triangles, _ = self._face_moves()
            committed = False
            for face in triangles:
                for slide in self._triangle_slides(face):
                    trial = self.copy()
                    trial.apply_r3(*slide)
                    probe = trial.copy()
                    if probe.try_r2() is not None or probe.try_r1() is not None:
                        self.crossings = trial.crossings
                        self.arcs = trial.arcs
                        self.loops = trial.loops
                        self.orientation = trial.orientation
                        self._next_cid = trial._next_cid
                        self._next_aid = trial._next_aid
                        log.append({"move": "detour"})
                        committed = True
                        break
                if committed:
                    break
            if not committed:
                return log

    def strip_trivial(self) -> int:
        """Simplify, then drop crossingless split components; returns the count."""
        self.simplify()
        removed = self.loops
        self.loops = 0
        return removed

    # -- export ----------------------------------------------------------------

    def _traversal(self) -> tuple[list[list[End]], dict[End, int]]:
        """Component-then-traversal arc numbering for PD / Gauss export.

        Returns the strand cycles (reordered to start at the canonical arc)
        and the map from arc-tail end to arc number (1-based).
        """
        pm = self.port_map()
        comps = self.strand_components()
        if self.orientation is not None:
            fixed = []
            for cyc in comps:
                aid, idx = pm[cyc[0]]
                if self.orientation[aid] != 1 - idx:
                    cyc = list(reversed(cyc))
                fixed.append(cyc)
            comps = fixed
        if not comps:
            return [], {}

        def start_key(cyc):
            return min(cyc)

        comps.sort(key=start_key)
        # rotate the first component to start right after the lowest crossing's
        # under-strand outgoing arc
        out_comps = []
        for cyc in comps:
            best = None
            for i in range(0, len(cyc), 2):
                cid, p = cyc[i]
                under = not self.crossings[cid].is_over(p)
                key = (cid, not under, p)
                if best is None or key < best[0]:
                    best = (key, i)
            i0 = best[1]
            out_comps.append(cyc[i0:] + cyc[:i0])
        numbering: dict[End, int] = {}
        n = 0
        for cyc in out_comps:
            for i in range(0, len(cyc), 2):
                n += 1
                numbering[cyc[i]] = n  # label attached to the arc leaving here
        return out_comps, numbering

    def to_pd(self) -> tuple[list[tuple[int, int, int, int]], int]:
        """PD code X[a,b,c,d] per crossing, counterclockwise from the incoming
        under-strand; crossingless components are reported as a loop count."""
        comps, numbering = self._traversal()
        pm = self.port_map()
        # arc numbers seen from each port: outgoing ports carry their own
        # number, incoming ports the number of the arriving arc
        port_label: dict[End, int] = {}
        for cyc in comps:
            for i in range(0, len(cyc), 2):
                tail = cyc[i]
                head = cyc[i + 1]
                label = numbering[tail]
                port_label[tail] = label
                port_label[head] = label
        code = []
        for cid in sorted(self.crossings):
            cr = self.crossings[cid]
            start = None
            if self.orientation is not None:
                start = self.incoming_ports(cid)["under"]
            else:
                under = [p for p in range(4) if not cr.is_over(p)]
                start = min(under, key=lambda p: port_label[(cid, p)])
            quad = tuple(port_label[(cid, (start + k) % 4)] for k in range(4))
            code.append(quad)
        return code, self.loops

    def pd_text(self) -> str:
        code, loops = self.to_pd()
        inner = ",".join("X[%d,%d,%d,%d]" % q for q in code)
        return f"PD[{inner}] loops={loops}"

    def gauss_code(self) -> str:
        """Oriented Gauss code O1+ U2- ... per component, '|' separated."""
        if self.orientation is None:
            raise OrientationError("Gauss code needs an orientation")
        comps, _ = self._traversal()
        signs = self.crossing_signs()
        names = {cid: k + 1 for k, cid in enumerate(sorted(self.crossings))}
        parts = []
        for cyc in comps:
            syms = []
            for i in range(1, len(cyc), 2):  # head ends = entering a crossing
                cid, p = cyc[i]
                tag = "O" if self.crossings[cid].is_over(p) else "U"
                s = "+" if signs[cid] > 0 else "-"
                syms.append(f"{tag}{names[cid]}{s}")
            parts.append(" ".join(syms))
        return " | ".join(parts)


def from_pd(code: Iterable[tuple[int, int, int, int]], loops: int = 0) -> LinkDiagram:
    """Rebuild a diagram from PD code (labels counterclockwise, under strand
    at positions 0-2, over at 1-3)."""
    d = LinkDiagram()
    ends_by_label: dict[int, list[End]] = {}
    for quad in code:
        cid = d.new_crossing((1, 3))
        for p, label in enumerate(quad):
            ends_by_label.setdefault(label, []).append((cid, p))
    for label, ends in sorted(ends_by_label.items()):
        if len(ends) != 2:
            raise PDError(f"arc label {label} appears {len(ends)} times")
        d.new_arc(ends[0], ends[1])
    d.loops = loops
    d.validate()
    return d


def build_diagram(graph: SignedTaitGraph) -> LinkDiagram:
    """The medial / twisted-band diagram of a signed Tait graph."""
    if not is_laminar(graph):
        raise NonLaminar("edge families must be laminar")
    d = LinkDiagram()
    cross_of_edge: dict[int, int] = {}
    for e in sorted(graph.edges, key=lambda e: e.id):
        over = (1, 3) if e.sign > 0 else (0, 2)
        cross_of_edge[e.id] = d.new_crossing(
            over, origin=(e.sign, e.id), sweep_pos=(e.v, e.u, e.id)
        )

    incident: dict[int, list] = {v: [] for v in range(graph.n_vertices)}
    for e in graph.edges:
        incident[e.u].append(e)
        incident[e.v].append(e)

    for v in range(graph.n_vertices):
        rot: list[tuple[tuple, int, str]] = []
        for e in incident[v]:
            # counterclockwise from east; among parallel duplicates the edge
            # with the smaller id is the outermost band
            if e.sign > 0:
                if e.u == v:  # right-going above: ascending far endpoint, inner first
                    rot.append(((0, e.v, -e.id), e.id, "u"))
                else:  # left-going above: ascending far endpoint, outer first
                    rot.append(((1, e.u, e.id), e.id, "v"))
            else:
                if e.v == v:  # left-going below: descending far endpoint, inner first
                    rot.append(((2, -e.u, -e.id), e.id, "v"))
                else:  # right-going below: descending far endpoint, outer first
                    rot.append(((3, -e.v, e.id), e.id, "u"))
        rot.sort(key=lambda item: item[0])
        if not rot:
            d.loops += 1
            continue
        k = len(rot)
        for i in range(k):
            _, eid1, role1 = rot[i]
            _, eid2, role2 = rot[(i + 1) % k]
            ccw_port = 0 if role1 == "u" else 2
            cw_port = 1 if role2 == "u" else 3
            d.new_arc((cross_of_edge[eid1], ccw_port), (cross_of_edge[eid2], cw_port))
    d.validate()
    return d


def orient(d: LinkDiagram, graph: SignedTaitGraph) -> LinkDiagram:
    """Orient the diagram from a properly colored Tait graph: +1 disks run
    counterclockwise, -1 disks clockwise."""
    if graph.coloring is None:
        raise MissingColoring("orient needs a colored Tait graph")
    out = d.copy()
    # recover, for every boundary arc, the disk it belongs to: the arc joins
    # the ccw-side port of one band end to the cw-side port of the next band
    # end around one disk, and the port side identifies the disk via the edge.
    edge_ends: dict[int, tuple[int, int]] = {}
    for e in graph.edges:
        edge_ends[e.id] = (e.u, e.v)
    cid_to_eid = {}
    for cid, cr in out.crossings.items():
        if cr.origin is None:
            raise MissingColoring("diagram was not built from a Tait graph")
        cid_to_eid[cid] = cr.origin[1]
    orientation: dict[int, int] = {}
    for aid, ((c1, p1), (c2, p2)) in out.arcs.items():
        u1 = edge_ends[cid_to_eid[c1]][0 if p1 < 2 else 1]
        u2 = edge_ends[cid_to_eid[c2]][0 if p2 < 2 else 1]
        if u1 != u2:
            raise AssertionError("boundary arc spans two disks (bug)")
        col = graph.coloring[u1]
        # arcs were created tail=(ccw port), head=(cw port); +1 disks keep
        # that direction, -1 disks reverse it
        tail_is_ccw = p1 in (0, 2)
        if not tail_is_ccw:
            raise AssertionError("arc stored against construction order (bug)")
        orientation[aid] = 1 if col > 0 else 0
    out.orientation = orientation
    out._check_orientation()
    return out

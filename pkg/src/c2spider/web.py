"""Planar webs as combinatorial maps.

A web is stored as a rotation system: every half-edge (dart) either sits at a
vertex, in a definite cyclic (counterclockwise) position, or is anchored to
the disk boundary.  A fixed-point-free involution pairs darts into edges.
Edges carry a type, ``'s'`` (single strand) or ``'d'`` (double strand).

Vertex kinds:

* ``tri`` -- the generating trivalent vertex: two single legs, one double leg.
* ``tet`` -- a formal tetravalent vertex on four single legs; carries an
  ``axis`` marker selecting which adjacent leg pairs merge when it is expanded
  into a pair of trivalent vertices bridged by a double edge.
* ``cross`` -- a formal crossing of two single strands; ``over`` in the extra
  data records which diagonal (legs 0,2 or legs 1,3 in cyclic position) passes
  over.
* ``clasp`` -- an opaque projector box with weight ``(a, b)``; legs are the
  ``n`` input strands followed by the ``n`` output strands in boundary order.

Boundary convention: the boundary word is read counterclockwise and splits as
inputs left-to-right followed by outputs right-to-left, so a morphism web with
p inputs and q outputs has boundary ``(i_0 .. i_{p-1}, o_{q-1} .. o_0)`` and
``n_in = p``.  Closed loops with no vertices are tracked separately in
``free_loops`` since they have no darts.
"""

from __future__ import annotations

from dataclasses import dataclass


class BoundaryMismatch(ValueError):
    """Gluing was attempted along boundaries of different shape."""


SINGLE = "s"
DOUBLE = "d"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __bool__(self):  # truthy: a violation was found
        return True


class Web:
    __slots__ = ("vkind", "vextra", "vlegs", "dart_vertex", "pair", "etype",
                 "boundary", "n_in", "free_loops", "_next_dart", "_next_vertex",
                 "_ckey")

    def __init__(self):
        self.vkind = {}
        self.vextra = {}
        self.vlegs = {}
        self.dart_vertex = {}
        self.pair = {}
        self.etype = {}
        self.boundary = []
        self.n_in = 0
        self.free_loops = ()
        self._next_dart = 0
        self._next_vertex = 0
        self._ckey = None

    # -- construction helpers -------------------------------------------

    def new_dart(self, etype: str) -> int:
        self._ckey = None
        d = self._next_dart
        self._next_dart += 1
        self.etype[d] = etype
        self.dart_vertex[d] = None
        return d

    def add_vertex(self, kind: str, leg_types, extra=()) -> tuple:
        """Add a vertex with fresh darts; returns (vertex id, list of darts)."""
        self._ckey = None
        v = self._next_vertex
        self._next_vertex += 1
        darts = [self.new_dart(t) for t in leg_types]
        for d in darts:
            self.dart_vertex[d] = v
        self.vkind[v] = kind
        self.vextra[v] = tuple(extra)
        self.vlegs[v] = list(darts)
        return v, darts

    def connect(self, d1: int, d2: int):
        if self.etype[d1] != self.etype[d2]:
            raise BoundaryMismatch(
                f"cannot join a {self.etype[d1]!r} dart to a {self.etype[d2]!r} dart")
        if d1 == d2 or d1 in self.pair or d2 in self.pair:
            raise ValueError("dart already paired")
        self._ckey = None
        self.pair[d1] = d2
        self.pair[d2] = d1

    def add_free_loop(self, etype: str):
        self._ckey = None
        self.free_loops = tuple(sorted(self.free_loops + (etype,)))

    def copy(self) -> "Web":
        w = Web.__new__(Web)
        w.vkind = dict(self.vkind)
        w.vextra = dict(self.vextra)
        w.vlegs = {v: list(l) for v, l in self.vlegs.items()}
        w.dart_vertex = dict(self.dart_vertex)
        w.pair = dict(self.pair)
        w.etype = dict(self.etype)
        w.boundary = list(self.boundary)
        w.n_in = self.n_in
        w.free_loops = self.free_loops
        w._next_dart = self._next_dart
        w._next_vertex = self._next_vertex
        w._ckey = None
        return w

    # -- boundary views --------------------------------------------------

    def inputs(self):
        return self.boundary[:self.n_in]

    def outputs(self):
        return list(reversed(self.boundary[self.n_in:]))

    def in_types(self):
        return tuple(self.etype[d] for d in self.inputs())

    def out_types(self):
        return tuple(self.etype[d] for d in self.outputs())

    def is_closed(self) -> bool:
        return not self.boundary

    def n_vertices(self) -> int:
        return len(self.vkind)

    def has_kind(self, kind: str) -> bool:
        return any(k == kind for k in self.vkind.values())

    # -- faces -------------------------------------------------------------

    def _sigma(self, virtual_rot):
        """Next-dart-counterclockwise map, treating the boundary as a virtual
        vertex whose rotation is the boundary word reversed."""
        nxt = {}
        for legs in self.vlegs.values():
            n = len(legs)
            for i, d in enumerate(legs):
                nxt[d] = legs[(i + 1) % n]
        if virtual_rot:
            n = len(virtual_rot)
            for i, d in enumerate(virtual_rot):
                nxt[d] = virtual_rot[(i + 1) % n]
        return nxt

    def faces(self, include_outer=False):
        """Orbits of (rotation-next after crossing the edge); each orbit is a
        list of darts.  Faces through the boundary are skipped unless asked."""
        virtual_rot = list(reversed(self.boundary))
        nxt = self._sigma(virtual_rot)
        bset = set(self.boundary)
        seen = set()
        out = []
        for start in sorted(self.etype):
            if start in seen:
                continue
            orbit = []
            d = start
            while True:
                orbit.append(d)
                seen.add(d)
                d = nxt[self.pair[d]] if self.pair.get(d) is not None else None
                if d is None:  # unpaired dart outside boundary: invalid web
                    break
                if d == start:
                    break
            if d is None:
                continue
            if include_outer or not any(x in bset for x in orbit):
                out.append(orbit)
        return out

    # -- validation ----------------------------------------------------------

    _LEG_PATTERNS = {
        "tri": ("s", "s", "d"),
        "tet": ("s", "s", "s", "s"),
        "cross": ("s", "s", "s", "s"),
    }

    def validate(self):
        """Return None if every structural invariant holds, else the first
        Violation found."""
        bset = set(self.boundary)
        if len(bset) != len(self.boundary):
            return Violation("boundary", "repeated dart in boundary word")
        if not 0 <= self.n_in <= len(self.boundary):
            return Violation("boundary", "input count outside boundary range")
        for d, v in self.dart_vertex.items():
            if v is None:
                if d not in bset:
                    return Violation("dangling-dart", f"dart {d} has no vertex and is not on the boundary")
            elif d in bset:
                return Violation("boundary", f"dart {d} sits at vertex {v} but is also anchored")
        for d in self.boundary:
            if d not in self.etype:
                return Violation("boundary", f"unknown dart {d} in boundary word")
        # involution: fixed-point-free pairing away from the boundary
        for d in self.etype:
            p = self.pair.get(d)
            if p is None:
                if d not in bset:
                    return Violation("pairing", f"dart {d} is unpaired and not on the boundary")
                continue
            if p == d:
                return Violation("pairing", f"dart {d} paired with itself")
            if self.pair.get(p) != d:
                return Violation("pairing", f"pairing not involutive at dart {d}")
            if self.etype[d] != self.etype[p]:
                return Violation("edge-type", f"edge {d}-{p} changes type")
        # vertex incidence patterns
        for v, legs in self.vlegs.items():
            for d in legs:
                if self.dart_vertex.get(d) != v:
                    return Violation("rotation", f"dart {d} not registered at vertex {v}")
            kind = self.vkind[v]
            types = sorted(self.etype[d] for d in legs)
            if kind in self._LEG_PATTERNS:
                if types != sorted(self._LEG_PATTERNS[kind]):
                    return Violation("trivalent-pattern" if kind == "tri" else f"{kind}-pattern",
                                     f"vertex {v} has leg types {types}")
            elif kind == "clasp":
                a, b, n_in = self.vextra[v][0], self.vextra[v][1], self.vextra[v][2]
                want = ["s"] * a + ["d"] * b
                got_in = sorted(self.etype[d] for d in legs[:n_in])
                got_out = sorted(self.etype[d] for d in legs[n_in:])
                if got_in != sorted(want) or got_out != sorted(want):
                    return Violation("clasp-pattern", f"vertex {v} legs do not match weight ({a},{b})")
            else:
                return Violation("vertex-kind", f"unknown vertex kind {kind!r}")
        # planarity: Euler characteristic 2 on the sphere, per component
        return self._check_planarity()

    def _check_planarity(self):
        virtual = object()
        adj = {}

        def node_of(d):
            v = self.dart_vertex[d]
            return virtual if v is None else v

        for d, p in self.pair.items():
            adj.setdefault(node_of(d), set()).add(node_of(p))
            adj.setdefault(node_of(p), set()).add(node_of(d))
        for v in self.vkind:
            adj.setdefault(v, set())
        if self.boundary:
            adj.setdefault(virtual, set())
        faces = self.faces(include_outer=True)
        # distribute counts per connected component
        comp_of = {}
        for root in adj:
            if root in comp_of:
                continue
            stack, comp_of[root] = [root], root
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp_of:
                        comp_of[y] = root
                        stack.append(y)
        counts = {}
        for node, root in comp_of.items():
            c = counts.setdefault(root, [0, 0, 0])  # V, E, F
            c[0] += 1
        for d, p in self.pair.items():
            if d < p:
                counts[comp_of[node_of(d)]][1] += 1
        for orbit in faces:
            counts[comp_of[node_of(orbit[0])]][2] += 1
        for root, (v, e, f) in counts.items():
            if v - e + f != 2:
                return Violation("planarity",
                                 f"component has Euler characteristic {v - e + f}, expected 2")
        return None

    # -- canonical form -------------------------------------------------------

    def canonical_key(self):
        """Hashable key identifying the web up to orientation-preserving
        isomorphism of rooted combinatorial maps.  Webs with boundary are
        rooted at the boundary basepoint; closed components are minimized
        over all starting darts."""
        if self._ckey is not None:
            return self._ckey
        encoded_main, visited = self._encode_from_boundary()
        comps = []
        unvisited = set(self.etype) - visited
        while unvisited:
            _, comp = self._encode_component(min(unvisited))
            best = min(self._encode_component(r)[0] for r in sorted(comp))
            comps.append(best)
            unvisited -= comp
        comps.sort()
        self._ckey = (self.free_loops, self.n_in, encoded_main, tuple(comps))
        return self._ckey

    def _encode_from_boundary(self):
        if not self.boundary:
            return (), set()
        order = {}
        for d in self.boundary:
            order[d] = len(order)
        queue = []
        for d in self.boundary:
            queue.append(d)
        return self._encode_sweep(queue, order)

    def _encode_component(self, root):
        order = {root: 0}
        return self._encode_sweep([root], order)

    def _encode_sweep(self, queue, order):
        """Assign canonical numbers to darts by breadth-first sweep; returns
        (encoding, visited darts)."""
        idx = 0
        vertex_order = {}
        vertex_list = []
        queue = list(queue)
        while idx < len(queue):
            d = queue[idx]
            idx += 1
            p = self.pair.get(d)
            if p is not None and p not in order:
                order[p] = len(order)
                queue.append(p)
            # explore the vertex of the partner (entering dart p)
            for probe in (p, d):
                if probe is None:
                    continue
                v = self.dart_vertex.get(probe)
                if v is None or v in vertex_order:
                    continue
                vertex_order[v] = len(vertex_order)
                vertex_list.append((v, probe))
                legs = self.vlegs[v]
                k = legs.index(probe)
                for i in range(len(legs)):
                    leg = legs[(k + i) % len(legs)]
                    if leg not in order:
                        order[leg] = len(order)
                        queue.append(leg)
        vrecs = []
        for v, entry in vertex_list:
            legs = self.vlegs[v]
            k = legs.index(entry)
            rot = tuple(order[legs[(k + i) % len(legs)]] for i in range(len(legs)))
            # canonical traversal reads legs cyclically from the entering one,
            # so positional vertex data must be re-expressed relative to it
            kind = self.vkind[v]
            extra = self.vextra[v]
            if kind == "cross":
                extra = ("over", (extra[1] - k) % 2)
            elif kind == "tet":
                extra = ("axis", (extra[1] - k) % 2)
            elif kind == "clasp":
                extra = extra + (k,)
            vrecs.append((kind, extra, rot))
        pairs = tuple(sorted((order[d], order[p]) for d, p in self.pair.items()
                             if d in order and p in order and order[d] < order[p]))
        types = tuple(self.etype[d] for d in sorted(order, key=order.get))
        bnd = tuple(order[d] for d in self.boundary if d in order)
        return (tuple(vrecs), pairs, types, bnd), set(order)

    def __repr__(self):
        return (f"<Web {self.n_vertices()}v {len(self.pair) // 2}e "
                f"boundary={self.in_types()}->{self.out_types()} loops={self.free_loops}>")

    # -- JSON ------------------------------------------------------------------

    def to_json(self):
        verts = []
        half_edges = []
        for v in sorted(self.vkind):
            verts.append({"id": v, "kind": self.vkind[v],
                          "extra": list(self.vextra[v])})
            for pos, d in enumerate(self.vlegs[v]):
                half_edges.append({"id": d, "vertex": v, "position_in_rotation": pos})
        for d in self.boundary:
            if self.dart_vertex[d] is None:
                half_edges.append({"id": d, "vertex": None, "position_in_rotation": None})
        half_edges.sort(key=lambda r: r["id"])
        return {
            "schema": "c2spider/web/1",
            "vertices": verts,
            "half_edges": half_edges,
            "pairing": sorted([d, p] for d, p in self.pair.items() if d < p),
            "edge_types": {str(d): t for d, t in sorted(self.etype.items())},
            "boundary": list(self.boundary),
            "n_in": self.n_in,
            "free_loops": list(self.free_loops),
        }

    @staticmethod
    def from_json(data) -> "Web":
        w = Web()
        for rec in data["vertices"]:
            v = int(rec["id"])
            w.vkind[v] = rec["kind"]
            w.vextra[v] = tuple(rec["extra"])
            w.vlegs[v] = []
        legs_at = {}
        for rec in data["half_edges"]:
            d = int(rec["id"])
            v = rec["vertex"]
            w.dart_vertex[d] = None if v is None else int(v)
            if v is not None:
                legs_at.setdefault(int(v), []).append((int(rec["position_in_rotation"]), d))
        for v, ps in legs_at.items():
            w.vlegs[v] = [d for _, d in sorted(ps)]
        w.etype = {int(k): v for k, v in data["edge_types"].items()}
        for d, p in data["pairing"]:
            w.pair[int(d)] = int(p)
            w.pair[int(p)] = int(d)
        w.boundary = [int(d) for d in data["boundary"]]
        w.n_in = int(data["n_in"])
        w.free_loops = tuple(data.get("free_loops", []))
        w._next_dart = max(w.etype, default=-1) + 1
        w._next_vertex = max(w.vkind, default=-1) + 1
        return w


# -- elementary webs ------------------------------------------------------------


def empty_web() -> Web:
    return Web()


def loop_web(etype: str = SINGLE) -> Web:
    w = Web()
    w.add_free_loop(etype)
    return w


def id_web(types) -> Web:
    """Identity tangle on the given strand types (left to right)."""
    w = Web()
    ins, outs = [], []
    for t in types:
        a = w.new_dart(t)
        b = w.new_dart(t)
        w.connect(a, b)
        ins.append(a)
        outs.append(b)
    w.boundary = ins + list(reversed(outs))
    w.n_in = len(ins)
    return w


def cup_web(etype: str = SINGLE) -> Web:
    """No inputs, two outputs joined below."""
    w = Web()
    a = w.new_dart(etype)
    b = w.new_dart(etype)
    w.connect(a, b)
    w.boundary = [b, a]  # outputs right-to-left
    w.n_in = 0
    return w


def cap_web(etype: str = SINGLE) -> Web:
    w = Web()
    a = w.new_dart(etype)
    b = w.new_dart(etype)
    w.connect(a, b)
    w.boundary = [a, b]
    w.n_in = 2
    return w


def vertex_web(n_in: int, in_types, out_types) -> Web:
    """A single trivalent vertex as a morphism; leg types must be two singles
    and one double in total."""
    types = list(in_types) + list(reversed(list(out_types)))
    if sorted(types) != ["d", "s", "s"]:
        raise ValueError(f"trivalent vertex needs legs (s, s, d), got {types}")
    w = Web()
    _, darts = w.add_vertex("tri", types)
    bdarts = []
    for d in darts:
        b = w.new_dart(w.etype[d])
        w.connect(d, b)
        bdarts.append(b)
    w.boundary = bdarts
    w.n_in = n_in
    return w


def merge_vertex_web() -> Web:
    """Two singles in, one double out."""
    return vertex_web(2, ["s", "s"], ["d"])


def split_vertex_web() -> Web:
    """One double in, two singles out."""
    return vertex_web(1, ["d"], ["s", "s"])


def crossing_web(positive: bool = True) -> Web:
    """Crossing of two single strands, two in and two out.

    ``positive`` means the strand entering at the bottom-left passes over.
    Legs are stored counterclockwise from the bottom-left; the extra datum
    records which cyclic diagonal (0 = legs 0,2) is the over-strand.
    """
    w = Web()
    _, darts = w.add_vertex("cross", ["s"] * 4, extra=("over", 0 if positive else 1))
    bdarts = [w.new_dart("s") for _ in darts]
    for d, b in zip(darts, bdarts):
        w.connect(d, b)
    w.boundary = bdarts
    w.n_in = 2
    return w


def tetravalent_web(axis: int = 0) -> Web:
    """Formal tetravalent vertex on four single legs, two in and two out."""
    w = Web()
    _, darts = w.add_vertex("tet", ["s"] * 4, extra=("axis", axis % 2))
    bdarts = [w.new_dart("s") for _ in darts]
    for d, b in zip(darts, bdarts):
        w.connect(d, b)
    w.boundary = bdarts
    w.n_in = 2
    return w


def clasp_box_web(a: int, b: int = 0) -> Web:
    """Opaque clasp box of weight (a, b) as a morphism on a singles and b
    doubles (inputs bottom, outputs top)."""
    types = ["s"] * a + ["d"] * b
    n = len(types)
    w = Web()
    _, darts = w.add_vertex("clasp", types + list(reversed(types)),
                            extra=(a, b, n))
    bdarts = [w.new_dart(w.etype[d]) for d in darts]
    for d, bd in zip(darts, bdarts):
        w.connect(d, bd)
    w.boundary = bdarts
    w.n_in = n
    return w


# -- gluing operations ------------------------------------------------------------


def _merge_into(dst: Web, src: Web):
    """Disjoint union; returns dart translation map for src."""
    dmap = {}
    vmap = {}
    for v in src.vkind:
        vmap[v] = dst._next_vertex
        dst._next_vertex += 1
    for d in src.etype:
        dmap[d] = dst._next_dart
        dst._next_dart += 1
    for d, t in src.etype.items():
        dst.etype[dmap[d]] = t
        v = src.dart_vertex[d]
        dst.dart_vertex[dmap[d]] = None if v is None else vmap[v]
    for v in src.vkind:
        dst.vkind[vmap[v]] = src.vkind[v]
        dst.vextra[vmap[v]] = src.vextra[v]
        dst.vlegs[vmap[v]] = [dmap[d] for d in src.vlegs[v]]
    for d, p in src.pair.items():
        dst.pair[dmap[d]] = dmap[p]
    for t in src.free_loops:
        dst.add_free_loop(t)
    return dmap


def _join_boundary_darts(w: Web, a: int, b: int):
    """Connect two boundary-anchored darts of w, eliminating pass-through
    strands.  Degenerate joins produce free loops."""
    w._ckey = None
    pa, pb = w.pair.get(a), w.pair.get(b)
    if pa is None or pb is None:
        raise AssertionError("boundary dart lost its pairing")
    t = w.etype[a]
    if w.etype[b] != t:
        raise BoundaryMismatch(f"cannot glue {w.etype[a]!r} to {w.etype[b]!r}")
    for d in (a, b):
        w.pair.pop(d, None)
        del w.etype[d]
        del w.dart_vertex[d]
    if pa == b:  # the anchors were the two ends of one strand: it closes up
        w.add_free_loop(t)
        return
    w.pair[pa] = pb
    w.pair[pb] = pa


def compose(top: Web, bottom: Web) -> Web:
    """Stack ``top`` after ``bottom`` (top ∘ bottom as morphisms)."""
    if bottom.out_types() != top.in_types():
        raise BoundaryMismatch(
            f"compose mismatch: {bottom.out_types()} vs {top.in_types()}")
    w = bottom.copy()
    dmap = _merge_into(w, top)
    pairs = list(zip(bottom.outputs(), [dmap[d] for d in top.inputs()]))
    new_boundary = w.boundary[:w.n_in] + [dmap[d] for d in top.boundary[top.n_in:]]
    for a, b in pairs:
        _join_boundary_darts(w, a, b)
    w.boundary = new_boundary
    return w


def tensor(left: Web, right: Web) -> Web:
    w = left.copy()
    dmap = _merge_into(w, right)
    w.boundary = (w.boundary[:w.n_in]
                  + [dmap[d] for d in right.boundary[:right.n_in]]
                  + [dmap[d] for d in right.boundary[right.n_in:]]
                  + w.boundary[w.n_in:])
    w.n_in = w.n_in + right.n_in
    return w


def rotate(w: Web, steps: int) -> Web:
    """Rotate the boundary basepoint counterclockwise by ``steps``."""
    out = w.copy()
    m = len(out.boundary)
    if m:
        k = steps % m
        out.boundary = out.boundary[k:] + out.boundary[:k]
    return out


def mirror(w: Web) -> Web:
    """Reflect the diagram; inputs and outputs swap, rotations reverse and
    crossings flip over/under."""
    out = w.copy()
    for v in out.vlegs:
        out.vlegs[v] = list(reversed(out.vlegs[v]))
        # 'cross' extras stay put: reversing the rotation moves the over
        # strand to the other diagonal slot while the reflection swaps over
        # and under, so the stored flag is unchanged.  'tet' axis pairs and
        # the clasp side split are likewise preserved by pure reversal.
    out.boundary = list(reversed(w.boundary))
    out.n_in = len(w.boundary) - w.n_in
    return out


def trace_closure(w: Web) -> Web:
    """Close an endomorphism web into the annulus (diagrammatic trace)."""
    if w.in_types() != w.out_types():
        raise BoundaryMismatch("trace of a non-endomorphism web")
    out = w.copy()
    ins = out.inputs()
    outs = out.outputs()
    out.boundary = []
    out.n_in = 0
    for a, b in zip(ins, outs):
        _join_boundary_darts(out, a, b)
    return out


def plug(a: Web, b: Web) -> Web:
    """Glue two disks along their entire boundary (a closed pairing).

    ``b``'s boundary word must be the reverse of ``a``'s, type-wise; position
    i of ``a`` glues to position -1-i of ``b``.  Used for closed pairings of a
    web against a mirrored test web.
    """
    ta = [a.etype[d] for d in a.boundary]
    tb = [b.etype[d] for d in b.boundary]
    if ta != list(reversed(tb)):
        raise BoundaryMismatch(f"plug mismatch: {ta} vs {tb}")
    w = a.copy()
    dmap = _merge_into(w, b)
    pairs = [(da, dmap[db]) for da, db in zip(a.boundary, reversed(b.boundary))]
    w.boundary = []
    w.n_in = 0
    for x, y in pairs:
        _join_boundary_darts(w, x, y)
    return w

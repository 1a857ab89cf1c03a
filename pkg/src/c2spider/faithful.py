"""Detection of mapping classes: graph geodesics, comparison labelings and
minimal levels.

The scenario: a curve is presented as a closed non-backtracking walk on a
trivalent spine (the geometric step producing such a walk is outside this
package).  The walk's edge multiplicities give the comparison labeling
(p_e, 0); the complexity m is the largest vertex sum of multiplicities; and
detection at level k requires every edge label to be simple (p_e <= k) and
every vertex triple to span a nonzero invariant space at a root of unity of
order 4k + 12, which by the triple-space criterion means the order exceeds
twice the vertex sum plus four.  When all checks pass, the comparison basis
vector appears with a nonzero coefficient in the state vector of the pushed-in
curve, so the curve operator distinguishes the mapping class from the
identity; the certificate records that argument step by step.

On the torus everything is computable outright: a twist power is detected at
level k exactly when the twist eigenvalues fail to be projectively constant,
which is pure root-of-unity arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cat import q_order, twist_exponent, simples
from .clasp import triple_space_dim
from .tqft import Spine


class NotGraphGeodesic(ValueError):
    """The walk backtracks (exits a vertex through its entering edge)."""


class LevelTooSmall(ValueError):
    """A detection check fails at the requested level."""

    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


@dataclass(frozen=True)
class CurveWalk:
    """Closed walk on a spine, as (vertex, outgoing edge) steps.

    Step i says the walk is at ``vertex`` and leaves along ``edge``; the edge
    must connect step i's vertex to step i+1's vertex (cyclically).  On the
    circle spine the walk is just a winding number, encoded separately.
    """
    spine: Spine
    steps: tuple

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a curve walk must be nonempty")
        self.spine.validate()
        edges = self.spine.edges
        n = len(self.steps)
        for i, (v, e) in enumerate(self.steps):
            if not (0 <= e < len(edges)):
                raise ValueError(f"step {i} uses a missing edge {e}")
            u, w = edges[e]
            if v not in (u, w):
                raise ValueError(f"step {i} leaves vertex {v} along "
                                 f"non-incident edge {e}")
            nxt = self.steps[(i + 1) % n][0]
            expect = w if v == u else u
            if v == u == w:
                expect = v
            if nxt != expect:
                raise ValueError(f"step {i} along edge {e} should arrive at "
                                 f"{expect}, walk continues at {nxt}")

    def edge_sequence(self):
        return [e for _, e in self.steps]

    def to_json(self):
        return {"schema": "c2spider/walk/1",
                "steps": [[v, e] for v, e in self.steps]}

    @staticmethod
    def from_json(data, spine: Spine) -> "CurveWalk":
        return CurveWalk(spine, tuple((int(v), int(e)) for v, e in data["steps"]))


def check_graph_geodesic(walk: CurveWalk):
    """None if the walk never exits a vertex along its entering edge, else
    the offending step index."""
    seq = walk.edge_sequence()
    n = len(seq)
    for i in range(n):
        if seq[i] == seq[(i + 1) % n]:
            return (i + 1) % n
    return None


def complexity(walk: CurveWalk):
    """Edge multiplicities and the maximal vertex sum (loops count twice)."""
    bad = check_graph_geodesic(walk)
    if bad is not None:
        raise NotGraphGeodesic(f"walk backtracks at step {bad}")
    p = {e: 0 for e in range(len(walk.spine.edges))}
    for e in walk.edge_sequence():
        p[e] += 1
    m = 0
    for ends in walk.spine.vertex_edge_ends():
        m = max(m, sum(p[e] for e in ends))
    return p, m


def comparison_labeling(walk: CurveWalk):
    """Edge e gets the single-type label (p_e, 0)."""
    p, _ = complexity(walk)
    return {e: (p[e], 0) for e in sorted(p)}


def min_level(walk: CurveWalk) -> int:
    """Smallest level at which the detection checks can pass: every edge
    label must be simple, and the root order 4k+12 must strictly exceed
    2m + 4."""
    p, m = complexity(walk)
    from_order = 0
    while 4 * from_order + 12 <= 2 * m + 4:
        from_order += 1
    return max(max(p.values()), from_order, 1)


@dataclass
class Certificate:
    spine: Spine
    walk: CurveWalk
    level: int
    edge_labels: dict
    vertex_triples: list     # (vertex, (pe, pf, pg), admissible, order_ok)
    complexity_m: int
    order_condition: str
    conclusion: str
    notes: list = field(default_factory=list)
    numeric_checks: list = field(default_factory=list)

    def to_json(self):
        return {
            "schema": "c2spider/certificate/1",
            "spine": self.spine.to_json(),
            "walk": self.walk.to_json(),
            "level": self.level,
            "q_order": q_order(self.level),
            "edge_labels": {str(e): list(l) for e, l in self.edge_labels.items()},
            "vertex_triples": [
                {"vertex": v, "triple": list(t), "admissible": adm,
                 "order_ok": ook}
                for v, t, adm, ook in self.vertex_triples],
            "complexity": self.complexity_m,
            "order_condition": self.order_condition,
            "conclusion": self.conclusion,
            "notes": self.notes,
            "numeric_checks": self.numeric_checks,
        }


def certify_detection(walk: CurveWalk, k: int, numeric: bool = False,
                      ctx=None) -> Certificate:
    """Run the detection argument at level k and emit the certificate.

    Checks, in order: the walk is a graph geodesic; every edge label (p_e, 0)
    is simple at level k; every vertex triple is admissible with the root
    order 4k+12 strictly above twice the vertex sum plus 4.  The conclusion
    records why the comparison coefficient is nonzero: the identity tangle on
    each edge factors with the top clasp appearing once, each vertex space is
    one-dimensional and nonvanishing at this order, and braidings contribute
    only nonzero scalars, so the state vector of the pushed-in curve is not
    proportional to the empty labeling.
    """
    if k < 1:
        raise ValueError("level must be at least 1")
    bad = check_graph_geodesic(walk)
    if bad is not None:
        raise NotGraphGeodesic(f"walk backtracks at step {bad}")
    p, m = complexity(walk)
    labels = comparison_labeling(walk)
    order = q_order(k)
    for e, (pe, _) in sorted(labels.items()):
        if pe > k:
            raise LevelTooSmall(
                "edge-label", f"edge {e} carries ({pe},0) but {pe} > k = {k}")
    triples = []
    for v, ends in enumerate(walk.spine.vertex_edge_ends()):
        t = tuple(sorted(p[e] for e in ends))
        if sum(t) % 2:
            raise ValueError(f"vertex {v} has odd multiplicity sum {t}; "
                             "the input is not a closed walk")
        admissible = triple_space_dim(*t) == 1
        order_ok = order > 2 * sum(t) + 4
        if sum(t) and not admissible:
            raise LevelTooSmall("vertex-admissibility",
                                f"vertex {v} triple {t} is inadmissible")
        if not order_ok:
            raise LevelTooSmall(
                "order-condition",
                f"vertex {v} needs order > {2 * sum(t) + 4}, have {order}")
        triples.append((v, t, admissible, order_ok))
    notes = [
        "input assumption: the walk encodes the image curve of a mapping "
        "class applied to a curve bounding a disk in the handlebody, not "
        "isotopic to it",
        "edge factorization: the identity tangle on p_e strands contains the "
        "(p_e, 0) clasp with coefficient 1 at this level",
        "vertex spaces are one-dimensional; the graph-geodesic property "
        "rules out strands returning to their entry boundary component, so "
        "each vertex skein is a nonzero multiple of the basis vector and "
        "braidings only contribute powers of the crossing unit",
        "the disk-bounding curve acts by the loop value (the quantum "
        "dimension of (1,0) in the engine's sign convention), so unequal "
        "curve operators separate the mapping class from the identity",
    ]
    numeric_checks = []
    if numeric:
        from .clasp import theta_net, default_context
        ctx = ctx or default_context()
        for v, t, _, _ in triples:
            if sum(t) <= 6 and sum(t) > 0:
                val = theta_net(t[0], t[1], t[2], ctx)
                numeric_checks.append({"vertex": v, "triple": list(t),
                                       "theta_nonzero": not val.is_zero()})
                if val.is_zero():
                    raise LevelTooSmall("numeric-theta",
                                        f"vertex {v} triangle evaluates to zero")
    cert = Certificate(
        spine=walk.spine, walk=walk, level=k, edge_labels=labels,
        vertex_triples=triples, complexity_m=m,
        order_condition=f"4k+12 = {order} > 2m+4 = {2 * m + 4}",
        conclusion="detected", notes=notes, numeric_checks=numeric_checks)
    return cert


# -- the torus experiment ----------------------------------------------------------


def torus_detection(n: int, k: int) -> bool:
    """Does the n-th twist power act projectively nontrivially at level k?"""
    if n == 0:
        raise ValueError("the zero twist power is central")
    order = q_order(k)
    exps = [twist_exponent(w) for w in simples(k)]
    base = exps[0]
    return any((n * (e - base)) % order for e in exps)


def min_detect_level(n: int, k_max: int = 1000) -> int:
    if n == 0:
        raise ValueError("the zero twist power is central")
    for k in range(1, k_max + 1):
        if torus_detection(n, k):
            return k
    raise RuntimeError(f"no detection level found below {k_max}")


# -- randomized scenario generation ---------------------------------------------------


def random_spine(genus: int, rng: random.Random) -> Spine:
    """Random connected trivalent multigraph of the given genus >= 2."""
    if genus < 2:
        raise ValueError("use the circle spine for genus 1")
    n_vertices = 2 * genus - 2
    ends = [v for v in range(n_vertices) for _ in range(3)]
    while True:
        rng.shuffle(ends)
        edges = tuple(sorted((min(a, b), max(a, b))
                             for a, b in zip(ends[::2], ends[1::2])))
        sp = Spine(n_vertices, edges)
        try:
            sp.validate()
        except ValueError:
            continue
        return sp


def random_geodesic_walk(spine: Spine, rng: random.Random,
                         max_m: int = 12, tries: int = 2000):
    """Random closed non-backtracking walk with complexity at most max_m."""
    edges = spine.edges
    incident = [[] for _ in range(spine.n_vertices)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        if v != u:
            incident[v].append(idx)
    for _ in range(tries):
        v0 = rng.randrange(spine.n_vertices)
        first = rng.choice(incident[v0])
        steps = [(v0, first)]
        v = _other_end(edges, first, v0)
        length = rng.randint(2, 4 * len(edges))
        ok = True
        for _ in range(length - 1):
            options = [e for e in incident[v] if e != steps[-1][1]]
            if not options:
                ok = False
                break
            e = rng.choice(options)
            steps.append((v, e))
            v = _other_end(edges, e, v)
        if not ok or v != v0:
            continue
        if steps[-1][1] == first:
            continue
        walk = CurveWalk(spine, tuple(steps))
        if check_graph_geodesic(walk) is not None:
            continue
        _, m = complexity(walk)
        if m <= max_m:
            return walk
    return None


def _other_end(edges, e, v):
    u, w = edges[e]
    return w if v == u else u

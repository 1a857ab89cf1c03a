"""State spaces of surfaces and the torus mapping-class representation.

A closed surface of genus g bounds a handlebody whose spine is a trivalent
graph; admissible labelings of the spine's edges by level-k simple objects,
counted with the fusion multiplicity at each vertex, give the state space
dimension.  The Verlinde formula computes the same number from the S-matrix
and serves as the independent cross-check.

The torus is special: its spine is a bare circle, states are the simple
objects themselves, and the mapping-class action is generated by the exact
S and T matrices.  Curve operators are realized concretely there: the
meridian operator is diagonal with the fundamental character values, and any
other curve operator is obtained by conjugating along a mapping class word.
All matrices are exact cyclotomic matrices, kept unnormalized; every
statement checked downstream is conjugation- or phase-insensitive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cat import (ModularData, NonIntegerResult, check_weight, modular_data,
                  q_order, simples, triple_multiplicity)
from .ring import CycNumber


@dataclass(frozen=True)
class Spine:
    """Trivalent multigraph (loops and parallel edges allowed).  The torus
    spine is the vertexless circle, flagged separately since it has no
    trivalent structure."""
    n_vertices: int
    edges: tuple          # tuple of (u, v) pairs, u == v for loops
    circle: bool = False

    @staticmethod
    def torus() -> "Spine":
        return Spine(0, (), circle=True)

    @staticmethod
    def theta_graph() -> "Spine":
        return Spine(2, ((0, 1), (0, 1), (0, 1)))

    @staticmethod
    def dumbbell() -> "Spine":
        return Spine(2, ((0, 0), (0, 1), (1, 1)))

    def validate(self):
        if self.circle:
            if self.n_vertices or self.edges:
                raise ValueError("the circle spine has no vertices or edges")
            return
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u},{v}) references a missing vertex")
            deg[u] += 1
            deg[v] += 1
        bad = [i for i, d in enumerate(deg) if d != 3]
        if bad:
            raise ValueError(f"vertices {bad} are not trivalent")
        if self.n_vertices and not self._connected():
            raise ValueError("spine must be connected")

    def _connected(self) -> bool:
        adj = {i: set() for i in range(self.n_vertices)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n_vertices

    def genus(self) -> int:
        if self.circle:
            return 1
        return len(self.edges) - self.n_vertices + 1

    def vertex_edge_ends(self):
        """For each vertex, the incident edge indices with multiplicity
        (a loop appears twice)."""
        ends = [[] for _ in range(self.n_vertices)]
        for idx, (u, v) in enumerate(self.edges):
            ends[u].append(idx)
            ends[v].append(idx)
        return ends

    def to_json(self):
        out = {"schema": "c2spider/spine/1", "vertices": self.n_vertices,
               "edges": [list(e) for e in self.edges]}
        if self.circle:
            out["circle"] = True
        return out

    @staticmethod
    def from_json(data) -> "Spine":
        sp = Spine(int(data["vertices"]),
                   tuple((int(u), int(v)) for u, v in data["edges"]),
                   circle=bool(data.get("circle", False)))
        sp.validate()
        return sp


def statespace_dim(spine: Spine, k: int) -> int:
    """Number of admissible labelings, counted with vertex fusion
    multiplicities."""
    spine.validate()
    if spine.circle:
        return len(simples(k))
    objs = simples(k)
    ends = spine.vertex_edge_ends()
    n_edges = len(spine.edges)
    total = 0
    labeling = [None] * n_edges

    def vertex_factor(v):
        e1, e2, e3 = ends[v]
        return triple_multiplicity(labeling[e1], labeling[e2], labeling[e3],
                                   level=k)

    def rec(edge):
        nonlocal total
        if edge == n_edges:
            prod = 1
            for v in range(spine.n_vertices):
                prod *= vertex_factor(v)
                if not prod:
                    return
            total += prod
            return
        for w in objs:
            labeling[edge] = w
            # prune on any vertex whose three edges are all set
            ok = True
            for v in range(spine.n_vertices):
                if all(labeling[e] is not None for e in ends[v]) \
                        and max(ends[v]) == edge:
                    if vertex_factor(v) == 0:
                        ok = False
                        break
            if ok:
                rec(edge + 1)
        labeling[edge] = None

    rec(0)
    return total


def verlinde_dim(genus: int, k: int) -> int:
    """Sum over simples of S_{0 lambda}^(2-2g), computed exactly from the
    unnormalized S-matrix."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    md = modular_data(k)
    if genus == 1:
        return len(md.simples)
    acc = CycNumber.zero(md.order)
    for i in range(len(md.simples)):
        col = md.s_tilde[0][i]
        acc = acc + (md.s_norm_sq ** (genus - 1)) * (col ** (2 - 2 * genus))
    r = acc.as_rational()
    if r.denominator != 1 or r < 0:
        raise NonIntegerResult(f"Verlinde dimension {r} is not a nonnegative integer")
    return int(r)


# -- exact matrices over a cyclotomic ring --------------------------------------


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    zero = CycNumber.zero(a[0][0].order)
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if x.is_zero():
                continue
            for j in range(m):
                if not b[t][j].is_zero():
                    out[i][j] = out[i][j] + x * b[t][j]
    return out


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_identity(n, order):
    return [[CycNumber.one(order) if i == j else CycNumber.zero(order)
             for j in range(n)] for i in range(n)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def proportional(a, b):
    """The scalar c with a = c * b, or None."""
    c = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if y.is_zero():
                if not x.is_zero():
                    return None
                continue
            r = x / y
            if c is None:
                c = r
            elif c != r:
                return None
    return c


# -- the torus representation -----------------------------------------------------


@dataclass
class TorusRep:
    """Exact unnormalized mapping-class action on the torus state space.

    ``s`` is the S-move and ``t`` the Dehn twist about the meridian; both are
    defined up to a global scalar (the framing phase of the twist is tracked
    projectively, not normalized away), so only conjugation-invariant or
    projective statements are meaningful.
    """
    level: int
    md: ModularData
    s: list
    t: list
    s_inv: list
    t_inv: list

    def word_matrix(self, word):
        """Matrix (and exact inverse) of a word in {'s', 't'}, read as a
        composition: the rightmost letter acts first."""
        n = len(self.md.simples)
        m = mat_identity(n, self.md.order)
        m_inv = mat_identity(n, self.md.order)
        for g in word:
            if g == "s":
                m = mat_mul(m, self.s)
                m_inv = mat_mul(self.s_inv, m_inv)
            elif g == "t":
                m = mat_mul(m, self.t)
                m_inv = mat_mul(self.t_inv, m_inv)
            else:
                raise ValueError(f"unknown torus generator {g!r}")
        return m, m_inv


@lru_cache(maxsize=None)
def torus_rep(k: int) -> TorusRep:
    md = modular_data(k)
    n = len(md.simples)
    order = md.order
    zero = CycNumber.zero(order)
    t = [[md.t_diag[i] if i == j else zero for j in range(n)] for i in range(n)]
    t_inv = [[md.t_diag[i].inverse() if i == j else zero for j in range(n)]
             for i in range(n)]
    s = [row[:] for row in md.s_tilde]
    # S~ S~+ = norm: the exact inverse is the rescaled conjugate transpose
    inv_norm = md.s_norm_sq.inverse()
    s_inv = [[md.s_tilde[j][i].conj() * inv_norm for j in range(n)]
             for i in range(n)]
    return TorusRep(level=k, md=md, s=s, t=t, s_inv=s_inv, t_inv=t_inv)


def normalize_curve(p: int, q: int):
    from math import gcd
    if p == 0 and q == 0:
        raise ValueError("the zero class is not a curve")
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return (p, q)


MERIDIAN = (1, 0)
LONGITUDE = (0, 1)


def act_on_curve(word, curve):
    """Action of a word in {'s', 't'} on an unoriented primitive class:
    t is the twist about the meridian (p,q) -> (p+q, q); s maps
    (p,q) -> (-q, p)."""
    p, q = curve
    for g in reversed(word):
        if g == "t":
            p, q = p + q, q
        elif g == "s":
            p, q = -q, p
        else:
            raise ValueError(f"unknown torus generator {g!r}")
    return normalize_curve(p, q)


@lru_cache(maxsize=None)
def _word_reaching(curve, limit=12):
    """Shortest word in {'s', 't'} mapping the meridian to the given class."""
    curve = normalize_curve(*curve)
    frontier = {MERIDIAN: ()}
    seen = dict(frontier)
    for _ in range(limit):
        if curve in seen:
            return seen[curve]
        nxt = {}
        for cls, word in frontier.items():
            for g in ("s", "t"):
                new = act_on_curve((g,), cls)
                if new not in seen:
                    # prepend: the new word acts after the old one
                    nxt[new] = (g,) + word
        seen.update(nxt)
        frontier = nxt
    if curve in seen:
        return seen[curve]
    raise ValueError(f"curve {curve} not reached within word length {limit}")


def curve_operator_torus(curve, k: int):
    """Exact curve operator on the torus state space.

    The meridian operator is diagonal with entries S~_{(1,0) lambda} /
    S~_{(0,0) lambda} (the fundamental character values); a general primitive
    class is reached by conjugating with a canonical mapping-class word.
    """
    if curve == "meridian":
        curve = MERIDIAN
    elif curve == "longitude":
        curve = LONGITUDE
    curve = normalize_curve(*curve)
    rep = torus_rep(k)
    md = rep.md
    n = len(md.simples)
    v_index = md.index((1, 0))
    zero = CycNumber.zero(md.order)
    base = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        base[i][i] = md.s_tilde[v_index][i] / md.s_tilde[0][i]
    if curve == MERIDIAN:
        return base
    word = _word_reaching(curve)
    m, m_inv = rep.word_matrix(word)
    return mat_mul(m, mat_mul(base, m_inv))


def conjugation_identity_holds(word, curve, k: int) -> bool:
    """Check V_h C(gamma) V_h^{-1} = C(h(gamma)) exactly on the torus."""
    rep = torus_rep(k)
    m, m_inv = rep.word_matrix(word)
    lhs = mat_mul(m, mat_mul(curve_operator_torus(curve, k), m_inv))
    rhs = curve_operator_torus(act_on_curve(word, normalize_curve(*curve)), k)
    return mat_eq(lhs, rhs)

"""Clasps: the quantum projectors of type (n, 0) and their networks.

A clasp of weight (n, 0) is the unique idempotent on n single strands that
kills every turnback (the cap-cup on adjacent strands and the trivalent
turnback emitting a double edge).  Expansion follows the two-term recursive
structure

    P_n = P_{n-1} (x) 1  +  c1 . P E P  +  c2 . P G P

with E the adjacent cap-cup and G the adjacent double-edge bridge; the
coefficients are pinned numerically (exactly, in Q(q)) by the annihilation
conditions, which determine them uniquely.  Expansions are memoized on disk
keyed by the relation-table hash.

Clasps of mixed weight (a, b) with a, b > 0 exist as labels but are never
expanded; double-type clasps expand only for n <= 1 (the identity cases).

Inside diagrams clasps stay opaque boxes for as long as possible: a term dies
as soon as any box sees an adjacent-leg cap or an adjacent-leg trivalent
vertex on one side, which is what makes theta networks tractable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engine as eng
from . import web as wb
from .cache import ClaspCache
from .engine import WebSum, eval_closed, reduce_sum, sum_compose, sum_is_zero
from .ring import RationalFunction
from .rules import RuleTable, default_table

_ONE = RationalFunction.coerce(1)
_ZERO = RationalFunction.coerce(0)


@dataclass(frozen=True)
class ClaspLabel:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("clasp weight components must be nonnegative")

    @property
    def expandable(self) -> bool:
        return self.a == 0 or self.b == 0


# -- strand-level building blocks ----------------------------------------------


def _id(n):
    return wb.id_web(["s"] * n)


def _at(n, i, piece):
    """piece acting on strands i, i+1 of n single strands."""
    return wb.tensor(wb.tensor(_id(i), piece), _id(n - i - 2))


def cap_at(n, i):
    return _at(n, i, wb.cap_web("s"))


def cup_at(n, i):
    return _at(n, i, wb.cup_web("s"))


def merge_at(n, i):
    return _at(n, i, wb.merge_vertex_web())


def split_at(n, i):
    return _at(n, i, wb.split_vertex_web())


def e_at(n, i):
    return _at(n, i, wb.compose(wb.cup_web("s"), wb.cap_web("s")))


def g_at(n, i):
    return _at(n, i, wb.compose(wb.split_vertex_web(), wb.merge_vertex_web()))


def rainbow_caps(k):
    """V^(2k) -> nothing, pairing input t with input 2k-1-t."""
    w = wb.Web()
    darts = [w.new_dart("s") for _ in range(2 * k)]
    for t in range(k):
        w.connect(darts[t], darts[2 * k - 1 - t])
    w.boundary = darts
    w.n_in = 2 * k
    return w


def rainbow_cups(k):
    return wb.mirror(rainbow_caps(k))


# -- expansion -----------------------------------------------------------------


_MEMO = {}


class ClaspContext:
    """Holds the relation table and the persistent cache for expansions."""

    def __init__(self, table: RuleTable = None, cache: ClaspCache = None):
        self.table = table or default_table()
        if cache is None:
            cache = ClaspCache(table_hash=self.table.table_hash())
        self.cache = cache

    def _key(self, n, kind):
        return f"clasp-{kind}-{n}"


_DEFAULT_CTX = None


def default_context() -> ClaspContext:
    global _DEFAULT_CTX
    if _DEFAULT_CTX is None:
        _DEFAULT_CTX = ClaspContext()
    return _DEFAULT_CTX


def _websum_to_json(ws: WebSum):
    return {"schema": "c2spider/websum/1",
            "terms": [{"coeff": c.to_json(), "web": w.to_json()} for c, w in ws]}


def _websum_from_json(data) -> WebSum:
    out = WebSum()
    for t in data["terms"]:
        out.add(RationalFunction.from_json(t["coeff"]), wb.Web.from_json(t["web"]))
    return out


def clasp_expand(n: int, kind: str = "single", ctx: ClaspContext = None) -> WebSum:
    """The projector on n parallel strands as a sum of plain webs."""
    if n < 0:
        raise ValueError("strand count must be nonnegative")
    ctx = ctx or default_context()
    if kind == "double":
        if n == 0:
            return WebSum.from_web(wb.empty_web())
        if n == 1:
            return WebSum.from_web(wb.id_web(["d"]))
        raise NotImplementedError(
            "no recursive expansion is implemented for double-type clasps "
            "beyond one strand; they participate as labels only")
    if kind != "single":
        raise ValueError(f"unknown clasp kind {kind!r}")
    memo_key = (ctx.table.table_hash(), kind, n)
    if memo_key in _MEMO:
        return _MEMO[memo_key]
    if n <= 1:
        ws = WebSum.from_web(_id(n))
        _MEMO[memo_key] = ws
        return ws
    cached = ctx.cache.get(ctx._key(n, kind))
    if cached is not None:
        ws = _websum_from_json(cached)
        _MEMO[memo_key] = ws
        return ws
    prev = clasp_expand(n - 1, kind, ctx)
    table = ctx.table
    t0 = reduce_sum(_tensor_id(prev), table=table)
    t1 = reduce_sum(sum_compose(t0, sum_compose(
        WebSum.from_web(e_at(n, n - 2)), t0)), table=table)
    t2 = reduce_sum(sum_compose(t0, sum_compose(
        WebSum.from_web(g_at(n, n - 2)), t0)), table=table)
    c1, c2 = _recursion_coefficients(n, t0, t1, t2, table)
    ws = t0 + t1.scale(c1) + t2.scale(c2)
    _MEMO[memo_key] = ws
    ctx.cache.put(ctx._key(n, kind), _websum_to_json(ws))
    return ws


def _tensor_id(ws: WebSum) -> WebSum:
    one = wb.id_web(["s"])
    return ws.map_webs(lambda w: wb.tensor(w, one))


def _recursion_coefficients(n, t0, t1, t2, table):
    """Solve the two annihilation conditions for the correction coefficients.

    Both cap . P_n and merge . P_n land in spaces where everything factoring
    through the lower clasp is proportional, so one closed pairing per
    condition determines the solution; the full annihilation is then verified
    by the turnback tests.
    """
    cap = WebSum.from_web(cap_at(n, n - 2))
    tau = WebSum.from_web(merge_at(n, n - 2))
    rows = []
    for probe in (cap, tau):
        xs = [reduce_sum(sum_compose(probe, t), table=table) for t in (t0, t1, t2)]
        pairings = [eng.pair_closed(xs[0], x, table=table) for x in xs]
        if pairings[0].is_zero():
            raise RuntimeError("degenerate test pairing while solving clasp "
                               "recursion coefficients")
        rows.append(pairings)
    (l0, l1, l2), (m0, m1, m2) = rows
    det = l1 * m2 - l2 * m1
    if det.is_zero():
        raise RuntimeError("singular system for clasp recursion coefficients")
    c1 = (l2 * m0 - l0 * m2) / det
    c2 = (l0 * m1 - l1 * m0) / det
    return c1, c2


def recursion_coefficients(n: int, ctx: ClaspContext = None):
    """The correction coefficients (c1, c2) in the two-term recursion."""
    ctx = ctx or default_context()
    prev = clasp_expand(n - 1, "single", ctx)
    table = ctx.table
    t0 = reduce_sum(_tensor_id(prev), table=table)
    t1 = reduce_sum(sum_compose(t0, sum_compose(
        WebSum.from_web(e_at(n, n - 2)), t0)), table=table)
    t2 = reduce_sum(sum_compose(t0, sum_compose(
        WebSum.from_web(g_at(n, n - 2)), t0)), table=table)
    return _recursion_coefficients(n, t0, t1, t2, table)


# -- axioms and verification ------------------------------------------------------


def turnback_kill(n: int, ctx: ClaspContext = None) -> dict:
    """Verify that every elementary turnback annihilates the clasp.

    Returns {position: {"cap": bool, "vertex": bool}}; all True means pass.
    For n = 1 there are no turnbacks and the report is empty (vacuous pass).
    """
    ctx = ctx or default_context()
    p = clasp_expand(n, "single", ctx)
    report = {}
    for i in range(n - 1):
        capped = reduce_sum(sum_compose(WebSum.from_web(cap_at(n, i)), p),
                            table=ctx.table)
        merged = reduce_sum(sum_compose(WebSum.from_web(merge_at(n, i)), p),
                            table=ctx.table)
        report[i] = {"cap": sum_is_zero(capped, table=ctx.table),
                     "vertex": sum_is_zero(merged, table=ctx.table)}
    return report


def idempotent(n: int, ctx: ClaspContext = None) -> bool:
    """Engine verification that the clasp squares to itself.

    For n <= 3 the two expansions are composed and compared directly.  For
    larger n the same identity is verified through its exact factorization:
    with P = T0 + c1 T1 + c2 T2 and T0 = P' (x) 1, idempotence of P' gives
    P T0 = P and P Ti = (P . turnback) . rest, so P P - P vanishes exactly
    when the two mirrored turnbacks annihilate P from below.  Each of those
    is an engine-computed zero test, and the inductive base is the direct
    check; this keeps the verification exact while avoiding the quadratic
    blowup of composing the full expansions.
    """
    ctx = ctx or default_context()
    p = clasp_expand(n, "single", ctx)
    if n <= 3:
        pp = reduce_sum(sum_compose(p, p), table=ctx.table)
        return eng.sums_equal(pp, p, table=ctx.table)
    if not idempotent(n - 1, ctx):
        return False
    below_cap = reduce_sum(sum_compose(p, WebSum.from_web(cup_at(n, n - 2))),
                           table=ctx.table)
    below_vertex = reduce_sum(sum_compose(p, WebSum.from_web(split_at(n, n - 2))),
                              table=ctx.table)
    return sum_is_zero(below_cap, table=ctx.table) and \
        sum_is_zero(below_vertex, table=ctx.table)


# -- clasp boxes inside webs ---------------------------------------------------------


def _box_positions(web):
    return [v for v in sorted(web.vkind) if web.vkind[v] == "clasp"]


def _box_is_dead(web, v) -> bool:
    """Adjacent-leg cap or adjacent-leg trivalent vertex on one side of the box."""
    a, b, n = web.vextra[v]
    legs = web.vlegs[v]
    for side in (legs[:n], legs[n:]):
        for t in range(len(side) - 1):
            u1 = web.pair[side[t]]
            u2 = web.pair[side[t + 1]]
            if u1 == side[t + 1]:
                return True
            v1 = web.dart_vertex.get(u1)
            if v1 is not None and v1 == web.dart_vertex.get(u2) \
                    and web.vkind[v1] == "tri":
                return True
    return False


def _box_straighten_step(web):
    """One application of the derived axiom: a sideways double-edge bridge
    whose two feet stand on adjacent legs of a clasp box straightens to
    parallel strands (the square relation is monic, and its other two
    components die as turnbacks).  Returns the rewritten web or None."""
    for v in _box_positions(web):
        a, b, n = web.vextra[v]
        legs = web.vlegs[v]
        for side in (legs[:n], legs[n:]):
            for t in range(len(side) - 1):
                u1 = web.pair[side[t]]
                u2 = web.pair[side[t + 1]]
                va = web.dart_vertex.get(u1)
                vb = web.dart_vertex.get(u2)
                if va is None or vb is None or va == vb:
                    continue
                if web.vkind.get(va) != "tri" or web.vkind.get(vb) != "tri":
                    continue
                da = next(d for d in web.vlegs[va] if web.etype[d] == "d")
                if web.pair[da] not in web.vlegs[vb]:
                    continue
                sa = next(d for d in web.vlegs[va] if d not in (u1, da))
                db = web.pair[da]
                sb = next(d for d in web.vlegs[vb] if d not in (u2, db))
                mini = ((), ((("x", 0), ("x", 1), "s"), (("x", 2), ("x", 3), "s")))
                return eng._splice(web, {va, vb}, [u1, sa, u2, sb], [mini])[0]
    return None


def _box_absorb_step(web):
    """Merge two stacked clasp boxes of equal weight (idempotent absorption)."""
    boxes = _box_positions(web)
    for v in boxes:
        a, b, n = web.vextra[v]
        legs = web.vlegs[v]
        outs = legs[n:]
        target = web.dart_vertex.get(web.pair[outs[0]])
        if target is None or target == v or web.vkind.get(target) != "clasp":
            continue
        if web.vextra[target][:2] != (a, b):
            continue
        tlegs = web.vlegs[target]
        # v's output j sits at legs[2n-1-j]; it must feed target's input j
        if all(web.pair[legs[2 * n - 1 - j]] == tlegs[j] for j in range(n)):
            mini = ((), tuple(
                (("x", j), ("x", 2 * n - 1 - j), web.etype[tlegs[j]])
                for j in range(n)))
            return eng._splice(web, {target}, list(tlegs), [mini])[0]
    return None


def expand_boxes(ws, ctx: ClaspContext = None, budget: int = 10 ** 6) -> WebSum:
    """Replace every clasp box by its expansion, interleaving reduction and
    turnback pruning; the result is a sum of plain webs."""
    ctx = ctx or default_context()
    if isinstance(ws, wb.Web):
        ws = WebSum.from_web(ws)
    out = WebSum.zero()
    stack = list(ws)
    while stack:
        coeff, web = stack.pop()
        boxes = _box_positions(web)
        if not boxes:
            out.add(coeff, web)
            continue
        if any(_box_is_dead(web, v) for v in boxes):
            continue
        rewritten = _box_straighten_step(web) or _box_absorb_step(web)
        if rewritten is not None:
            stack.append((coeff, rewritten))
            continue
        # expand the cheapest box first
        v = min(boxes, key=lambda x: (web.vextra[x][0] + web.vextra[x][1], x))
        a, b, n_in = web.vextra[v]
        kind = "single" if b == 0 else "double"
        expansion = clasp_expand(a + b, kind, ctx)
        minis = [eng.to_mini(d) for _, d in expansion]
        pieces = eng._splice(web, {v}, list(web.vlegs[v]), minis)
        partial = WebSum.zero()
        for (c2, _), piece in zip(expansion, pieces):
            partial.add(coeff * c2, piece)
        reduced = reduce_sum(partial, table=ctx.table, budget=budget, boxes_ok=True)
        stack.extend(reduced)
    return out


def eval_box_web(w, ctx: ClaspContext = None, budget: int = 10 ** 6) -> RationalFunction:
    """Value of a closed web that may contain clasp boxes."""
    ctx = ctx or default_context()
    total = _ZERO
    for coeff, plain in expand_boxes(w, ctx, budget):
        total = total + coeff * eval_closed(plain, table=ctx.table, budget=budget)
    return total


# -- traces, thetas, braids ----------------------------------------------------------


def clasp_trace(weight, ctx: ClaspContext = None) -> RationalFunction:
    """Close the clasp in an annulus and evaluate (the quantum trace)."""
    ctx = ctx or default_context()
    a, b = weight
    label = ClaspLabel(a, b)
    if not label.expandable:
        raise NotImplementedError("mixed clasps (a,b) with a,b > 0 are labels only")
    if a == 0 and b == 0:
        return _ONE
    if a == 0:
        if b == 1:
            return eval_closed(wb.loop_web("d"), table=ctx.table)
        raise NotImplementedError(
            "double-type clasp traces are implemented for b <= 1 only")
    closed = wb.trace_closure(wb.clasp_box_web(a))
    return eval_box_web(closed, ctx)


def theta_net(a: int, b: int, c: int, ctx: ClaspContext = None) -> RationalFunction:
    """The closed network of clasps (a,0), (b,0), (c,0) joined pairwise."""
    for x in (a, b, c):
        if x < 0:
            raise ValueError("theta labels must be nonnegative")
    if (a + b + c) % 2:
        return _ZERO
    y_ab = (a + b - c) // 2
    y_ac = (a + c - b) // 2
    y_bc = (b + c - a) // 2
    if min(y_ab, y_ac, y_bc) < 0:
        return _ZERO
    ctx = ctx or default_context()

    def box_or_id(n):
        return wb.clasp_box_web(n) if n else wb.empty_web()

    top = wb.tensor(box_or_id(a), box_or_id(b))
    caps = wb.tensor(wb.tensor(_id(y_ac), rainbow_caps(y_ab)), _id(y_bc))
    cups = wb.mirror(caps)
    core = wb.compose(caps, wb.compose(top, cups))
    if c:
        core = wb.compose(core, box_or_id(c))
    closed = wb.trace_closure(core)
    return eval_box_web(closed, ctx)


def triple_space_dim(a: int, b: int, c: int, q_order=None) -> int:
    """Dimension (0 or 1) of the invariant space of three single-type clasps.

    Generic q: 1 iff the triple is admissible (even sum and triangle
    inequalities).  At a root of unity of the given order: additionally the
    order must exceed 2(a+b+c)+4, strictly.
    """
    for x in (a, b, c):
        if x < 0:
            raise ValueError("labels must be nonnegative")
    admissible = ((a + b + c) % 2 == 0 and a + b >= c and a + c >= b
                  and b + c >= a)
    if not admissible:
        return 0
    if q_order is not None and q_order <= 2 * (a + b + c) + 4:
        return 0
    return 1


def braid_web(word, n: int):
    """Braid word as a web: entries are nonzero signed generator indices,
    +i crossing strands (i, i+1) positively, 1-indexed."""
    out = _id(n)
    for g in word:
        if g == 0 or abs(g) >= n:
            raise ValueError(f"bad braid generator {g} on {n} strands")
        layer = _at(n, abs(g) - 1, wb.crossing_web(g > 0))
        out = wb.compose(layer, out)
    return out


def prune_box_sum(ws: WebSum, ctx: ClaspContext = None,
                  budget: int = 10 ** 6) -> WebSum:
    """Reduce a sum of webs containing opaque clasp boxes, dropping every term
    in which a box meets a turnback.

    Terms are dead-checked before any rewriting: smoothings wire turnbacks to
    the boxes through direct edges, so most of a crossing resolution dies at a
    glance and only the survivors pay for face reduction.
    """
    ctx = ctx or default_context()
    out = WebSum.zero()
    stack = [(c, w) for c, w in ws]
    while stack:
        coeff, web = stack.pop()
        if any(_box_is_dead(web, v) for v in _box_positions(web)):
            continue
        rewritten = _box_straighten_step(web) or _box_absorb_step(web)
        if rewritten is not None:
            stack.append((coeff, rewritten))
            continue
        key = web.canonical_key()
        reduced = reduce_sum(WebSum.from_web(web, coeff), table=ctx.table,
                             budget=budget, boxes_ok=True)
        for c2, w2 in reduced:
            if w2.canonical_key() == key:
                out.add(c2, w2)   # irreducible fixed point of the pipeline
            else:
                stack.append((c2, w2))
    return out


def braid_eigenvalue(word, n: int, ctx: ClaspContext = None,
                     verify: bool = None) -> RationalFunction:
    """The scalar by which a braid acts on the clasp: A to the signed
    crossing count.  For small inputs the identity b P = A^c P is verified
    by the engine unless ``verify`` is False.

    Verification works at the box level: after resolving the crossings, every
    smoothing that creates a turnback dies against the opaque box, so the
    composite must reduce to the pristine box scaled by the predicted power.
    If the reduced sum is not literally that, the comparison falls back to
    expanding the clasp and testing the difference through the closed pairing.
    """
    ctx = ctx or default_context()
    coeff_a = ctx.table.crossing[0]
    c = sum(1 if g > 0 else -1 for g in word)
    value = coeff_a ** c
    if verify is None:
        verify = n <= 3 and len(word) <= 4
    if verify:
        box = wb.clasp_box_web(n)
        b = eng.resolve_crossings(braid_web(word, n), table=ctx.table)
        lhs = prune_box_sum(sum_compose(b, WebSum.from_web(box)), ctx)
        target = WebSum.from_web(box, value)
        if set(lhs.terms) == set(target.terms) and \
                all(lhs.terms[k][0] == target.terms[k][0] for k in lhs.terms):
            return value
        diff = expand_boxes(lhs - target, ctx)
        if not sum_is_zero(diff, table=ctx.table):
            raise AssertionError(
                f"braid action on the clasp is not A^{c} as expected")
    return value

"""Projector expansion, axioms, traces, theta networks and the cache."""

import pytest

from c2spider import cat
from c2spider import clasp as cl
from c2spider import engine as eng
from c2spider import web as wb
from c2spider.cache import ClaspCache, cache_gc
from c2spider.ring import LaurentPoly, RationalFunction as RF, qint
from c2spider.rules import default_table

q = LaurentPoly.q_power


@pytest.fixture(scope="module")
def ctx(tmp_path_factory):
    table = default_table()
    root = tmp_path_factory.mktemp("clasp-cache")
    return cl.ClaspContext(table, ClaspCache(root=str(root),
                                             table_hash=table.table_hash()))


def test_clasp_label_expandable():
    assert cl.ClaspLabel(3, 0).expandable
    assert cl.ClaspLabel(0, 2).expandable
    assert not cl.ClaspLabel(1, 1).expandable
    with pytest.raises(ValueError):
        cl.ClaspLabel(-1, 0)


def test_expand_base_cases(ctx):
    p1 = cl.clasp_expand(1, "single", ctx)
    assert len(p1) == 1
    ((c, w),) = list(p1)
    assert c == RF.coerce(1) and w.n_vertices() == 0
    assert len(cl.clasp_expand(0, "single", ctx)) == 1
    assert len(cl.clasp_expand(1, "double", ctx)) == 1
    with pytest.raises(NotImplementedError):
        cl.clasp_expand(2, "double", ctx)


def test_recursion_coefficients_n2(ctx):
    c1, c2 = cl.recursion_coefficients(2, ctx)
    delta1 = ctx.table.loop["s"]
    assert c1 == RF.coerce(-1) / delta1
    assert c2 == RF.coerce(1) / RF.coerce(qint(2) * qint(2))


def test_expand_two_strands_shape(ctx):
    p2 = cl.clasp_expand(2, "single", ctx)
    assert len(p2) == 3
    shapes = sorted(w.n_vertices() for _, w in p2)
    assert shapes == [0, 0, 2]


def test_turnbacks(ctx):
    assert cl.turnback_kill(1, ctx) == {}
    for n in (2, 3):
        report = cl.turnback_kill(n, ctx)
        assert len(report) == n - 1
        assert all(v["cap"] and v["vertex"] for v in report.values())


def test_idempotence(ctx):
    for n in (2, 3):
        assert cl.idempotent(n, ctx)


def test_traces_match_quantum_dimensions(ctx):
    assert cl.clasp_trace((0, 0), ctx) == RF.coerce(1)
    assert cl.clasp_trace((1, 0), ctx) == ctx.table.loop["s"]
    assert cl.clasp_trace((0, 1), ctx) == ctx.table.loop["d"]
    # recorded convention: single-strand clasps carry the sign (-1)^n
    for n in (1, 2, 3):
        sign = RF.coerce((-1) ** n)
        assert cl.clasp_trace((n, 0), ctx) == sign * cat.qdim((n, 0))
    with pytest.raises(NotImplementedError):
        cl.clasp_trace((1, 1), ctx)
    with pytest.raises(NotImplementedError):
        cl.clasp_trace((0, 2), ctx)


def test_braid_eigenvalues(ctx):
    assert cl.braid_eigenvalue([], 2, ctx) == RF.coerce(1)
    assert cl.braid_eigenvalue([1], 2, ctx) == RF.coerce(q(1))
    assert cl.braid_eigenvalue([-1, -2], 3, ctx) == RF.coerce(q(-2))
    with pytest.raises(ValueError):
        cl.braid_eigenvalue([3], 3, ctx)


def test_braid_verification_catches_wrong_scalar(ctx):
    p = cl.clasp_expand(2, "single", ctx)
    b = eng.resolve_crossings(cl.braid_web([1], 2), table=ctx.table)
    lhs = eng.reduce_sum(eng.sum_compose(b, p), table=ctx.table)
    wrong = p.scale(RF.coerce(q(-1)))
    assert not eng.sums_equal(lhs, wrong, table=ctx.table)


def test_theta_degenerate_cases(ctx):
    assert cl.theta_net(0, 0, 0, ctx) == RF.coerce(1)
    assert cl.theta_net(1, 1, 1, ctx).is_zero()
    assert cl.theta_net(1, 1, 0, ctx) == cl.clasp_trace((1, 0), ctx)
    assert cl.theta_net(2, 2, 0, ctx) == cl.clasp_trace((2, 0), ctx)
    assert cl.theta_net(4, 1, 1, ctx).is_zero()   # triangle inequality fails


def test_theta_symmetry(ctx):
    a = cl.theta_net(2, 1, 1, ctx)
    assert a == cl.theta_net(1, 2, 1, ctx) == cl.theta_net(1, 1, 2, ctx)
    assert not a.is_zero()


def test_triple_space_dim():
    assert cl.triple_space_dim(2, 2, 2) == 1
    assert cl.triple_space_dim(4, 1, 1) == 0
    assert cl.triple_space_dim(1, 1, 1) == 0
    assert cl.triple_space_dim(2, 2, 2, q_order=16) == 0
    assert cl.triple_space_dim(2, 2, 2, q_order=20) == 1
    # the threshold 2(a+b+c)+4 is strict
    for order in range(12, 25):
        want = 1 if order > 16 else 0
        assert cl.triple_space_dim(2, 2, 2, q_order=order) == want


def test_box_turnback_detection(ctx):
    w = wb.clasp_box_web(2)
    capped = wb.compose(wb.cap_web("s"), w)
    closed = wb.compose(wb.compose(wb.cap_web("s"), w), wb.cup_web("s"))
    assert cl.eval_box_web(closed, ctx).is_zero()
    merged = wb.compose(wb.merge_vertex_web(), w)
    closed2 = wb.trace_closure(wb.compose(wb.split_vertex_web(), merged))
    assert cl.eval_box_web(closed2, ctx).is_zero()


def test_cache_roundtrip_and_gc(tmp_path):
    table = default_table()
    root = str(tmp_path / "cache")
    ctx1 = cl.ClaspContext(table, ClaspCache(root=root, table_hash=table.table_hash()))
    cl._MEMO.clear()
    p2 = cl.clasp_expand(2, "single", ctx1)
    cl._MEMO.clear()
    p2_again = cl.clasp_expand(2, "single", ctx1)
    assert {k for k in p2.terms} == {k for k in p2_again.terms}
    # stale entries are collected, fresh ones kept
    stale = ClaspCache(root=root, table_hash="deadbeef")
    stale.put("clasp-single-9", {"bogus": True})
    report = cache_gc(root, table.table_hash())
    assert report["removed"] == 1 and report["kept"] >= 1
    report2 = cache_gc(root, table.table_hash())
    assert report2["removed"] == 0

"""Smoke tests for the Python bindings: thin sanity passes over the main
operations; the exhaustive suites live in the C++ tests."""

import pytest

import defq


@pytest.fixture
def ctx():
    return defq.Context(d=2, N=3)


def test_parse_and_print_roundtrip(ctx):
    v = defq.parse(ctx, "1 + h*(x1 + x2) + h^2*(3/2*x1*x2)")
    assert v.kind == "scalar"
    assert defq.parse(ctx, str(v)) == v

    w = defq.parse(ctx, "h*(x1*dx1^dx2)")
    assert w.kind == "polyvec"
    op = defq.parse(ctx, "h*(x1*D[1|2])")
    assert op.kind == "operator"


def test_parse_errors_carry_location(ctx):
    with pytest.raises(ValueError):
        defq.parse(ctx, "x7")
    with pytest.raises(ValueError):
        defq.parse(ctx, "x1 ++ 2")


def test_moyal_is_mc_and_star(ctx):
    omega = defq.moyal(ctx, [[0, 1], [-1, 0]])
    assert defq.is_mc(ctx, "assoc", omega)
    assert defq.mc_defect(ctx, "assoc", omega).is_zero()

    x1 = defq.parse(ctx, "x1")
    x2 = defq.parse(ctx, "x2")
    skew = defq.star_mul(ctx, omega, x1, x2)
    expect = defq.parse(ctx, "x1*x2 + h*1")
    assert skew == expect

    # associator vanishes on a sample triple
    assert defq.assoc_defect(ctx, omega, x1, x2, x1).is_zero()

    # rational matrix entries as strings
    half = defq.moyal(ctx, [[0, "1/2"], ["-1/2", 0]])
    assert defq.is_mc(ctx, "assoc", half)


def test_non_mc_control(ctx):
    bad = defq.parse(ctx, "h*D[1|1]")
    assert not defq.is_mc(ctx, "assoc", bad)
    x1 = defq.parse(ctx, "x1")
    sq = defq.parse(ctx, "x1^2")
    assert not defq.assoc_defect(ctx, bad, sq, x1, x1).is_zero()


def test_poisson_bracket(ctx):
    omega = defq.parse(ctx, "h*(dx1^dx2)")
    a = defq.parse(ctx, "x1")
    b = defq.parse(ctx, "x2")
    assert defq.poisson_bracket(ctx, omega, a, b) == defq.parse(ctx, "h*(1/2)")
    assert defq.jacobiator(ctx, omega, a, b, defq.parse(ctx, "x1*x2")).is_zero()


def test_gauge_and_bch(ctx):
    omega = defq.moyal(ctx, [[0, 1], [-1, 0]])
    gamma = defq.parse(ctx, "h*(x1*D[1])")
    moved = defq.gauge_apply(ctx, "assoc", gamma, omega)
    assert defq.is_mc(ctx, "assoc", moved)

    g1 = defq.parse(ctx, "h*D[1,1]")
    g2 = defq.parse(ctx, "h*(x2*D[2])")
    log = defq.bch_log(ctx, "assoc", g1, g2)
    f = defq.parse(ctx, "x1^2*x2")
    lhs = defq.exp_apply(ctx, "assoc", log, f)
    rhs = defq.exp_apply(ctx, "assoc", g1, defq.exp_apply(ctx, "assoc", g2, f))
    assert lhs == rhs


def test_star_exp_and_inverse(ctx):
    omega = defq.moyal(ctx, [[0, 1], [-1, 0]])
    alpha = defq.parse(ctx, "h*x1")
    unit = defq.star_exp(ctx, omega, alpha)
    inv = defq.star_inverse(ctx, omega, unit)
    one = defq.parse(ctx, "1")
    assert defq.star_mul(ctx, omega, unit, inv) == one

    with pytest.raises(RuntimeError, match="localize at x1"):
        defq.star_inverse(ctx, omega, defq.parse(ctx, "x1"))


def test_recognize_and_order(ctx):
    phi = defq.parse(ctx, "D[1] + x2*D[2]")
    assert defq.op_order(ctx, phi, max_order=3, test_degree=6) == 1
    rec = defq.recognize(ctx, phi, order=2, coeff_degree=2)
    assert rec == phi


def test_geo_verify_report(ctx):
    omega = defq.moyal(ctx, [[0, 1], [-1, 0]])
    rep = defq.geo_verify(ctx, "assoc", omega, grid_degree=2, samples=2, s="x1", t="x2")
    assert rep["failed"] == 0
    names = {c["name"] for c in rep["checks"]}
    assert "01-mc-defect" in names
    assert any(n.startswith("07-") for n in names)

    bad = defq.parse(ctx, "h*D[1|1]")
    repbad = defq.geo_verify(ctx, "assoc", bad, grid_degree=2, samples=2)
    assert repbad["failed"] > 0
    mc = next(c for c in repbad["checks"] if c["name"] == "01-mc-defect")
    assert mc["status"] == "fail"
    # the witness re-parses in the same context
    assert not defq.parse(ctx, mc["witness"]).is_zero()


def test_cli_embedding():
    code, out, err = defq.run(["moyal", "--d", "2", "--pi", "0 1; -1 0", "--N", "2"])
    assert code == 0
    assert "let omega" in out
    # invalid usage propagates the exit contract
    code2, _, err2 = defq.run(["check-mc", "/nonexistent/path.doc"])
    assert code2 == 2
    assert err2


def test_poisson_geo_verify(ctx):
    omega = defq.parse(ctx, "h*(x1*dx1^dx2)")
    rep = defq.geo_verify(ctx, "poisson", omega, grid_degree=2, samples=2, s="x1")
    assert rep["failed"] == 0
    with pytest.raises(RuntimeError, match="plain polynomial"):
        defq.geo_verify(ctx, "poisson", omega, s="h*x1")

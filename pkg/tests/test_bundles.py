"""Bundle calculus: duals, twists, powers, Whitney sums, Segre, jets."""

import pytest

from folenum import (BundleError, abstract_surface_context, cotangent, dual,
                     integrate, jet, line, p2_context, segre, sym, tensor,
                     trivial_line, twist, wedge2, whitney)

BOTH_CONTEXTS = [p2_context(), abstract_surface_context()]


def _omega_d2(ctx):
    d, h = ctx.var("d"), ctx.var("h")
    return twist(cotangent(ctx), line((d + 2) * h))


def test_line_examples(p2):
    h, d = p2.var("h"), p2.var("d")
    assert line((d + 2) * h).chern == 1 + (d + 2) * h
    assert line(p2.zero()).chern == 1
    assert line(-3 * h).chern == wedge2(cotangent(p2)).chern


def test_line_rejects_mixed_weight(p2):
    with pytest.raises(BundleError):
        line(1 + p2.var("h"))


def test_cotangent_chern(p2):
    h = p2.var("h")
    assert cotangent(p2).chern == 1 - 3 * h + 3 * h ** 2


def test_cotangent_dual_cancellation(p2):
    om = cotangent(p2)
    assert (om.c(1) + dual(om).c(1)).is_zero()
    assert dual(om).c(1) == 3 * p2.var("h")


def test_singular_points_of_twisted_cotangent(p2):
    d = p2.scalars.var("d")
    assert integrate(_omega_d2(p2).c(2), p2) == d * d + d + 1


def test_dual_of_line(p2):
    c = (p2.var("d") + 1) * p2.var("h")
    assert dual(line(c)).chern == line(-c).chern


def test_dual_is_involution(p2):
    for B in (cotangent(p2), _omega_d2(p2), sym(2, cotangent(p2))):
        assert dual(dual(B)).chern == B.chern
        assert dual(dual(B)).rank == B.rank


def test_twist_by_trivial_is_identity(p2):
    B = cotangent(p2)
    T = twist(B, trivial_line(p2))
    assert T.chern == B.chern and T.rank == B.rank


def test_twisted_cotangent_chern_classes(p2):
    h, d = p2.var("h"), p2.var("d")
    E = _omega_d2(p2)
    # root-shift oracle: c1 = -3h + 2(d+2)h
    assert E.c(1) == (2 * d + 1) * h
    assert E.c(2) == (d * d + d + 1) * h ** 2


def test_twist_formula_path_matches_root_path(p2):
    B = cotangent(p2)
    L = line((p2.var("d") + 2) * p2.var("h"))
    rootless = type(B)(B.rank, B.chern, None)
    assert twist(rootless, L).chern == twist(B, L).chern


def test_tensor_of_lines(p2):
    h, d = p2.var("h"), p2.var("d")
    assert tensor(line(d * h), line(2 * h)).chern == line((d + 2) * h).chern


def test_tensor_with_trivial(p2):
    B = sym(2, cotangent(p2))
    T = tensor(B, trivial_line(p2))
    assert T.chern == B.chern and T.rank == B.rank


def test_sym2_twisted(p2):
    # roots 2a+m, a+b+m, 2b+m with m = (d+2)h
    h, d = p2.var("h"), p2.var("d")
    B = twist(sym(2, cotangent(p2)), line((d + 2) * h))
    assert B.c(1) == (3 * d - 3) * h
    assert B.c(2) == (3 * d * d - 6 * d + 6) * h ** 2


def test_sym_identities(p2):
    om = cotangent(p2)
    assert sym(1, om).chern == om.chern
    assert sym(0, om).chern == p2.one()
    assert sym(2, om).c(1) == -9 * p2.var("h")
    x = 2 * p2.var("h")
    assert sym(3, line(x)).chern == line(3 * x).chern


def test_sym_rejects_higher_rank(p2):
    with pytest.raises(BundleError):
        sym(2, jet(1, _omega_d2(p2)))


def test_wedge2(p2):
    h = p2.var("h")
    om = cotangent(p2)
    assert wedge2(om).chern == line(-3 * h).chern
    assert wedge2(dual(om)).chern == line(3 * h).chern
    tw = twist(om, line(h))
    assert wedge2(tw).c(1) == tw.c(1)
    with pytest.raises(BundleError):
        wedge2(line(h))


def test_whitney(p2):
    x, y = p2.var("h"), 2 * p2.var("h")
    W = whitney(line(x), line(y))
    assert W.chern == (1 + x) * (1 + y)
    assert W.rank == 2


def test_segre_examples(p2):
    h, d = p2.var("h"), p2.var("d")
    assert segre(trivial_line(p2)) == 1
    x = d * h
    assert segre(line(x)) == 1 - x + x ** 2
    E = twist(cotangent(p2), line((d - 1) * h))
    assert segre(E).weight_part(1) == -(2 * d - 5) * h


def test_jet_zero_is_identity(p2):
    E = _omega_d2(p2)
    J = jet(0, E)
    assert J.chern == E.chern and J.rank == E.rank


@pytest.mark.parametrize("k", range(1, 6))
def test_jet_rank(p2, k):
    assert jet(k - 1, _omega_d2(p2)).rank == k * (k + 1)


def test_jet_one_degree(p2):
    d = p2.scalars.var("d")
    assert integrate(jet(1, _omega_d2(p2)).c(2), p2) == 15 * d * d - 15 * d + 6


@pytest.mark.parametrize("ctx", BOTH_CONTEXTS, ids=["p2", "surface"])
def test_jet_whitney_identity(ctx):
    E = _omega_d2(ctx)
    om = cotangent(ctx)
    for k in range(0, 4):
        lhs = jet(k + 1, E).chern
        rhs = jet(k, E).chern * tensor(sym(k + 1, om), E).chern
        assert lhs == rhs


@pytest.mark.parametrize("ctx", BOTH_CONTEXTS, ids=["p2", "surface"])
def test_chern_times_segre_is_one(ctx):
    h, d = ctx.var("h"), ctx.var("d")
    candidates = [cotangent(ctx), _omega_d2(ctx), sym(3, cotangent(ctx)),
                  jet(2, _omega_d2(ctx)), dual(_omega_d2(ctx)),
                  whitney(line(d * h), sym(2, cotangent(ctx)))]
    for B in candidates:
        assert B.chern * segre(B) == 1


@pytest.mark.parametrize("ctx", BOTH_CONTEXTS, ids=["p2", "surface"])
def test_tensor_twist_agreement(ctx):
    L = line((ctx.var("d") + 2) * ctx.var("h"))
    for B in (cotangent(ctx), sym(2, cotangent(ctx))):
        assert tensor(B, L).chern == twist(B, L).chern


def test_rank_bookkeeping(p2):
    om = cotangent(p2)
    A, B = sym(2, om), sym(3, om)
    assert whitney(A, B).rank == A.rank + B.rank
    assert tensor(A, om).rank == A.rank * om.rank
    for k in range(5):
        assert sym(k, om).rank == k + 1

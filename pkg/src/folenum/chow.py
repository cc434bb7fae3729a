"""Ambient graded rings: the Chow ring of P^2 and of an abstract surface.

A context carries the hyperplane class ``h``, the formal Chern roots
``a, b`` of the cotangent bundle, the free degree parameter ``d`` (weight
0), and the intersection pairing used by :func:`integrate`.  On an
abstract surface the roots satisfy ``a + b = c1`` and ``a*b = c2`` with
``c1, c2`` the Chern classes of the cotangent bundle kept as free ring
variables; the pairing is either symbolic (in the four surface invariants
``h2, c1h, c1sq, c2``) or given by concrete intersection numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ring import GradedContext, Mono, Q, RingElement, RingError, mono

#: names of the weight-0 symbols a symbolic surface pairing evaluates into
SURFACE_NUMBER_SYMBOLS = ("h2", "c1h", "c1sq", "c2")


@dataclass(frozen=True)
class IntersectionNumbers:
    """The four intersection numbers of a polarized surface.

    ``h2 = \\int h^2``, ``c1h = \\int c1*h``, ``c1sq = \\int c1^2``,
    ``c2 = \\int c2`` with ``c_i`` the Chern classes of the cotangent
    bundle.  ``h2`` must be positive (h is ample).
    """

    h2: Fraction
    c1h: Fraction
    c1sq: Fraction
    c2: Fraction

    def __post_init__(self):
        for f in ("h2", "c1h", "c1sq", "c2"):
            object.__setattr__(self, f, Q(getattr(self, f)))
        if self.h2 <= 0:
            raise ValueError("h2 must be positive (ampleness of h)")


#: the intersection numbers of the projective plane
P2_NUMBERS = IntersectionNumbers(Q(1), Q(-3), Q(9), Q(3))


@lru_cache(maxsize=None)
def p2_context() -> GradedContext:
    """The Chow ring of P^2 truncated at weight 2.

    Variables ``h, a, b`` (weight 1) and ``d`` (weight 0); the roots of
    the cotangent bundle satisfy ``a + b = -3h`` and ``a*b = 3h^2`` from
    the dual Euler sequence, and ``\\int h^2 = 1``.
    """
    sc = GradedContext("p2.scalars", [("d", 0), ("k", 0)])
    ctx = GradedContext("p2", [("h", 1), ("a", 1), ("b", 1), ("d", 0)],
                        truncation=2, roots=("a", "b"))
    h = ctx.var("h")
    ctx.e1 = -3 * h
    ctx.e2 = 3 * h ** 2
    ctx.pairing = {mono(h=2): sc.one()}
    ctx.scalars = sc
    return ctx


@lru_cache(maxsize=None)
def abstract_surface_context(nums: IntersectionNumbers | None = None) -> GradedContext:
    """The Chow ring of an abstract polarized surface.

    With ``nums`` absent the pairing is symbolic: integrals come out as
    polynomials in the weight-0 symbols ``h2, c1h, c1sq, c2``.  With
    ``nums`` given, integrals are rational polynomials in ``d`` alone.
    """
    scalar_vars = [("d", 0), ("k", 0)]
    if nums is None:
        scalar_vars += [(s, 0) for s in SURFACE_NUMBER_SYMBOLS]
    tag = "sym" if nums is None else "num"
    sc = GradedContext(f"surface.scalars.{tag}", scalar_vars)
    ctx = GradedContext(f"surface.{tag}",
                        [("h", 1), ("a", 1), ("b", 1), ("c1", 1), ("c2", 2), ("d", 0)],
                        truncation=2, roots=("a", "b"))
    ctx.e1 = ctx.var("c1")
    ctx.e2 = ctx.var("c2")
    if nums is None:
        pair = {name: sc.var(sym) for name, sym in
                zip(("h2", "c1h", "c1sq", "c2"), SURFACE_NUMBER_SYMBOLS)}
    else:
        pair = {"h2": sc.scalar(nums.h2), "c1h": sc.scalar(nums.c1h),
                "c1sq": sc.scalar(nums.c1sq), "c2": sc.scalar(nums.c2)}
    ctx.pairing = {mono(h=2): pair["h2"], mono(h=1, c1=1): pair["c1h"],
                   mono(c1=2): pair["c1sq"], mono(c2=1): pair["c2"]}
    ctx.scalars = sc
    return ctx


def integrate(x: RingElement, ctx: GradedContext | None = None) -> RingElement:
    """Degree map: pair the weight-2 part of ``x`` against the context.

    Weight-0 and weight-1 parts are discarded.  The result is a weight-0
    element of the context's scalar ring; ``x`` must be fully reduced (no
    leftover Chern roots).
    """
    ctx = ctx or x.ctx
    if ctx.pairing is None:
        raise RingError(f"context {ctx.name} has no intersection pairing")
    x = ctx.lift(x)
    sc = ctx.scalars or ctx
    out = sc.zero()
    for m, c in x.weight_part(2).terms.items():
        pos = tuple((v, e) for v, e in m if ctx.weights[v] > 0)
        rest = tuple((v, e) for v, e in m if ctx.weights[v] == 0)
        if pos not in ctx.pairing:
            raise RingError(f"monomial {pos} has no pairing entry; "
                            "element is not fully reduced")
        out = out + c * sc.elem({rest: 1}) * ctx.pairing[pos]
    return out

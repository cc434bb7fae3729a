"""Chern-class calculus of vector bundles on a surface.

Bundles are tracked by rank and total Chern class (truncated at weight 2),
plus their Chern roots when these are available.  Tensor and symmetric
powers are computed on roots via the splitting principle; the cotangent
bundle always has the root pair of the ambient context, so everything the
degree formulas need decomposes into explicit roots.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import (GradedContext, RingElement, RingError, invert_unit,
                   symmetrize_in_roots)


class BundleError(RingError):
    """A bundle operation was called outside its domain."""


@dataclass(frozen=True)
class BundleClass:
    """A vector bundle up to its Chern data.

    ``chern`` is the total Chern class (constant term 1, root-free);
    ``roots`` are weight-1 ring elements whose elementary symmetric
    functions reproduce ``chern``, when the bundle was built from roots.
    """

    rank: int
    chern: RingElement
    roots: tuple[RingElement, ...] | None = None

    def c(self, i: int) -> RingElement:
        """The weight-``i`` Chern class."""
        return self.chern.weight_part(i)

    @property
    def ctx(self) -> GradedContext:
        return self.chern.ctx


def _chern_from_roots(roots, ctx: GradedContext) -> RingElement:
    prod = ctx.one()
    for r in roots:
        prod = prod * (ctx.one() + r)
    return symmetrize_in_roots(prod)


def _check_pure_weight_one(c: RingElement):
    for m in c.terms:
        if c.ctx.weight(m) != 1:
            raise BundleError(f"class {c!r} is not of pure weight 1")


def line(c: RingElement) -> BundleClass:
    """Line bundle with first Chern class ``c`` (pure weight 1)."""
    _check_pure_weight_one(c)
    return BundleClass(1, symmetrize_in_roots(c.ctx.one() + c), (c,))


def trivial_line(ctx: GradedContext) -> BundleClass:
    return BundleClass(1, ctx.one(), (ctx.zero(),))


def cotangent(ctx: GradedContext) -> BundleClass:
    """The rank-2 cotangent bundle, with the context's root pair."""
    if ctx.roots is None:
        raise BundleError(f"context {ctx.name} has no cotangent roots")
    ra, rb = ctx.roots
    roots = (ctx.var(ra), ctx.var(rb))
    return BundleClass(2, _chern_from_roots(roots, ctx), roots)


def dual(B: BundleClass) -> BundleClass:
    ctx = B.ctx
    chern = ctx.zero()
    top = ctx.truncation if ctx.truncation is not None else B.chern.max_weight()
    for w in range(top + 1):
        chern = chern + (-1) ** w * B.chern.weight_part(w)
    roots = tuple(-r for r in B.roots) if B.roots is not None else None
    return BundleClass(B.rank, chern, roots)


def twist(B: BundleClass, L: BundleClass) -> BundleClass:
    """Tensor with a line bundle."""
    if L.rank != 1:
        raise BundleError(f"twist requires a line bundle, got rank {L.rank}")
    ctx = B.ctx
    if B.roots is not None:
        t = L.roots[0] if L.roots is not None else L.c(1)
        roots = tuple(r + t for r in B.roots)
        return BundleClass(B.rank, _chern_from_roots(roots, ctx), roots)
    t = L.c(1)
    r = B.rank
    c1 = B.c(1) + r * t
    c2 = B.c(2) + (r - 1) * B.c(1) * t + (r * (r - 1) // 2) * t ** 2
    return BundleClass(r, ctx.one() + c1 + c2, None)


def tensor(A: BundleClass, B: BundleClass) -> BundleClass:
    """Tensor product via Chern roots (pairwise sums)."""
    if A.rank == 1:
        return twist(B, A)
    if B.rank == 1:
        return twist(A, B)
    if A.roots is None or B.roots is None:
        raise BundleError("tensor of rank >= 2 bundles requires Chern roots")
    roots = tuple(ra + rb for ra in A.roots for rb in B.roots)
    return BundleClass(A.rank * B.rank, _chern_from_roots(roots, A.ctx), roots)


def sym(k: int, B: BundleClass) -> BundleClass:
    """k-th symmetric power of a bundle of rank <= 2."""
    if k < 0:
        raise BundleError("symmetric power needs k >= 0")
    ctx = B.ctx
    if k == 0:
        return trivial_line(ctx)
    if B.rank == 1:
        r = B.roots[0] if B.roots is not None else B.c(1)
        return line(k * r)
    if B.rank == 2:
        if B.roots is None:
            raise BundleError("rank-2 symmetric power requires Chern roots")
        r, s = B.roots
        roots = tuple(i * r + (k - i) * s for i in range(k + 1))
        return BundleClass(k + 1, _chern_from_roots(roots, ctx), roots)
    raise BundleError(f"symmetric power unsupported for rank {B.rank}")


def wedge2(B: BundleClass) -> BundleClass:
    """Determinant line of a rank-2 bundle."""
    if B.rank != 2:
        raise BundleError(f"wedge2 requires rank 2, got {B.rank}")
    if B.roots is not None:
        return line(B.roots[0] + B.roots[1])
    return line(B.c(1))


def whitney(A: BundleClass, B: BundleClass) -> BundleClass:
    """Direct-sum Chern data: ranks add, total classes multiply."""
    roots = None
    if A.roots is not None and B.roots is not None:
        roots = A.roots + B.roots
    return BundleClass(A.rank + B.rank, A.chern * B.chern, roots)


def segre(B: BundleClass) -> RingElement:
    """Total Segre class: the inverse of the total Chern class."""
    return invert_unit(B.chern)


def jet(k: int, E: BundleClass, ctx: GradedContext | None = None) -> BundleClass:
    """Bundle of k-th order principal parts of ``E``.

    Chern data from the exact sequences
    ``0 -> S^j Omega (x) E -> P^j(E) -> P^(j-1)(E) -> 0``:
    the total class is the product of ``c(S^j Omega (x) E)`` for
    ``j = 0..k``, and the rank is ``rank(E) * (k+1)(k+2)/2`` on a surface.
    """
    if k < 0:
        raise BundleError("jet order must be >= 0")
    ctx = ctx or E.ctx
    omega = cotangent(ctx)
    acc = E
    for j in range(1, k + 1):
        acc = whitney(acc, tensor(sym(j, omega), E))
    return acc

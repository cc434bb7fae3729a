"""Truncated graded multivariate polynomials with exact rational coefficients.

Elements live in a :class:`GradedContext` which fixes the variables, their
weights, a truncation bound on the total weight, and (optionally) a pair of
"root" variables together with the values their elementary symmetric
functions take.  All arithmetic is exact; there is no floating point
anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence, Union

Q = Fraction
ScalarLike = Union[int, Fraction]

# A monomial is a tuple of (variable, exponent) pairs, sorted by variable
# name, with all exponents positive.  The empty tuple is the unit monomial.
Mono = tuple


class RingError(Exception):
    """Base class for exact-algebra errors."""


class ContextMismatch(RingError):
    """Operands belong to incompatible contexts."""


class NotAUnit(RingError):
    """Inversion requested for an element whose constant term is not 1."""


class NotSymmetric(RingError):
    """Symmetrization requested for an element not symmetric in the roots."""


def mono(**exps: int) -> Mono:
    """Build a monomial from keyword exponents, e.g. ``mono(h=2)``."""
    return mono_from(exps)


def mono_from(exps: Mapping[str, int]) -> Mono:
    for e in exps.values():
        if e < 0:
            raise RingError("negative exponent in monomial")
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_str(m: Mono) -> str:
    if not m:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class GradedContext:
    """Variables, weights, truncation bound and root data for a graded ring.

    ``truncation`` is the maximal total weight kept by multiplication
    (``None`` disables truncation, as in weight-0 scalar rings).  When
    ``roots = (a, b)`` is set, ``e1``/``e2`` hold the ring values of
    ``a + b`` and ``a * b`` used by :func:`symmetrize_in_roots`.
    """

    def __init__(self, name: str, variables: Sequence[tuple[str, int]],
                 truncation: int | None = None,
                 roots: tuple[str, str] | None = None):
        self.name = name
        self.weights: dict[str, int] = dict(variables)
        if len(self.weights) != len(variables):
            raise RingError("duplicate variable name")
        self.truncation = truncation
        self.roots = roots
        if roots is not None:
            for r in roots:
                if self.weights.get(r) != 1:
                    raise RingError(f"root variable {r!r} must have weight 1")
        # set by context builders after construction
        self.e1: RingElement | None = None
        self.e2: RingElement | None = None
        self.pairing: dict[Mono, "RingElement"] | None = None
        self.scalars: GradedContext | None = None

    def __repr__(self) -> str:
        return f"GradedContext({self.name!r})"

    def weight(self, m: Mono) -> int:
        w = 0
        for v, e in m:
            try:
                w += self.weights[v] * e
            except KeyError:
                raise RingError(f"unknown variable {v!r} in context {self.name}")
        return w

    def knows(self, m: Mono) -> bool:
        return all(v in self.weights for v, _ in m)

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return RingElement(self, {(): Q(1)})

    def scalar(self, q: ScalarLike) -> "RingElement":
        q = Q(q)
        return RingElement(self, {(): q} if q else {})

    def var(self, name: str, exp: int = 1) -> "RingElement":
        if name not in self.weights:
            raise RingError(f"unknown variable {name!r} in context {self.name}")
        return self.elem({mono_from({name: exp}): Q(1)})

    def elem(self, terms: Mapping[Mono, ScalarLike]) -> "RingElement":
        clean: dict[Mono, Q] = {}
        for m, c in terms.items():
            c = Q(c)
            if not c:
                continue
            if self.truncation is not None and self.weight(m) > self.truncation:
                continue
            clean[m] = clean.get(m, Q(0)) + c
        return RingElement(self, {m: c for m, c in clean.items() if c})

    def lift(self, x: "RingElement") -> "RingElement":
        """Re-home an element from a weight-compatible context."""
        if x.ctx is self:
            return x
        for m in x.terms:
            for v, _ in m:
                if self.weights.get(v) != x.ctx.weights[v]:
                    raise ContextMismatch(
                        f"cannot lift element using {v!r} into context {self.name}")
        return self.elem(x.terms)


def _result_ctx(a: "RingElement", b: "RingElement") -> GradedContext:
    """Pick the context that can host both operands."""
    if a.ctx is b.ctx:
        return a.ctx
    a_fits = all(b.ctx.weights.get(v) == a.ctx.weights[v]
                 for m in a.terms for v, _ in m)
    b_fits = all(a.ctx.weights.get(v) == b.ctx.weights[v]
                 for m in b.terms for v, _ in m)
    if b_fits and not (a_fits and a.ctx.truncation is None):
        return a.ctx
    if a_fits:
        return b.ctx
    raise ContextMismatch(f"contexts {a.ctx.name} and {b.ctx.name} are incompatible")


class RingElement:
    """Immutable polynomial, canonical as a map monomial -> nonzero rational."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GradedContext, terms: dict[Mono, Q]):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *args):
        raise AttributeError("RingElement is immutable")

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Q:
        return self.terms.get((), Q(0))

    def weight_part(self, w: int) -> "RingElement":
        return RingElement(self.ctx, {m: c for m, c in self.terms.items()
                                      if self.ctx.weight(m) == w})

    def max_weight(self) -> int:
        return max((self.ctx.weight(m) for m in self.terms), default=0)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def coefficient_of(self, m: Mono) -> "RingElement":
        """Coefficient of ``m`` in the positive-weight variables.

        The result collects the weight-0 cofactors of every term whose
        positive-weight part equals ``m``, and lives in the scalar
        sub-context when the context has one.
        """
        out_ctx = self.ctx.scalars or self.ctx
        terms: dict[Mono, Q] = {}
        for full, c in self.terms.items():
            pos = tuple((v, e) for v, e in full if self.ctx.weights[v] > 0)
            if pos != m:
                continue
            rest = tuple((v, e) for v, e in full if self.ctx.weights[v] == 0)
            terms[rest] = terms.get(rest, Q(0)) + c
        return out_ctx.elem(terms)

    def substitute(self, assignments: Mapping[str, ScalarLike | "RingElement"]) -> "RingElement":
        """Substitute values for weight-0 variables."""
        for v in assignments:
            if self.ctx.weights.get(v, 0) != 0:
                raise RingError(f"can only substitute weight-0 variables, not {v!r}")
        out = self.ctx.zero()
        for m, c in self.terms.items():
            factor = self.ctx.scalar(c)
            rest: dict[str, int] = {}
            for v, e in m:
                if v in assignments:
                    val = assignments[v]
                    if not isinstance(val, RingElement):
                        val = self.ctx.scalar(val)
                    factor = factor * val ** e
                else:
                    rest[v] = e
            out = out + factor * self.ctx.elem({mono_from(rest): 1})
        return out

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "RingElement | None":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx = _result_ctx(self, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Q(0)) + c
        return ctx.elem(terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx = _result_ctx(self, other)
        bound = ctx.truncation
        terms: dict[Mono, Q] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                if bound is not None and ctx.weight(m) > bound:
                    continue
                terms[m] = terms.get(m, Q(0)) + c1 * c2
        return ctx.elem(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and other != 0:
            return RingElement(self.ctx, {m: c / other for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise RingError("only nonnegative integer powers")
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ctx is not other.ctx:
            try:
                _result_ctx(self, other)
            except ContextMismatch:
                return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- printing ---------------------------------------------------------

    def _sort_key(self, m: Mono):
        total = sum(e for _, e in m)
        return (-self.ctx.weight(m), -total, tuple((v, -e) for v, e in m))

    def text(self) -> str:
        """Canonical ASCII form, e.g. ``66*d^2 - 198*d + 153``."""
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self._sort_key):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            if m and cs == "1":
                body = mono_str(m)
            elif m:
                body = f"{cs}*{mono_str(m)}"
            else:
                body = cs
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"<{self.text()}>"


# -- module operations ----------------------------------------------------

def invert_unit(x: RingElement) -> RingElement:
    """Inverse of an element with constant term 1, by finite geometric series.

    The non-constant part must consist of positive-weight terms so the
    series terminates at the truncation bound.
    """
    if x.constant() != 1:
        raise NotAUnit(f"constant term is {x.constant()}, expected 1")
    n = x - 1
    if n.is_zero():
        return x.ctx.one()
    for m in n.terms:
        if x.ctx.weight(m) == 0:
            raise NotAUnit("non-constant weight-0 part is not invertible by truncation")
    if x.ctx.truncation is None:
        raise NotAUnit("inversion requires a truncated context")
    out = x.ctx.one()
    p = x.ctx.one()
    for _ in range(x.ctx.truncation):
        p = p * (-n)
        if p.is_zero():
            break
        out = out + p
    return out


def symmetrize_in_roots(x: RingElement) -> RingElement:
    """Eliminate the context's root pair from a symmetric element.

    Occurrences of the roots ``(a, b)`` are rewritten through the
    elementary symmetric functions ``e1 = a + b``, ``e2 = a*b`` and then
    replaced by the context's ``e1``/``e2`` values.  Raises
    :class:`NotSymmetric` if the element has a nonzero antisymmetric part.
    """
    ctx = x.ctx
    if ctx.roots is None or ctx.e1 is None or ctx.e2 is None:
        raise RingError(f"context {ctx.name} has no root data")
    ra, rb = ctx.roots
    groups: dict[Mono, dict[tuple[int, int], Q]] = {}
    for m, c in x.terms.items():
        exps = dict(m)
        i = exps.pop(ra, 0)
        j = exps.pop(rb, 0)
        rest = tuple(sorted(exps.items()))
        groups.setdefault(rest, {})[(i, j)] = c
    total = ctx.zero()
    for rest, ab in groups.items():
        for (i, j), c in ab.items():
            if ab.get((j, i), Q(0)) != c:
                raise NotSymmetric(f"antisymmetric part at {ra}^{i}*{rb}^{j}")
        acc = ctx.zero()
        work = dict(ab)
        while work:
            i, j = max(work, key=lambda t: (t[0] + t[1], t[0]))
            c = work[(i, j)]
            acc = acc + c * ctx.e1 ** (i - j) * ctx.e2 ** j
            # subtract c * (a+b)^(i-j) * (ab)^j, expanded in the roots;
            # the t = i-j term cancels the leading monomial exactly
            for t in range(i - j + 1):
                key = (t + j, i - t)
                work[key] = work.get(key, Q(0)) - c * comb(i - j, t)
                if not work[key]:
                    del work[key]
        total = total + acc * ctx.elem({rest: 1})
    return total


def interpolate_univariate(points: Iterable[tuple[int, RingElement]],
                           var: str) -> RingElement:
    """Exact Lagrange interpolation in a weight-0 variable.

    ``points`` are ``(abscissa, ordinate)`` pairs; the result is the unique
    polynomial of degree < #points in ``var`` through them, with the
    ordinates as coefficients.
    """
    pts = list(points)
    if len(pts) < 2:
        raise RingError("need at least 2 interpolation points")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise RingError("duplicate abscissae")
    ctx = pts[0][1].ctx
    if ctx.weights.get(var, None) != 0:
        raise RingError(f"{var!r} must be a weight-0 variable of the context")
    X = ctx.var(var)
    out = ctx.zero()
    for xi, yi in pts:
        basis = ctx.one()
        for xj, _ in pts:
            if xj == xi:
                continue
            basis = basis * (X - xj) / (xi - xj)
        out = out + yi * basis
    return out

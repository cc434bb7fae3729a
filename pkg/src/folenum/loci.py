"""Degrees and codimensions of the singular-foliation loci.

Assembles the bundle calculus into the enumerative answers for the three
nested loci in the parameter space of degree-d plane foliations:

* ``M_k`` -- foliations with a singularity of order >= k,
* ``D_k`` -- with a dicritical singularity of order >= k,
* ``C_k`` -- dicritical with a leaf of maximal contact after blowup.

Every degree is an exact polynomial in the free parameter ``d``; the
pipeline route (Chern/Segre classes of jet bundles) and the closed-form
route are kept independent so they can cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bundles import BundleClass, cotangent, jet, line, segre, sym, tensor, twist
from .chow import (P2_NUMBERS, SURFACE_NUMBER_SYMBOLS, IntersectionNumbers,
                   abstract_surface_context, integrate, p2_context)
from .ring import (GradedContext, Q, RingElement, RingError,
                   interpolate_univariate)

VALIDITY = {"M": "1 <= k <= d+1", "D": "1 <= k <= d", "C": "2 <= k <= d"}


@dataclass(frozen=True)
class LocusReport:
    """Codimension, degree polynomial and rank bookkeeping for one locus."""

    locus: str                      # "M" | "D" | "C"
    k: int
    codim: int
    degree: RingElement             # weight-0 polynomial in d
    validity: str
    rank_m: RingElement             # rank of the bundle behind M_k, in d
    rank_d: RingElement             # rank of the bundle behind D_k, in d
    flags: tuple[str, ...] = ()

    def degree_at(self, d: int) -> Fraction:
        return self.degree.substitute({"d": d}).constant()

    def flags_at(self, d: int) -> tuple[str, ...]:
        """Warnings that only materialize for a concrete degree d."""
        out = list(self.flags)
        lo = 2 if self.locus == "C" else 1
        hi = d + 1 if self.locus == "M" else d
        if not lo <= self.k <= hi:
            out.append(f"k={self.k} outside validity range {self.validity} for d={d}; "
                       "value is the formal polynomial evaluation")
        if self.k == d + 1 and self.locus in ("M", "D"):
            out.append("order d+1 singularities are automatically dicritical: "
                       "M_{d+1} = D_{d+1}")
        return tuple(out)


@dataclass(frozen=True)
class VkCoefficients:
    """Coefficients (u, v, w) of the Veronese cycle class against h-powers."""

    u: RingElement
    v: RingElement
    w: RingElement


def _sc(ctx: GradedContext) -> GradedContext:
    return ctx.scalars or ctx


def _as_scalar(k, sc: GradedContext) -> RingElement:
    if isinstance(k, RingElement):
        return k
    if isinstance(k, str):
        return sc.var(k)
    return sc.scalar(k)


def omega_twisted(ctx: GradedContext, shift: int = 2) -> BundleClass:
    """The twisted cotangent bundle Omega((d + shift) h)."""
    d = ctx.var("d")
    h = ctx.var("h")
    return twist(cotangent(ctx), line((d + shift) * h))


def foliation_space_dim(ctx: GradedContext | None = None) -> RingElement:
    """Dimension of the projective space of degree-d foliations: d^2+4d+2."""
    sc = _sc(ctx or p2_context())
    d = sc.var("d")
    return d * d + 4 * d + 2


def singular_point_count(ctx: GradedContext | None = None) -> RingElement:
    """Number of singular points of a generic foliation, via c2 of the
    twisted cotangent bundle.  Must equal d^2 + d + 1."""
    ctx = ctx or p2_context()
    return integrate(omega_twisted(ctx).c(2), ctx)


def rank_m(k: int, sc: GradedContext) -> RingElement:
    # corank of M_k in the section space is the rank of the jet bundle
    d = sc.var("d")
    return d * d + 4 * d + 3 - k * (k + 1)


def rank_d(k: int, sc: GradedContext) -> RingElement:
    return rank_m(k, sc) - (k + 2)


# -- M_k ------------------------------------------------------------------

def deg_M(k: int, ctx: GradedContext | None = None) -> LocusReport:
    """Degree of the order->=k singularity locus, from c2 of the (k-1)-jets
    of the twisted cotangent bundle."""
    if k < 1:
        raise RingError("deg_M needs k >= 1")
    ctx = ctx or p2_context()
    P = jet(k - 1, omega_twisted(ctx), ctx)
    degree = integrate(P.c(2), ctx)
    sc = _sc(ctx)
    return LocusReport("M", k, k * (k + 1) - 2, degree, VALIDITY["M"],
                       rank_m(k, sc), rank_d(k, sc))


def closed_form_M(k, sc: GradedContext | None = None) -> RingElement:
    """Closed-form degree of M_k, polynomial in k and d."""
    sc = sc or _sc(p2_context())
    K = _as_scalar(k, sc)
    d = sc.var("d")
    return (K * (K + 1) / 2) * (
        (K * K + K - 1) * (d * d - (2 * K - 3) * d)
        + Fraction(1, 4) * (4 * K ** 4 - 8 * K ** 3 - 7 * K ** 2 + 21 * K - 6))


def general_surface_deg_M(k: int,
                          nums: IntersectionNumbers | None = None) -> RingElement:
    """Degree of M_k on an abstract polarized surface.

    With ``nums`` absent the result is linear in the four symbolic
    intersection numbers ``h2, c1h, c1sq, c2``; substituting the numbers
    of P^2 reproduces :func:`deg_M`.
    """
    ctx = abstract_surface_context(nums)
    return deg_M(k, ctx).degree


def specialize_surface(x: RingElement,
                       nums: IntersectionNumbers = P2_NUMBERS) -> RingElement:
    """Substitute concrete intersection numbers into a symbolic surface degree."""
    values = dict(zip(SURFACE_NUMBER_SYMBOLS,
                      (nums.h2, nums.c1h, nums.c1sq, nums.c2)))
    return x.substitute({v: q for v, q in values.items() if v in x.ctx.weights})


# -- D_k ------------------------------------------------------------------

def _dicritical_total_class(k: int, ctx: GradedContext) -> RingElement:
    # total Segre class of the bundle behind D_k:
    # c(P^{k-1}(Omega(d+2))) * c(S^{k+1}Omega (x) O(d+2))
    E = omega_twisted(ctx)
    d = ctx.var("d")
    h = ctx.var("h")
    S = twist(sym(k + 1, cotangent(ctx)), line((d + 2) * h))
    return jet(k - 1, E, ctx).chern * S.chern


def deg_D(k: int, ctx: GradedContext | None = None) -> LocusReport:
    """Degree of the dicritical locus, from the degree-2 part of
    c(P^{k-1}(Omega(d+2))) * c(S^{k+1}Omega(d+2))."""
    if k < 1:
        raise RingError("deg_D needs k >= 1")
    ctx = ctx or p2_context()
    degree = integrate(_dicritical_total_class(k, ctx), ctx)
    sc = _sc(ctx)
    return LocusReport("D", k, k * (k + 2), degree, VALIDITY["D"],
                       rank_m(k, sc), rank_d(k, sc))


def closed_form_D(k, reading: str = "corrected",
                  sc: GradedContext | None = None) -> RingElement:
    """Closed-form degree of D_k.

    The printed corollary carries an extra ``(k+1)^2`` factor on the
    ``d^2`` term which contradicts the radial case k=1; ``reading``
    selects ``"as-printed"`` or ``"corrected"`` (extra factor dropped).
    The pipeline :func:`deg_D` is the authority; see :func:`verify_all`.
    """
    if reading not in ("as-printed", "corrected"):
        raise RingError(f"unknown reading {reading!r}")
    sc = sc or _sc(p2_context())
    K = _as_scalar(k, sc)
    d = sc.var("d")
    d2_coeff = Fraction(1, 2) * (K * K + 2 * K + 1 + 1)  # (k^2+2k+2)/2
    if reading == "as-printed":
        d2_coeff = d2_coeff * (K + 1) ** 2
    return (K + 1) ** 2 * (
        Fraction(1, 2) * (K ** 4 + K ** 2 - 2 * K + 2)
        - (K ** 3 + K ** 2 + K - 1) * d
        + d2_coeff * d * d)


# -- maximal contact ------------------------------------------------------

def vk_coeffs(k: int, ctx: GradedContext | None = None) -> VkCoefficients:
    """Coefficients (u, v, w) of the Veronese-image cycle class, computed
    from the Segre classes of Omega(d-1) and S^{k-1}Omega (x) O((d-1)h).

    Valid for k >= 2; u = k-1 always, and v, w carry an explicit (k-2)
    factor.  Works on P^2, where the ambient Chow ring is generated by h.
    """
    if k < 2:
        raise RingError("vk_coeffs needs k >= 2")
    ctx = ctx or p2_context()
    sc = _sc(ctx)
    d = ctx.var("d")
    h = ctx.var("h")
    L = line((d - 1) * h)
    E = twist(cotangent(ctx), L)
    Ek = twist(sym(k - 1, cotangent(ctx)), L)
    sE = segre(E)
    sEk = segre(Ek)
    u = sc.scalar(k - 1)
    v = ((k - 1) ** 2 * sE.weight_part(1)
         - (k - 1) * sEk.weight_part(1)).coefficient_of((("h", 1),))
    w = integrate((k - 1) ** 3 * sE.weight_part(2)
                  - u * sEk.weight_part(2)
                  - v * h * sEk.weight_part(1), ctx)
    return VkCoefficients(u, v, w)


def closed_vk(k, sc: GradedContext | None = None) -> VkCoefficients:
    """The stated closed forms for (u, v, w)."""
    sc = sc or _sc(p2_context())
    K = _as_scalar(k, sc)
    d = sc.var("d")
    u = K - 1
    v = Fraction(-1, 2) * (K - 1) * (K - 2) * (3 * K + 2 * d - 5)
    w = Fraction(1, 8) * (K - 2) * (K - 1) ** 2 * (
        9 * K * K - 47 * K + 12 * K * d - 60 * d + 72 + 12 * d * d)
    return VkCoefficients(u, v, w)


def deg_C(k: int, ctx: GradedContext | None = None) -> LocusReport:
    """Degree of the maximal-contact locus: the Veronese class coefficients
    paired against the Segre classes of the dicritical bundle."""
    if k < 2:
        raise RingError("deg_C needs k >= 2 (maximal contact needs order >= 2)")
    ctx = ctx or p2_context()
    total = _dicritical_total_class(k, ctx)
    vk = vk_coeffs(k, ctx)
    h = ctx.var("h")
    integrand = (vk.u * total.weight_part(2)
                 + vk.v * h * total.weight_part(1)
                 + vk.w * h ** 2)
    degree = integrate(integrand, ctx)
    sc = _sc(ctx)
    return LocusReport("C", k, k * k + 3 * k - 2, degree, VALIDITY["C"],
                       rank_m(k, sc), rank_d(k, sc))


def closed_form_C(k, sc: GradedContext | None = None) -> RingElement:
    """Closed-form degree of C_k, polynomial in k and d."""
    sc = sc or _sc(p2_context())
    K = _as_scalar(k, sc)
    d = sc.var("d")
    return (K - 1) / 2 * (
        Fraction(1, 4) * (4 * K ** 6 + 20 * K ** 5 - 15 * K ** 4 - 66 * K ** 3
                          + 211 * K ** 2 - 218 * K + 112)
        - (2 * K ** 5 + 7 * K ** 4 + 2 * K ** 3 + 24 * K ** 2 - 49 * K + 44) * d
        + (K ** 4 + 2 * K ** 3 + 10 * K ** 2 + K + 16) * d * d)


DEG_FUNCS = {"M": deg_M, "D": deg_D, "C": deg_C}
CLOSED_FORMS = {"M": closed_form_M,
                "D": lambda k, sc=None: closed_form_D(k, "corrected", sc),
                "C": closed_form_C}
#: degree in k of each closed-form degree polynomial
K_DEGREE = {"M": 6, "D": 6, "C": 7}


def recover_bivariate(locus: str, k_values) -> RingElement:
    """Exact interpolation over k of pipeline degrees, as a polynomial in
    (k, d).  Needs more sample points than the k-degree of the target."""
    if locus not in DEG_FUNCS:
        raise RingError(f"unknown locus {locus!r}")
    ks = list(k_values)
    if len(ks) <= K_DEGREE[locus]:
        raise RingError(f"need at least {K_DEGREE[locus] + 1} sample points "
                        f"for locus {locus}, got {len(ks)}")
    points = [(k, DEG_FUNCS[locus](k).degree) for k in ks]
    return interpolate_univariate(points, "k")


# -- verification ---------------------------------------------------------

@dataclass(frozen=True)
class CheckEntry:
    check: str
    k: int | None
    expected: str
    got: str
    status: str  # "pass" | "fail" | "flagged"

    def to_dict(self) -> dict:
        return {"check": self.check, "k": self.k, "expected": self.expected,
                "got": self.got, "status": self.status}


@dataclass
class VerificationReport:
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, check: str, k: int | None, expected, got,
            flag_only: bool = False):
        ok = expected == got
        status = "pass" if ok else ("flagged" if flag_only else "fail")
        exp_s = expected.text() if isinstance(expected, RingElement) else str(expected)
        got_s = got.text() if isinstance(got, RingElement) else str(got)
        self.entries.append(CheckEntry(check, k, exp_s, got_s, status))

    @property
    def ok(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]


def verify_all(k_max: int) -> VerificationReport:
    """Run every cross-check between the pipeline and the closed forms.

    Mismatches become report entries, never silent passes.  The
    "as-printed" reading of the D-degree corollary is checked with status
    ``flagged``: it is known to contradict the radial case k=1.
    """
    if k_max < 2:
        raise RingError("verify_all needs k_max >= 2")
    rep = VerificationReport()
    sc = _sc(p2_context())
    d = sc.var("d")

    rep.add("deg_M(1) = singular_point_count", 1,
            singular_point_count(), deg_M(1).degree)
    for k in range(1, k_max + 1):
        rep.add("M pipeline vs closed form", k,
                closed_form_M(k), deg_M(k).degree)

    rep.add("deg_D(1) radial degree", 1,
            10 * d * d - 8 * d + 4, deg_D(1).degree)
    rep.add("codim D_1", 1, 3, deg_D(1).codim)
    for k in range(1, k_max + 1):
        rep.add("D pipeline vs corrected reading of the degree corollary", k,
                closed_form_D(k, "corrected"), deg_D(k).degree)
        rep.add("D pipeline vs as-printed reading of the degree corollary", k,
                closed_form_D(k, "as-printed"), deg_D(k).degree, flag_only=True)

    for k in range(2, k_max + 1):
        got = vk_coeffs(k)
        exp = closed_vk(k)
        rep.add("Veronese coefficients (u, v, w) vs closed forms", k,
                (exp.u, exp.v, exp.w), (got.u, got.v, got.w))

    rep.add("deg_C(2) = deg_D(2)", 2, deg_D(2).degree, deg_C(2).degree)
    for k in range(2, k_max + 1):
        rep.add("C pipeline vs closed form", k,
                closed_form_C(k), deg_C(k).degree)
        rep.add("codim_C - codim_D = k - 2", k, k - 2,
                deg_C(k).codim - deg_D(k).codim)

    for k in range(1, k_max + 1):
        rep.add("general surface degree specializes to P^2", k,
                deg_M(k).degree,
                specialize_surface(general_surface_deg_M(k)))
    return rep

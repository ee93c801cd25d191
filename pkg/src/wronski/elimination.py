"""Projection of the three-polynomial systems to the deformation axis, and
exact real intersection counting for pairs of plane curves.

Iterated resultants land in the elimination ideal, so the univariate output E
vanishes at the t-coordinate of every solution; absence of real roots of E
(together with the stripped t-power and content factors, which are reported,
never discarded silently) in an interval therefore certifies absence of real
solutions there.  The converse fails in general: iterated resultants carry
extraneous factors, and real roots of E may also come from solutions with
nonreal x, y.  Two honest strengthenings are implemented:

* refinement: the same projection computed with a different pivot or after a
  determinant-one change of coordinates is another multiple of the true
  eliminant, so the gcd of several routes is one as well and typically sheds
  the extraneous factors;
* certificates: if one partial projection, after stripping its t-content, is
  a polynomial in the other variable alone with no real zeros, the system has
  no real solutions at any t outside the stripped factors, whatever E looks
  like.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateInstanceError, DomainError, EliminationError
from .polynomial import Polynomial
from .realroots import (IsolatingInterval, UnivariatePolynomial, ddiv_exact, dgcd,
                        dprimitive, dstrip, isolate_real_roots, refine_interval,
                        sturm_count)
from .resultants import resultant
from .rng import Stream, derive_seed
from .systems import MetaSystem, boundary_subsystems

# -- helpers ----------------------------------------------------------------------


def _as_t_poly(p: Polynomial) -> UnivariatePolynomial:
    """Convert a polynomial involving only t to dense univariate form."""
    coeffs = {}
    if "t" in p.vars:
        i = p.vars.index("t")
    else:
        i = None
    for e, c in p.terms.items():
        if any(k and pos != i for pos, k in enumerate(e)):
            raise DomainError("polynomial is not univariate in t")
        coeffs[e[i] if i is not None else 0] = c
    if not coeffs:
        return UnivariatePolynomial.zero()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return UnivariatePolynomial(out)


def _strip_t_power(p: Polynomial):
    """Factor out the largest power of t; returns (reduced, power)."""
    if "t" not in p.vars or p.is_zero():
        return p, 0
    i = p.vars.index("t")
    k = min(e[i] for e in p.terms)
    if k == 0:
        return p, 0
    terms = {e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in p.terms.items()}
    return Polynomial(p.vars, terms), k


def _t_content(p: Polynomial):
    """gcd over Z[t] of the coefficients with respect to the non-t variables.

    Returns (reduced, content) with content a UnivariatePolynomial in t;
    content is [1] when trivial.  Expects integer coefficients.
    """
    others = [v for v in p.vars if v != "t" and p.degree(v) > 0]
    if "t" not in p.vars or len(others) != 1:
        return p, UnivariatePolynomial([1])
    u = others[0]
    ti = p.vars.index("t")
    ui = p.vars.index(u)
    buckets = {}
    for e, c in p.terms.items():
        buckets.setdefault(e[ui], {})[e[ti]] = int(c)
    g = []
    for b in buckets.values():
        lst = [0] * (max(b) + 1)
        for k, c in b.items():
            lst[k] = c
        g = dgcd(g, dstrip(lst)) if g else dprimitive(dstrip(lst))
        if g == [1]:
            return p, UnivariatePolynomial([1])
    content = UnivariatePolynomial.from_int_list(g)
    gl = list(g)
    red = {}
    for e, c in p.terms.items():
        red.setdefault(e[ui], {})[e[ti]] = int(c)
    terms = {}
    for ue, b in red.items():
        lst = [0] * (max(b) + 1)
        for k, c in b.items():
            lst[k] = c
        q = ddiv_exact(dstrip(lst), gl)
        for k, c in enumerate(q):
            if c:
                e = [0] * len(p.vars)
                e[ti] = k
                e[ui] = ue
                terms[tuple(e)] = c
    return Polynomial(p.vars, terms), content


@dataclass(frozen=True)
class ProjectionFactor:
    """One partial projection R = t^k * content(t) * poly, fully bookkept."""

    poly: Polynomial
    surviving_var: str | None  # the non-t variable in poly, if any
    t_power: int
    content: UnivariatePolynomial  # [1] when trivial

    def t_free_no_real_zeros(self) -> bool:
        """True when poly involves only the surviving variable and has no real zeros."""
        if self.surviving_var is None or self.poly.degree("t") > 0:
            return False
        u = UnivariatePolynomial.zero()
        try:
            coeffs = self.poly.as_univariate(self.surviving_var)
            u = UnivariatePolynomial([c.constant_value() for c in coeffs])
        except ValueError:
            return False
        if u.is_zero() or u.degree() == 0:
            return not u.is_zero()
        return sturm_count(u, (None, None)) == 0


@dataclass(frozen=True)
class EliminationResult:
    """Certified projection data for one system.

    E is squarefree, primitive with positive leading coefficient.  The
    t-coordinate of any solution of the input system is a root of E, a root
    of one of the content factors, or 0 when t_power_removed > 0.
    """

    E: UnivariatePolynomial
    degree_raw: int
    t_power_removed: int
    content_factors: tuple
    squarefree: bool
    pivot: int
    shear_used: tuple
    projections: tuple
    refined_degrees: tuple = ()

    def real_root_candidates(self, lo=None, hi=None, include_zero=True,
                             refine_width=None):
        """Isolating intervals of every certified-candidate real t in (lo, hi]."""
        own = []
        sources = [self.E] + [c for c in self.content_factors if c.degree() > 0]
        for src in sources:
            if src.degree() <= 0:
                continue
            for iv in isolate_real_roots(src):
                if refine_width is not None:
                    iv = refine_interval(src, iv, Fraction(refine_width))
                own.append(iv)
        if self.t_power_removed and include_zero:
            own.append(IsolatingInterval(Fraction(0), Fraction(0)))
        seen = set()
        out = []
        for iv in sorted(own, key=lambda v: (v.lo, v.hi)):
            key = (iv.lo, iv.hi)
            if key in seen:
                continue
            seen.add(key)
            if not include_zero and iv.is_point and iv.lo == 0:
                continue
            if lo is not None and iv.hi <= lo:
                continue
            if hi is not None and iv.lo >= hi:
                continue
            out.append(iv)
        return out

    def count_nonzero_real_roots(self) -> int:
        n = 0
        for iv in self.real_root_candidates(include_zero=False):
            if not (iv.is_point and iv.lo == 0):
                n += 1
        return n

    def to_json(self) -> dict:
        return {
            "eliminant_multiple": repr(self.E),
            "degree_raw": self.degree_raw,
            "degree_squarefree": self.E.degree(),
            "t_power_removed": self.t_power_removed,
            "content_degrees": [c.degree() for c in self.content_factors],
            "pivot": self.pivot,
            "shear_used": list(self.shear_used),
            "refined_degrees": list(self.refined_degrees),
        }


def _compress_exponents(ints):
    """Write P(t) = Q(t^g) for the largest g; P must have nonzero constant term."""
    g = 0
    for k in range(1, len(ints)):
        if ints[k]:
            g = gcd(g, k)
            if g == 1:
                break
    if g <= 1:
        return 1, list(ints)
    return g, [ints[k] for k in range(0, len(ints), g)]


def _expand_exponents(ints, g):
    if g <= 1:
        return list(ints)
    out = [0] * ((len(ints) - 1) * g + 1)
    for k, c in enumerate(ints):
        out[k * g] = c
    return out


def _compressed_squarefree(ints):
    """Squarefree part computed inside the exponent lattice of the input.

    With a nonzero constant term, P(t) = Q(t^g) is squarefree exactly when Q
    is, and the squarefree parts correspond under the same substitution; the
    compressed domain makes the gcd with the derivative g^2 times cheaper.
    """
    g, comp = _compress_exponents(ints)
    sf = UnivariatePolynomial.from_int_list(comp).squarefree_part().int_primitive()
    return _expand_exponents(sf, g)


def _compressed_gcd(a, b):
    """gcd of integer polynomials through their common exponent lattice."""
    ga, ca = _compress_exponents(a)
    gb, cb = _compress_exponents(b)
    g = gcd(ga, gb)
    A = _expand_exponents(ca, ga // g)
    B = _expand_exponents(cb, gb // g)
    return _expand_exponents(dgcd(A, B), g)


def _elim_step(f: Polynomial, g: Polynomial, var: str, deadline=None) -> Polynomial:
    """Eliminate var from the pair; a var-free input is already eliminated."""
    if f.degree(var) <= 0:
        return f
    if g.degree(var) <= 0:
        return g
    return resultant(f, g, var, deadline)


def _one_route(fs, pivot: int, shear, deadline):
    """Run the x-then-y projection for one pivot/coordinate choice.

    Returns (E_raw offsets...) or None when the route degenerates (zero
    resultant at either stage).
    """
    f0 = fs[pivot]
    g1, g2 = (fs[k] for k in range(3) if k != pivot)
    a, b = shear
    if (a, b) != (0, 0):
        x = Polynomial.variable("x", ("x", "y"))
        y = Polynomial.variable("y", ("x", "y"))
        sub = {"x": x + a * y, "y": b * x + (1 + a * b) * y}
        f0, g1, g2 = (p.substitute(sub) for p in (f0, g1, g2))
    R1 = _elim_step(f0, g1, "x", deadline)
    R2 = _elim_step(f0, g2, "x", deadline)
    if R1.is_zero() or R2.is_zero():
        return None
    projections = []
    reduced = []
    for R in (R1, R2):
        P = R.primitive_part()
        P, k = _strip_t_power(P)
        P, content = _t_content(P)
        others = [v for v in P.vars if v != "t" and P.degree(v) > 0]
        projections.append(ProjectionFactor(P, others[0] if others else None, k,
                                            content))
        reduced.append(P)
    P1, P2 = reduced
    d1 = max(P1.degree("y"), 0)
    d2 = max(P2.degree("y"), 0)
    pr1, pr2 = projections
    raw_extra = d2 * (pr1.t_power + max(pr1.content.degree(), 0)) \
        + d1 * (pr2.t_power + max(pr2.content.degree(), 0))
    if d1 == 0 and d2 == 0:
        e1, e2 = _as_t_poly(P1).int_primitive(), _as_t_poly(P2).int_primitive()
        E_raw = UnivariatePolynomial.from_int_list(dgcd(e1, e2))
    elif d1 == 0:
        E_raw = _as_t_poly(P1)
    elif d2 == 0:
        E_raw = _as_t_poly(P2)
    else:
        E_poly = _elim_step(P1, P2, "y", deadline)
        if E_poly.is_zero():
            return None
        E_raw = _as_t_poly(E_poly.drop_unused())
    return E_raw, tuple(projections), raw_extra


def eliminate_to_t(system: MetaSystem, refine: int = 0, seed: int = 0,
                   deadline=None) -> EliminationResult:
    """Project the system to the t-axis through iterated resultants.

    refine > 0 folds in up to that many further projection routes (pivot
    swaps, then determinant-one coordinate changes) and returns the gcd,
    which is still a multiple of the true eliminant and a divisor of the
    primary route's output.  A zero route is retried with seeded coordinate
    changes, at most eight times, before EliminationError is raised.
    """
    fs = system.f
    stream = Stream(derive_seed(seed, 0xE11))
    transforms = [(stream.nonzero_int(3), stream.nonzero_int(3)) for _ in range(8)]

    primary = None
    for shear in [(0, 0)] + transforms:
        out = _one_route(fs, 0, shear, deadline)
        if out is not None:
            primary = (0, shear, out)
            break
    if primary is None:
        raise EliminationError("extraneous component suspected: all projections vanished")

    pivot, shear, (E_raw, projections, raw_extra) = primary
    extra_results = []
    if refine > 0:
        extra_routes = [(1, (0, 0)), (2, (0, 0))] + [(0, tr) for tr in transforms if tr != shear]
        for rp, rs in extra_routes[:refine]:
            out = _one_route(fs, rp, rs, deadline)
            if out is not None:
                extra_results.append(out)

    ints = E_raw.int_primitive()
    degree_raw = (len(ints) - 1 if ints else -1) + raw_extra
    k3 = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        k3 += 1
    sf = _compressed_squarefree(ints) if ints else []
    refined_degrees = []
    for E2_raw, _, _ in extra_results:
        other = E2_raw.int_primitive()
        while other and other[0] == 0:
            other = other[1:]
        if other:
            other_sf = _compressed_squarefree(other)
            refined_degrees.append(len(other_sf) - 1)
            sf = _compressed_gcd(sf, other_sf) if sf else other_sf
    E = UnivariatePolynomial.from_int_list(sf) if sf else UnivariatePolynomial.zero()
    if E.is_zero():
        raise EliminationError("extraneous component suspected: zero projection")

    contents = [pr.content for pr in projections if pr.content.degree() > 0]
    t_power_removed = k3 + sum(pr.t_power for pr in projections)
    return EliminationResult(
        E=E,
        degree_raw=degree_raw,
        t_power_removed=t_power_removed,
        content_factors=tuple(contents),
        squarefree=True,
        pivot=pivot,
        shear_used=shear,
        projections=tuple(projections),
        refined_degrees=tuple(refined_degrees),
    )


# -- certificates -----------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Outcome of an attempt to certify real-solution emptiness over a t-range."""

    certified: bool
    method: str
    detail: str
    candidates: tuple = ()


def certify_no_real_solutions(system: MetaSystem, t_upper=None, refine: int = 2,
                              seed: int = 0, deadline=None) -> Certificate:
    """Certify that the system has no real solutions with t != 0 (or 0 < t <= t_upper).

    First tries the projection E together with all stripped factors; if real
    candidates survive, falls back to the zero-free projection-factor
    argument.  A certificate is only issued when one of the two sound
    criteria holds.
    """
    result = eliminate_to_t(system, refine=refine, seed=seed, deadline=deadline)
    lo = Fraction(0) if t_upper is not None else None
    hi = Fraction(t_upper) if t_upper is not None else None
    candidates = [iv for iv in result.real_root_candidates(lo=lo, hi=hi, include_zero=False)
                  if not (iv.is_point and iv.lo == 0)]
    if t_upper is not None:
        candidates = [iv for iv in candidates if iv.lo < hi and (iv.hi > 0 or iv.is_point and iv.lo > 0)]
    if not candidates:
        scope = "t != 0" if t_upper is None else f"0 < t <= {t_upper}"
        return Certificate(True, "eliminant", f"no real candidate roots with {scope}")
    for pr in result.projections:
        if pr.t_free_no_real_zeros():
            bad_content = pr.content.degree() > 0 and _content_has_roots(pr.content, lo, hi)
            if not bad_content:
                return Certificate(
                    True, "projection-factor",
                    f"partial projection in {pr.surviving_var!r} has no real zeros; "
                    f"its stripped factors vanish only at t = 0")
    return Certificate(False, "inconclusive",
                       "real candidate roots survive all certificates",
                       tuple(candidates))


def _content_has_roots(content: UnivariatePolynomial, lo, hi) -> bool:
    if content.degree() <= 0:
        return False
    roots = isolate_real_roots(content)
    for iv in roots:
        if iv.is_point and iv.lo == 0:
            continue
        if lo is None:  # whole punctured line
            return True
        if iv.hi > lo and iv.lo < hi:
            return True
    return False


# -- real intersection counting -----------------------------------------------------


def count_real_intersections(f: Polynomial, g: Polynomial, seed: int = 0):
    """Count distinct real affine intersection points of two plane curves.

    A nonzero shear x <- x + s y is applied until both sheared curves have a
    constant leading y-coefficient and the y-resultant is nonzero and
    squarefree.  Then every root of the resultant carries exactly one simple
    intersection point, and complex conjugation forces the point over a real
    root to be real, so the count of real resultant roots is the count of
    real intersection points.  Returns (count, degree of the resultant).
    """
    if f.is_zero() or g.is_zero() or f.is_constant() or g.is_constant():
        raise DomainError("counting needs two nonconstant curves")
    stream = Stream(derive_seed(seed, 0x5EA2))
    shears = []
    while len(shears) < 8:
        s = stream.nonzero_int(9)
        if s not in shears:
            shears.append(s)
    computed = 0
    zero_count = 0
    for s in shears:
        x = Polynomial.variable("x", ("x", "y"))
        y = Polynomial.variable("y", ("x", "y"))
        sub = {"x": x + s * y}
        fs = f.substitute(sub)
        gs = g.substitute(sub)
        if not _constant_leading_y(fs) or not _constant_leading_y(gs):
            continue
        computed += 1
        R = resultant(fs, gs, "y").drop_unused()
        if R.is_zero():
            zero_count += 1
            continue
        if R.is_constant():
            return (0, 0)
        u = _as_x_poly(R)
        if not u.is_squarefree():
            continue
        return (sturm_count(u, (None, None)), u.degree())
    if computed and zero_count == computed:
        raise EliminationError("non-finite intersection: curves share a component")
    raise DegenerateInstanceError("degenerate instance: resultant never squarefree")


def _constant_leading_y(p: Polynomial) -> bool:
    d = p.degree("y")
    if d <= 0:
        return False
    lead = p.as_univariate("y")[d]
    return lead.is_constant() and d == p.total_degree()


def _as_x_poly(p: Polynomial) -> UnivariatePolynomial:
    coeffs = p.as_univariate("x")
    return UnivariatePolynomial([c.constant_value() for c in coeffs])


# -- boundary strata -----------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryReport:
    """Solvability summary of the system restricted to one coordinate stratum."""

    label: str
    zeroed: tuple
    colors_present: tuple
    status: str  # infeasible | no-real-t-nonzero | candidates | positive-dimensional
    t_candidates: tuple = ()
    detail: str = ""


def boundary_check(system: MetaSystem):
    """Analyze each coordinate stratum of the system.

    Univariate strata are eliminated exactly; the reported t-candidates are a
    certified superset of the t-values of real stratum solutions.
    """
    out = []
    for restriction in boundary_subsystems(system):
        polys = list(restriction.polys.values())
        colors = tuple(sorted(restriction.polys))
        label = restriction.label
        if not polys:
            out.append(BoundaryReport(label, restriction.zeroed, colors,
                                      "positive-dimensional", (),
                                      "all color slices vanish on the stratum"))
            continue
        consts = [p for p in polys if p.is_constant()]
        if any(not p.is_zero() and p.is_constant() and p.degree("t") <= 0 for p in consts):
            out.append(BoundaryReport(label, restriction.zeroed, colors, "infeasible",
                                      (), "a nonzero constant slice forbids solutions"))
            continue
        t_polys = []
        other = []
        for p in polys:
            live = [v for v in p.vars if v != "t" and p.degree(v) > 0]
            (t_polys if not live else other).append(p)
        candidates = [_as_t_poly(p).int_primitive() for p in t_polys]
        for i in range(len(other)):
            for j in range(i + 1, len(other)):
                u = next(v for v in other[i].vars if v != "t" and other[i].degree(v) > 0)
                if other[j].degree(u) <= 0:
                    continue
                r = resultant(other[i], other[j], u).drop_unused()
                if not r.is_zero():
                    candidates.append(_as_t_poly(r).int_primitive())
        if not candidates:
            out.append(BoundaryReport(label, restriction.zeroed, colors,
                                      "positive-dimensional", (),
                                      "a single slice survives; the stratum is a curve"))
            continue
        g = []
        for c in candidates:
            g = dgcd(g, c) if g else dprimitive(c)
        G = UnivariatePolynomial.from_int_list(g)
        if G.degree() <= 0:
            status, ivs = "infeasible", ()
        else:
            roots = isolate_real_roots(G)
            ivs = tuple(roots)
            nonzero = [iv for iv in roots if not (iv.is_point and iv.lo == 0)]
            status = "no-real-t-nonzero" if not nonzero else "candidates"
        out.append(BoundaryReport(label, restriction.zeroed, colors, status, ivs,
                                  f"eliminated to gcd of degree {G.degree()}"))
    return out

"""Univariate polynomials over the rationals: Sturm counts and root isolation.

Everything is exact.  Sturm chains are computed as primitive integer
sequences via sign-corrected pseudo-remainders, so coefficient growth stays
polynomial instead of exponential.  Intervals returned by the isolator are
pairwise disjoint and each contains exactly one distinct real root; exact
rational roots come back as degenerate [r, r] intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

# -- dense integer coefficient lists (ascending) -------------------------------


def dstrip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def dadd(a, b):
    n = max(len(a), len(b))
    return dstrip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def dneg(a):
    return [-c for c in a]

def dsub(a, b):
    return dadd(a, dneg(b))


def dmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return dstrip(out)


def dscale(a, k):
    if k == 0:
        return []
    return [c * k for c in a]


def dcontent(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def dprimitive(a):
    g = dcontent(a)
    if g in (0, 1):
        return list(a)
    return [c // g for c in a]


def ddiv_exact(a, b):
    """Exact division of integer polynomials; raises if not exact."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    r = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        num = r[k + len(b) - 1]
        if num % lb:
            raise ValueError("not an exact division")
        q = num // lb
        out[k] = q
        if q:
            for i, cb in enumerate(b):
                r[k + i] -= q * cb
    if any(r):
        raise ValueError("not an exact division")
    return dstrip(out)


def dprem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, integer arithmetic."""
    da, db = len(a) - 1, len(b) - 1
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    r = list(a)
    lb = b[-1]
    steps = da - db + 1
    while len(r) - 1 >= db and r:
        lead = r[-1]
        r = [c * lb for c in r]
        shift = len(r) - 1 - db
        for i, cb in enumerate(b):
            r[shift + i] -= lead * cb
        r = dstrip(r)
        steps -= 1
    if steps > 0:
        r = dscale(r, lb ** steps)
    return r


def dgcd(a, b):
    """Primitive positive gcd of integer polynomials (primitive PRS)."""
    a, b = dprimitive(a), dprimitive(b)
    if not a:
        g = list(b)
    elif not b:
        g = list(a)
    else:
        while b:
            if len(b) - 1 == 0:
                g = [1]
                break
            r = dprimitive(dprem(a, b))
            a, b = b, r
        else:
            g = a
    if g and g[-1] < 0:
        g = dneg(g)
    return g


def deval(a, x: Fraction):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def dshift_down(a, k: int):
    """Divide by x^k (requires the low coefficients to vanish)."""
    if any(c != 0 for c in a[:k]):
        raise ValueError("not divisible by that power of x")
    return a[k:]


def dtrailing_zeros(a) -> int:
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return k if a else 0


# -- the univariate polynomial wrapper ------------------------------------------


class UnivariatePolynomial:
    """Dense rational coefficients, ascending; the zero polynomial is allowed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = []
        for c in coeffs:
            c = Fraction(c) if not isinstance(c, (int, Fraction)) else c
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in cs]

    # construction helpers

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def from_int_list(cls, ints):
        p = cls.__new__(cls)
        p.coeffs = dstrip(list(ints))
        return p

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return [Fraction(c) for c in self.coeffs] == [Fraction(c) for c in other.coeffs]

    def __hash__(self):
        return hash(tuple(Fraction(c) for c in self.coeffs))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial(
            [(self.coeffs[i] if i < len(self.coeffs) else 0)
             + (other.coeffs[i] if i < len(other.coeffs) else 0) for i in range(n)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            for j, cb in enumerate(other.coeffs):
                out[i + j] += ca * cb
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def int_primitive(self):
        """Primitive integer coefficient list with positive leading coefficient."""
        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        ints = dprimitive(ints)
        if ints[-1] < 0:
            ints = dneg(ints)
        return ints

    def __repr__(self):
        if not self.coeffs:
            return "UnivariatePolynomial(0)"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return "UnivariatePolynomial(" + " + ".join(terms) + ")"

    def squarefree_part(self) -> "UnivariatePolynomial":
        ints = self.int_primitive()
        if len(ints) <= 1:
            return UnivariatePolynomial.from_int_list(ints and [1])
        g = dgcd(ints, dstrip([k * c for k, c in enumerate(ints)][1:]))
        if len(g) == 1:
            return UnivariatePolynomial.from_int_list(dprimitive(ints))
        return UnivariatePolynomial.from_int_list(dprimitive(ddiv_exact(ints, g)))

    def is_squarefree(self) -> bool:
        ints = self.int_primitive()
        if len(ints) <= 2:
            return True
        return len(dgcd(ints, dstrip([k * c for k, c in enumerate(ints)][1:]))) == 1


def _synth_div(p: UnivariatePolynomial, r: Fraction) -> UnivariatePolynomial:
    out = []
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * r + c
        out.append(acc)
    assert out[-1] == 0, "not a root"
    return UnivariatePolynomial(list(reversed(out[:-1])))


# -- Sturm machinery -------------------------------------------------------------


def sturm_chain(ints):
    """Primitive integer Sturm chain of a squarefree integer polynomial."""
    chain = [list(ints)]
    deriv = dstrip([k * c for k, c in enumerate(ints)][1:])
    if deriv:
        chain.append(dprimitive(deriv))
    while len(chain[-1]) - 1 > 0:
        a, b = chain[-2], chain[-1]
        delta = len(a) - len(b)
        r = dprem(a, b)
        if not r:
            break
        # dprem scales by lc(b)^(delta+1); flip so the chain sign matches -rem
        if b[-1] < 0 and (delta + 1) % 2 == 1:
            nxt = r
        else:
            nxt = dneg(r)
        chain.append(dprimitive(nxt))
    return chain


def _variations(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def _sign_at(ints, x: Fraction) -> int:
    v = deval(ints, x)
    return (v > 0) - (v < 0)


def _variations_at(chain, x: Fraction) -> int:
    return _variations([_sign_at(p, x) for p in chain])


def _variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for p in chain:
        s = (p[-1] > 0) - (p[-1] < 0)
        if not positive and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def sturm_count(p: UnivariatePolynomial, interval) -> int:
    """Number of distinct real roots in (a, b]; a may be None (-inf), b None (+inf)."""
    if p.is_zero():
        raise DomainError("identically zero polynomial")
    a, b = interval
    if a is not None and b is not None and Fraction(a) >= Fraction(b):
        raise DomainError("need a < b")
    q = p.squarefree_part()
    extra = 0
    if b is not None and q(b) == 0:
        extra = 1
        q = _synth_div(q, Fraction(b))
    if a is not None:
        while not q.is_zero() and q(a) == 0:
            q = _synth_div(q, Fraction(a))
    if q.degree() <= 0:
        return extra
    chain = sturm_chain(q.int_primitive())
    va = _variations_at_inf(chain, False) if a is None else _variations_at(chain, Fraction(a))
    vb = _variations_at_inf(chain, True) if b is None else _variations_at(chain, Fraction(b))
    return va - vb + extra


def count_real_roots(p: UnivariatePolynomial) -> int:
    return sturm_count(p, (None, None))


# -- isolation --------------------------------------------------------------------


@dataclass(frozen=True)
class IsolatingInterval:
    """lo < hi bracketing exactly one root, or lo == hi for an exact rational root."""

    lo: Fraction
    hi: Fraction
    multiplicity_free: bool = True

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "exact": self.is_point}


def root_bound(p: UnivariatePolynomial) -> Fraction:
    """Cauchy-style bound: every real root has absolute value below the result."""
    lc = abs(Fraction(p.leading()))
    m = max((abs(Fraction(c)) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lc


def isolate_real_roots(p: UnivariatePolynomial):
    """Disjoint isolating intervals, one per distinct real root, sorted."""
    if p.is_zero():
        raise DomainError("identically zero polynomial")
    was_squarefree = p.is_squarefree()
    q = p.squarefree_part()
    if q.degree() <= 0:
        return []
    found_points = []
    # peel off the easy exact root at 0 so we can always split there
    while q(0) == 0:
        found_points.append(Fraction(0))
        q = _synth_div(q, Fraction(0))

    intervals = []
    while True:
        if q.degree() <= 0:
            break
        bound = root_bound(q)
        while q(bound) == 0 or q(-bound) == 0:
            bound += 1
        breaks = sorted(set([-bound, Fraction(0), bound] + found_points))
        breaks = [x for x in breaks if -bound <= x <= bound]
        chain = sturm_chain(q.int_primitive())
        var_at = {x: _variations_at(chain, x) for x in breaks}
        stack = [(breaks[i], breaks[i + 1], var_at[breaks[i]] - var_at[breaks[i + 1]])
                 for i in range(len(breaks) - 1)]
        restart = False
        pending = []
        while stack:
            lo, hi, cnt = stack.pop()
            if cnt <= 0:
                continue
            if cnt == 1:
                pending.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            if q(mid) == 0:
                found_points.append(mid)
                q = _synth_div(q, mid)
                restart = True
                break
            vm = _variations_at(chain, mid)
            vlo = _variations_at(chain, lo)
            vhi = _variations_at(chain, hi)
            stack.append((lo, mid, vlo - vm))
            stack.append((mid, hi, vm - vhi))
        if restart:
            continue
        intervals = pending
        break

    out = [IsolatingInterval(r, r, was_squarefree) for r in found_points]
    sf = p.squarefree_part()
    out.extend(_with_interior_endpoints(sf, lo, hi, was_squarefree)
               for lo, hi in intervals)
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


def _with_interior_endpoints(sf: UnivariatePolynomial, lo, hi, flag) -> IsolatingInterval:
    """Shrink (lo, hi) until no other root of sf sits on an endpoint.

    The bracketed root is strictly interior, so bisecting with the polynomial
    whose endpoint roots are divided out terminates with nonroot endpoints
    and the closed interval then contains exactly one root of sf.
    """
    q = sf
    while q.degree() > 0 and q(lo) == 0:
        q = _synth_div(q, lo)
    while q.degree() > 0 and q(hi) == 0:
        q = _synth_div(q, hi)
    slo = (q(lo) > 0) - (q(lo) < 0)
    while sf(lo) == 0 or sf(hi) == 0:
        mid = (lo + hi) / 2
        v = q(mid)
        if v == 0:
            return IsolatingInterval(mid, mid, flag)
        if ((v > 0) - (v < 0)) == slo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi, flag)


def refine_interval(p: UnivariatePolynomial, interval: IsolatingInterval,
                    width: Fraction) -> IsolatingInterval:
    """Shrink an isolating interval below the requested width by bisection."""
    if interval.is_point:
        return interval
    q = p.squarefree_part()
    lo, hi = interval.lo, interval.hi
    # other roots of p sitting exactly on an endpoint are divided out; the
    # bracketed root itself is strictly interior
    while q.degree() > 0 and q(lo) == 0:
        q = _synth_div(q, lo)
    while q.degree() > 0 and q(hi) == 0:
        q = _synth_div(q, hi)
    slo = (q(lo) > 0) - (q(lo) < 0)
    if slo == 0:
        raise DomainError("interval endpoint is a root; isolation broken")
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = q(mid)
        if v == 0:
            return IsolatingInterval(mid, mid, interval.multiplicity_free)
        if ((v > 0) - (v < 0)) == slo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi, interval.multiplicity_free)


def min_positive_real_root(p: UnivariatePolynomial, width=Fraction(1, 10000)):
    """Isolating interval of the least real root > 0, refined; None if there is none."""
    roots = [iv for iv in isolate_real_roots(p)
             if (iv.is_point and iv.lo > 0) or (not iv.is_point and iv.lo >= 0)]
    if not roots:
        return None
    return refine_interval(p, roots[0], width)

"""Canonical algebraic numbers: minimal polynomial + isolating complex box.

An AlgebraicNumber is represented by its primitive irreducible integer
minimal polynomial (positive leading coefficient) and the index of its
root in a canonical ordering of the polynomial's roots (real roots
ascending, then non-real roots by real part and imaginary part).  Two
values are equal as complex numbers iff their representations coincide,
which makes equality a total, cheap test.

Arithmetic goes through annihilating polynomials built from resultants
(Sylvester determinants evaluated by interpolation), factoring over Z,
and numerical selection of the correct irreducible factor and root.
"""

from fractions import Fraction
from functools import lru_cache
import math

from . import intpoly
from .ball import (
    ComplexBall, RealBall, cb_add, cb_conj, cb_disjoint, cb_div, cb_exp,
    cb_horner, cb_intersect, cb_inv, cb_log, cb_midpoint_exact, cb_mul,
    cb_neg, cb_sub, mag_cmp, mag_pow2, separated_from_zero,
)
from .intpoly import UnsupportedDegreeError


class NotIsolatingError(ValueError):
    """The given enclosure does not isolate exactly one root."""


_RESULTANT_DEGREE_CAP = 160  # work limit on annihilator degrees


# ---------------------------------------------------------------------------
# root isolation for squarefree integer polynomials
# ---------------------------------------------------------------------------

def _isolate_real_roots(p):
    """Disjoint rational intervals (lo, hi], one real root each."""
    seq = intpoly.sturm_sequence(p)
    bound = intpoly.root_bound(p) + 1
    out = []

    def rec(lo, hi):
        n = intpoly.count_real_roots(p, lo, hi, seq)
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if intpoly.evaluate(p, mid) == 0:
            out.append((mid, mid))
            # shrink eps until (mid-eps, mid+eps] contains only this root
            eps = (hi - lo) / 4
            while intpoly.count_real_roots(p, mid - eps, mid + eps, seq) > 1:
                eps /= 2
            rec(lo, mid - eps)
            rec(mid + eps, hi)
            return
        rec(lo, mid)
        rec(mid, hi)

    rec(-bound, bound)
    out.sort(key=lambda iv: iv[0])
    return out


def _real_interval_ball(lo, hi, prec):
    from .ball import _exact_or_tight, mag_add, mag_from_fraction_upper
    if lo == hi:
        return ComplexBall(_exact_or_tight(Fraction(lo), prec), RealBall.from_int(0))
    mid = Fraction(lo + hi, 2)
    m = RealBall.from_fraction(mid, prec + 8)
    rad = mag_add(m.rad, mag_from_fraction_upper(Fraction(hi - lo, 2)))
    return ComplexBall(RealBall(m.man, m.exp, rad), RealBall.from_int(0))


def _aberth_approximations(p, prec, rng_state=0x9e3779b9):
    """Non-rigorous root approximations of a squarefree integer polynomial."""
    d = intpoly.degree(p)
    coeffs = [ComplexBall.from_int(c) for c in p]
    dcoeffs = [ComplexBall.from_int(c) for c in intpoly.derivative(p)]
    bound = intpoly.root_bound(p)
    # initial guesses spread on a circle of radius ~bound, perturbed
    import cmath
    zs = []
    for k in range(d):
        ang = 2 * math.pi * (k + 0.28) / d + 0.31
        c = cmath.exp(1j * ang) * 0.6
        zb = ComplexBall.from_fractions(
            Fraction(bound) * Fraction.from_float(c.real).limit_denominator(10**6),
            Fraction(bound) * Fraction.from_float(c.imag).limit_denominator(10**6),
            prec)
        zs.append(cb_midpoint_exact(zb))

    def horner_exactpoint(cs, z):
        acc = ComplexBall.from_int(0)
        for c in reversed(cs):
            acc = cb_midpoint_exact(cb_add(cb_mul(acc, z, prec), c, prec))
        return acc

    for _ in range(80 + 12 * d):
        max_corr = None
        new_zs = list(zs)
        for i in range(d):
            z = zs[i]
            pv = horner_exactpoint(coeffs, z)
            if pv.re.man == 0 and pv.im.man == 0:
                continue
            dv = horner_exactpoint(dcoeffs, z)
            nq = cb_div(pv, dv, prec)
            if nq.is_indeterminate:
                # nudge the point and retry next sweep
                new_zs[i] = cb_midpoint_exact(cb_add(z, ComplexBall.from_fractions(
                    Fraction(1, 7919), Fraction(1, 7907), prec), prec))
                continue
            s = ComplexBall.from_int(0)
            bad = False
            for j in range(d):
                if i == j:
                    continue
                diff = cb_sub(z, zs[j], prec)
                inv = cb_inv(diff, prec)
                if inv.is_indeterminate:
                    bad = True
                    break
                s = cb_add(s, inv, prec)
            if bad:
                new_zs[i] = cb_midpoint_exact(cb_add(z, ComplexBall.from_fractions(
                    Fraction(1, 7919), Fraction(1, 7907), prec), prec))
                continue
            den = cb_sub(ComplexBall.from_int(1), cb_mul(nq, s, prec), prec)
            corr = cb_div(nq, den, prec)
            if corr.is_indeterminate:
                corr = nq
            new_zs[i] = cb_midpoint_exact(cb_sub(z, corr, prec))
            cm = corr.mag_upper()
            if max_corr is None or mag_cmp(cm, max_corr) > 0:
                max_corr = cm
        zs = new_zs
        if max_corr is None or max_corr[0] == 0 or \
                max_corr[1] + max_corr[0].bit_length() < -(prec // 2):
            break
    return zs


def _try_certify(p, dp, center, rad_exp, prec):
    """Interval Newton certification: a box around center with radius
    2**rad_exp contains a unique root -> contracted box, else None."""
    rad = mag_pow2(rad_exp)
    box = ComplexBall(RealBall(center.re.man, center.re.exp, rad),
                      RealBall(center.im.man, center.im.exp, rad))
    dval = cb_horner(dp, box, prec)
    if dval.is_indeterminate or dval.contains_zero():
        return None
    c = cb_midpoint_exact(box)
    pc = cb_horner(p, c, prec)
    newton = cb_sub(c, cb_div(pc, dval, prec), prec)
    # strict containment in the interior certifies a unique root
    if newton.re.lower() > box.re.lower() and newton.re.upper() < box.re.upper() \
            and newton.im.lower() > box.im.lower() and newton.im.upper() < box.im.upper():
        out = cb_intersect(newton, box, prec)
        return out
    return None


@lru_cache(maxsize=None)
def isolated_roots(minpoly):
    """Certified pairwise-disjoint isolating boxes for all roots of a
    squarefree integer polynomial, in canonical order."""
    p = list(minpoly)
    d = intpoly.degree(p)
    if d == 0:
        return ()
    if d == 1:
        return (_real_interval_ball(Fraction(-p[0], p[1]), Fraction(-p[0], p[1]), 64),)
    dp = intpoly.derivative(p)
    real_ivs = _isolate_real_roots(p)
    n_real = len(real_ivs)
    real_boxes = []
    for lo, hi in real_ivs:
        box = _real_interval_ball(lo, hi, 64)
        box = _refine_interval_newton(p, dp, box, 64, 24)
        real_boxes.append(box)
    n_complex = d - n_real
    complex_boxes = []
    if n_complex:
        prec = 64
        while True:
            approx = _aberth_approximations(p, prec)
            boxes = []
            for z in approx:
                got = None
                for rad_exp in range(-(prec // 2), -(prec // 8), 4):
                    got = _try_certify(p, dp, z, rad_exp, prec + 16)
                    if got is not None:
                        break
                if got is not None:
                    boxes.append(got)
            # keep only boxes separated from the real axis; dedupe overlaps
            distinct = []
            for b in boxes:
                if b.im.contains_zero():
                    continue
                if any(not cb_disjoint(b, o) for o in distinct):
                    continue
                distinct.append(b)
            if len(distinct) == n_complex:
                complex_boxes = distinct
                break
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError("root isolation failed to converge")
    ordered = real_boxes + _order_complex_boxes(p, complex_boxes)
    return tuple(ordered)


def _order_complex_boxes(p, boxes):
    if not boxes:
        return []
    # refine to well below the root separation bound, then sort by (re, im);
    # chains of re-overlapping boxes are im-separated at this width
    d = intpoly.degree(p)
    norm2 = math.isqrt(sum(c * c for c in p)) + 1
    sep_bits = (d - 1) * norm2.bit_length() + (d + 2) * max(1, d.bit_length()) // 2 + 8
    dp = intpoly.derivative(p)
    target = -(sep_bits + 8)
    refined = [_refine_interval_newton(p, dp, b, max(64, sep_bits * 2), -target + 8)
               for b in boxes]
    def sort_key(b):
        return (b.re.mid_fraction(), b.im.mid_fraction())
    refined.sort(key=sort_key)
    # group chains of overlapping real parts, order each chain by imag part
    out = []
    i = 0
    while i < len(refined):
        chain = [refined[i]]
        j = i + 1
        while j < len(refined) and not cb_disjoint(
                ComplexBall(chain[-1].re, RealBall.whole_line()),
                ComplexBall(refined[j].re, RealBall.whole_line())):
            chain.append(refined[j])
            j += 1
        chain.sort(key=lambda b: b.im.mid_fraction())
        out.extend(chain)
        i = j
    return out


def _bisect_real(p, lo, hi):
    """Halve an interval containing exactly one real root of p."""
    mid = (lo + hi) / 2
    pm = intpoly.evaluate(p, mid)
    if pm == 0:
        return mid, mid
    ph = intpoly.evaluate(p, hi)
    if ph == 0:
        return hi, hi
    if (pm > 0) != (ph > 0):
        return mid, hi
    return lo, mid


def _refine_interval_newton(p, dp, box, prec, target_bits):
    """Contract an isolating box until its radius is below 2**-target_bits.

    Interval Newton once the derivative separates from zero on the box;
    exact sign bisection bootstraps wide real boxes.
    """
    prec = max(prec, target_bits + 32)
    for _ in range(4096):
        if _rad_bits(box) >= target_bits:
            return box
        dval = cb_horner(dp, box, prec)
        if not dval.is_indeterminate and not dval.contains_zero():
            c = cb_midpoint_exact(box)
            pc = cb_horner(p, c, prec)
            newton = cb_sub(c, cb_div(pc, dval, prec), prec)
            if not newton.is_indeterminate:
                nxt = cb_intersect(newton, box, prec)
                if nxt is not None:
                    stalled = _rad_bits(nxt) <= _rad_bits(box)
                    box = nxt
                    if not stalled:
                        continue
        if box.im.is_zero():
            lo, hi = _bisect_real(p, box.re.lower(), box.re.upper())
            box = _real_interval_ball(lo, hi, prec)
            continue
        prec *= 2
        if prec > 1 << 22:
            raise ArithmeticError("interval Newton refinement stalled")
    raise ArithmeticError("interval Newton refinement did not converge")


# ---------------------------------------------------------------------------
# the canonical algebraic number type
# ---------------------------------------------------------------------------

class AlgebraicNumber:
    """An element of the algebraic closure of Q, canonically represented."""

    __slots__ = ("minpoly", "root_index", "_box")

    def __init__(self, minpoly, root_index, box):
        self.minpoly = tuple(minpoly)
        self.root_index = root_index
        self._box = box

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(q):
        q = Fraction(q)
        mp = intpoly.primitive([-q.numerator, q.denominator])
        return AlgebraicNumber(mp, 0, isolated_roots(tuple(mp))[0])

    @staticmethod
    def from_root(p, approx, degree_limit=64):
        """Select the root of p isolated by the enclosure `approx`."""
        from .ball import cb_subset
        p = intpoly.trim([int(c) for c in p])
        if not p:
            raise ValueError("zero polynomial")
        factors = intpoly.factor_int_poly(p, degree_limit=max(degree_limit,
                                                              intpoly.degree(p)))
        candidates = []
        for f, _mult in factors:
            roots = isolated_roots(tuple(f))
            for idx, box in enumerate(roots):
                if not cb_disjoint(box, approx):
                    candidates.append([tuple(f), idx, box])
        target = 64
        while target <= 1 << 14:
            candidates = [c for c in candidates if not cb_disjoint(c[2], approx)]
            if not candidates:
                raise NotIsolatingError("enclosure contains no root of the polynomial")
            if len(candidates) == 1:
                mp, idx, box = candidates[0]
                if cb_subset(box, approx):
                    return AlgebraicNumber(mp, idx, box)
            candidates = [[mp, idx,
                           _refine_interval_newton(list(mp),
                                                   intpoly.derivative(list(mp)),
                                                   box, 2 * target, target)]
                          for mp, idx, box in candidates]
            target *= 2
        raise NotIsolatingError("enclosure does not isolate exactly one root")

    # -- basics ---------------------------------------------------------------

    def degree(self):
        return len(self.minpoly) - 1

    def is_rational(self):
        return self.degree() == 1

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(-self.minpoly[0], self.minpoly[1])

    def is_zero(self):
        return self.minpoly == (0, 1)

    def is_real(self):
        return self._box.im.is_zero()

    def key(self):
        return (self.minpoly, self.root_index)

    def __eq__(self, other):
        return isinstance(other, AlgebraicNumber) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def enclosure(self, prec):
        """Isolating box refined until its radius is below ~2**-prec."""
        box = self._box
        if _rad_bits(box) < prec:
            p = list(self.minpoly)
            box = _refine_interval_newton(p, intpoly.derivative(p), box,
                                          prec + 16, prec + 8)
            self._box = box  # monotone cache
        return box

    def conjugate(self):
        if self.is_real():
            return self
        roots = isolated_roots(self.minpoly)
        mirror = cb_conj(self._box)
        hits = [i for i, b in enumerate(roots) if not cb_disjoint(b, mirror)]
        prec = 128
        while len(hits) != 1:
            mirror = cb_conj(self.enclosure(prec))
            hits = [i for i, b in enumerate(roots) if not cb_disjoint(b, mirror)]
            prec *= 2
        return AlgebraicNumber(self.minpoly, hits[0], roots[hits[0]])

    def __repr__(self):
        from .ball import decimal_str
        return "AlgebraicNumber(deg %d, %s)" % (self.degree(),
                                                decimal_str(self._box, 8))


def _rad_bits(box):
    """-log2 of the box radius, roughly (large when the box is tight)."""
    worst = 10**9
    for rad in (box.re.rad, box.im.rad):
        if rad[0] == -1:
            return 0
        if rad[0]:
            worst = min(worst, -(rad[1] + rad[0].bit_length()))
    return worst


# ---------------------------------------------------------------------------
# arithmetic via annihilating resultants
# ---------------------------------------------------------------------------

def _select_from_annihilator(ann, encl_fn, degree_limit):
    """Pick the irreducible factor of `ann` and the root matching the value
    enclosed by encl_fn(prec)."""
    factors = [f for f, _ in intpoly.factor_int_poly(
        ann, degree_limit=max(64, intpoly.degree(ann)))]
    root_cache = {}
    prec = 64
    while prec <= 1 << 18:
        w = encl_fn(prec)
        if not w.is_indeterminate:
            alive = [f for f in factors
                     if not separated_from_zero(cb_horner(f, w, prec))]
            if alive:
                factors = alive
            if len(factors) == 1:
                f = factors[0]
                if intpoly.degree(f) > degree_limit:
                    raise UnsupportedDegreeError(
                        "result degree %d exceeds limit %d"
                        % (intpoly.degree(f), degree_limit))
                key = tuple(f)
                roots = root_cache.get(key, list(isolated_roots(key)))
                dp = intpoly.derivative(f)
                roots = [_refine_interval_newton(f, dp, b, prec + 16, prec // 2)
                         for b in roots]
                root_cache[key] = roots
                hits = [i for i, b in enumerate(roots) if not cb_disjoint(b, w)]
                if len(hits) == 1:
                    i = hits[0]
                    return AlgebraicNumber(key, i, roots[i])
        prec *= 2
    raise ArithmeticError("failed to select root from annihilator")


def _interp_annihilator(values_fn, degree_bound):
    """Interpolate the integer polynomial R with R(t) = values_fn(t) for
    t = 0, 1, -1, 2, -2, ..., deg(R) <= degree_bound."""
    pts = []
    t = 0
    while len(pts) < degree_bound + 1:
        pts.append(t)
        t = -t + (0 if t > 0 else 1)
    xs, ys = [], []
    for t in pts:
        xs.append(Fraction(t))
        ys.append(Fraction(values_fn(t)))
    # Newton divided differences
    coefs = list(ys)
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - j])
    basis = [Fraction(1)]
    out = [Fraction(0)] * len(xs)
    for k, c in enumerate(coefs):
        for i, b in enumerate(basis):
            out[i] += c * b
        # basis *= (x - xs[k])
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            new_basis[i] -= xs[k] * b
            new_basis[i + 1] += b
        basis = new_basis
    res = intpoly.trim([c for c in out])
    assert all(c.denominator == 1 for c in res), "interpolated resultant not integral"
    return [int(c) for c in res]


def _binary_annihilator(kind, p, q):
    dp, dq = intpoly.degree(p), intpoly.degree(q)
    bound = dp * dq
    if bound > _RESULTANT_DEGREE_CAP:
        raise UnsupportedDegreeError(
            "resultant degree %d exceeds the work cap %d" % (bound, _RESULTANT_DEGREE_CAP))

    if kind == "add":
        def value(t):
            # Res_y(p(y), q(t - y))
            b = [Fraction(0)] * (dq + 1)
            # q(t - y): expand via composition
            acc = [Fraction(1)]
            qt = [Fraction(0)] * (dq + 1)
            for i, c in enumerate(q):
                # c * (t - y)**i
                if c:
                    for k, a in enumerate(acc):
                        qt[k] += c * a
                # acc *= (t - y)
                nxt = [Fraction(0)] * (len(acc) + 1)
                for k, a in enumerate(acc):
                    nxt[k] += t * a
                    nxt[k + 1] -= a
                acc = nxt
            qi = [int(c) for c in qt]
            return intpoly.resultant_int(list(p), intpoly.trim(qi))
    else:
        def value(t):
            # Res_y(p(y), sum_i q_i t**i y**(dq-i))
            bt = [0] * (dq + 1)
            for i, c in enumerate(q):
                bt[dq - i] = c * t**i
            return intpoly.resultant_int(list(p), intpoly.trim(bt))

    return _interp_annihilator(value, bound)


def _shift_rational(p, r):
    """Minimal-polynomial transform for a + r: clearden(p(x - r))."""
    out = [Fraction(0)]
    acc = [Fraction(1)]
    for c in p:
        for k, a in enumerate(acc):
            if k >= len(out):
                out.append(Fraction(0))
            out[k] += c * a
        nxt = [Fraction(0)] * (len(acc) + 1)
        for k, a in enumerate(acc):
            nxt[k] -= r * a
            nxt[k + 1] += a
        acc = nxt
    return intpoly.clear_denominators(intpoly.trim(out))


def _scale_rational(p, r):
    """Transform for a * r (r != 0): clearden of sum p_i r**(d-i) x**i."""
    d = len(p) - 1
    out = [Fraction(c) * r**(d - i) for i, c in enumerate(p)]
    return intpoly.clear_denominators(out)


def qqbar_add(a, b, degree_limit=24):
    if a.is_rational():
        a, b = b, a
    if b.is_rational():
        r = b.to_rational()
        if r == 0:
            return a
        # minpoly of a + r is p(x - r), already irreducible
        mp = _shift_rational(list(a.minpoly), r)
        def encl(prec):
            return cb_add(a.enclosure(prec),
                          ComplexBall.from_fractions(r, Fraction(0), prec), prec)
        return _select_from_annihilator(mp, encl, degree_limit)
    ann = _binary_annihilator("add", list(a.minpoly), list(b.minpoly))
    def encl(prec):
        return cb_add(a.enclosure(prec), b.enclosure(prec), prec)
    return _select_from_annihilator(ann, encl, degree_limit)


def qqbar_neg(a):
    p = list(a.minpoly)
    mp = intpoly.primitive([(-1)**i * c for i, c in enumerate(p)])
    def encl(prec):
        return cb_neg(a.enclosure(prec))
    return _select_from_annihilator(mp, encl, degree_limit=len(p))


def qqbar_sub(a, b, degree_limit=24):
    return qqbar_add(a, qqbar_neg(b), degree_limit)


def qqbar_mul(a, b, degree_limit=24):
    if a.is_rational():
        a, b = b, a
    if b.is_rational():
        r = b.to_rational()
        if r == 0:
            return AlgebraicNumber.from_rational(0)
        if r == 1:
            return a
        mp = _scale_rational(list(a.minpoly), r)
        def encl(prec):
            return cb_mul(a.enclosure(prec),
                          ComplexBall.from_fractions(r, Fraction(0), prec), prec)
        return _select_from_annihilator(mp, encl, degree_limit)
    ann = _binary_annihilator("mul", list(a.minpoly), list(b.minpoly))
    def encl(prec):
        return cb_mul(a.enclosure(prec), b.enclosure(prec), prec)
    return _select_from_annihilator(ann, encl, degree_limit)


def qqbar_inv(a):
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero")
    mp = intpoly.primitive(list(reversed(a.minpoly)))
    def encl(prec):
        return cb_inv(a.enclosure(prec), prec)
    return _select_from_annihilator(mp, encl, degree_limit=len(a.minpoly))


def qqbar_div(a, b, degree_limit=24):
    return qqbar_mul(a, qqbar_inv(b), degree_limit)


def qqbar_pow_rational(a, num, den, degree_limit=24, den_limit=12):
    """a**(num/den) on the principal branch."""
    g = math.gcd(num, den)
    num //= g
    den //= g
    if den < 0:
        num, den = -num, -den
    if den > den_limit:
        raise UnsupportedDegreeError("root order %d exceeds the limit %d"
                                     % (den, den_limit))
    if a.is_zero():
        if num <= 0:
            raise ZeroDivisionError("zero to a nonpositive power")
        return a
    base = a
    if den > 1:
        p = list(a.minpoly)
        # annihilator p(x**den)
        stretched = [0] * (den * (len(p) - 1) + 1)
        for i, c in enumerate(p):
            stretched[den * i] = c
        def encl(prec):
            z = a.enclosure(prec)
            lg = cb_log(z, prec)
            if lg.is_indeterminate:
                return ComplexBall.indeterminate()
            return cb_exp(cb_mul(lg, ComplexBall.from_fractions(
                Fraction(1, den), Fraction(0), prec), prec), prec)
        base = _select_from_annihilator(stretched, encl,
                                        degree_limit=max(degree_limit,
                                                         den * a.degree()))
    if num == 1:
        result = base
    else:
        result = qqbar_pow_int(base, num, degree_limit=max(degree_limit,
                                                           base.degree()))
    if result.degree() > degree_limit:
        raise UnsupportedDegreeError("result degree %d exceeds limit %d"
                                     % (result.degree(), degree_limit))
    return result


def qqbar_pow_int(a, n, degree_limit=24):
    if n == 0:
        return AlgebraicNumber.from_rational(1)
    if n < 0:
        return qqbar_pow_int(qqbar_inv(a), -n, degree_limit)
    result = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else qqbar_mul(result, base, degree_limit)
        n >>= 1
        if n:
            base = qqbar_mul(base, base, degree_limit)
    return result


def qqbar_sqrt(a, degree_limit=24):
    return qqbar_pow_rational(a, 1, 2, degree_limit)


def qqbar_arith(kind, a, b=None, degree_limit=24):
    """Flat entry point: add, sub, mul, div, neg, inv, pow_rational."""
    if kind == "add":
        return qqbar_add(a, b, degree_limit)
    if kind == "sub":
        return qqbar_sub(a, b, degree_limit)
    if kind == "mul":
        return qqbar_mul(a, b, degree_limit)
    if kind == "div":
        return qqbar_div(a, b, degree_limit)
    if kind == "neg":
        return qqbar_neg(a)
    if kind == "inv":
        return qqbar_inv(a)
    if kind == "pow_rational":
        num, den = b
        return qqbar_pow_rational(a, num, den, degree_limit)
    raise ValueError("unknown operation %r" % (kind,))


def qqbar_equal(a, b):
    """Total equality test (canonical representations make it structural)."""
    return a.key() == b.key()


def qqbar_cmp_real(a, b):
    """-1, 0, 1 comparison of two real algebraic numbers."""
    if not (a.is_real() and b.is_real()):
        raise ValueError("comparison requires real algebraic numbers")
    if qqbar_equal(a, b):
        return 0
    prec = 64
    while True:
        ba, bb = a.enclosure(prec), b.enclosure(prec)
        if ba.re.upper() < bb.re.lower():
            return -1
        if bb.re.upper() < ba.re.lower():
            return 1
        prec *= 2
        if prec > 1 << 20:
            raise ArithmeticError("comparison failed to separate distinct numbers")


def qqbar_conj(a):
    return a.conjugate()

"""Arbitrary-precision real and complex ball arithmetic.

Values are midpoint-radius enclosures: the midpoint is an exact dyadic
number (mantissa * 2**exponent with a Python int mantissa), the radius a
nonnegative low-precision bound.  Every operation returns a ball that
contains the exact image of every point of its input balls; rounding of
midpoints is compensated by enlarging the radius.

Operations that are undefined on part of an input ball (division or log
through zero) return an *indeterminate* ball covering the whole plane
instead of raising, so callers can simply retry at higher precision.
"""

from fractions import Fraction
from functools import lru_cache
import math

_MAG_BITS = 31  # radius mantissa size; radii are always rounded up


# ---------------------------------------------------------------------------
# magnitude (radius) helpers: pairs (man, exp) with 0 <= man < 2**_MAG_BITS,
# man == -1 encodes an infinite radius
# ---------------------------------------------------------------------------

MAG_ZERO = (0, 0)
MAG_INF = (-1, 0)


def mag_is_inf(m):
    return m[0] == -1


def mag_trim(man, exp):
    """Round a nonnegative integer mantissa up to _MAG_BITS bits."""
    if man == 0:
        return MAG_ZERO
    nb = man.bit_length()
    if nb <= _MAG_BITS:
        return (man, exp)
    sh = nb - _MAG_BITS
    return ((man >> sh) + 1, exp + sh)


def mag_from_dyadic(man, exp):
    return mag_trim(abs(man), exp)


def mag_add(a, b):
    if mag_is_inf(a) or mag_is_inf(b):
        return MAG_INF
    if a[0] == 0:
        return b
    if b[0] == 0:
        return a
    if a[1] < b[1]:
        a, b = b, a
    gap = a[1] - b[1]
    if gap > 64:
        # b is far below one ulp of a
        return mag_trim(a[0] + 1, a[1])
    return mag_trim((a[0] << gap) + b[0], b[1])


def mag_mul(a, b):
    if mag_is_inf(a) or mag_is_inf(b):
        return MAG_INF
    if a[0] == 0 or b[0] == 0:
        return MAG_ZERO
    return mag_trim(a[0] * b[0], a[1] + b[1])


def mag_cmp(a, b):
    """-1, 0, 1 comparison of two finite magnitudes."""
    if a[0] == 0 or b[0] == 0:
        return (a[0] > 0) - (b[0] > 0)
    e = min(a[1], b[1])
    va = a[0] << (a[1] - e)
    vb = b[0] << (b[1] - e)
    return (va > vb) - (va < vb)


def mag_pow2(exp):
    return (1, exp)


# ---------------------------------------------------------------------------
# dyadic midpoint helpers
# ---------------------------------------------------------------------------

def _round_dyadic(man, exp, prec):
    """Round man*2**exp to prec mantissa bits, round-to-nearest-even.

    Returns (man, exp, err) where err is a magnitude bound on the
    rounding error (MAG_ZERO when exact).
    """
    if man == 0:
        return 0, 0, MAG_ZERO
    nb = man.bit_length()
    if nb <= prec:
        return man, exp, MAG_ZERO
    sh = nb - prec
    neg = man < 0
    a = -man if neg else man
    q, r = divmod(a, 1 << sh)
    if r == 0:
        return (-q if neg else q), exp + sh, MAG_ZERO
    half = 1 << (sh - 1)
    if r > half or (r == half and (q & 1)):
        q += 1
    return (-q if neg else q), exp + sh, mag_pow2(exp + sh - 1)


def _add_dyadic(m1, e1, m2, e2, cap):
    """Exact dyadic addition, except that a term more than `cap` bits below
    the other is dropped into an error bound.  Returns (man, exp, err)."""
    if m1 == 0:
        return m2, e2, MAG_ZERO
    if m2 == 0:
        return m1, e1, MAG_ZERO
    if e1 < e2:
        m1, e1, m2, e2 = m2, e2, m1, e1
    gap = e1 - e2
    if gap > cap + m2.bit_length() + 8:
        return m1, e1, mag_from_dyadic(m2, e2)
    return (m1 << gap) + m2, e2, MAG_ZERO


# ---------------------------------------------------------------------------
# RealBall
# ---------------------------------------------------------------------------

class RealBall:
    __slots__ = ("man", "exp", "rad")

    def __init__(self, man=0, exp=0, rad=MAG_ZERO):
        self.man = man
        self.exp = exp
        self.rad = rad

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_int(n):
        return RealBall(n, 0, MAG_ZERO)

    @staticmethod
    def from_fraction(q, prec):
        q = Fraction(q)
        num, den = q.numerator, q.denominator
        if den == 1:
            return RealBall(num, 0, MAG_ZERO)
        # round num/den to prec+2 bits
        nb = abs(num).bit_length()
        db = den.bit_length()
        sh = prec + 2 - (nb - db)
        if sh < 0:
            sh = 0
        t, r = divmod(num << sh, den)
        if r:
            man, exp, err = _round_dyadic(2 * t + 1, -sh - 1, prec)
            err = mag_add(err, mag_pow2(-sh - 1))
            return RealBall(man, exp, err)
        man, exp, err = _round_dyadic(t, -sh, prec)
        return RealBall(man, exp, err)

    @staticmethod
    def whole_line():
        return RealBall(0, 0, MAG_INF)

    # -- predicates / accessors ---------------------------------------------

    @property
    def is_indeterminate(self):
        return mag_is_inf(self.rad)

    def is_exact(self):
        return self.rad[0] == 0

    def is_zero(self):
        return self.man == 0 and self.rad[0] == 0

    def mid_fraction(self):
        m, e = self.man, self.exp
        return Fraction(m * 2**e) if e >= 0 else Fraction(m, 2**-e)

    def rad_fraction(self):
        if self.is_indeterminate:
            raise ValueError("indeterminate ball has no radius")
        m, e = self.rad
        return Fraction(m * 2**e) if e >= 0 else Fraction(m, 2**-e)

    def lower(self):
        """Exact lower bound as a Fraction."""
        return self.mid_fraction() - self.rad_fraction()

    def upper(self):
        return self.mid_fraction() + self.rad_fraction()

    def contains_zero(self):
        if self.is_indeterminate:
            return True
        if self.man == 0:
            return True
        return mag_cmp(mag_from_abs_lower(self.man, self.exp), self.rad) <= 0

    def contains_fraction(self, q):
        if self.is_indeterminate:
            return True
        q = Fraction(q)
        diff = abs(self.mid_fraction() - q)
        return diff <= self.rad_fraction()

    def is_positive(self):
        """True iff the whole ball is > 0."""
        return (not self.is_indeterminate) and self.man > 0 \
            and not self.contains_zero()

    def is_negative(self):
        return (not self.is_indeterminate) and self.man < 0 \
            and not self.contains_zero()

    def is_nonnegative(self):
        return self.is_zero() or self.lower() >= 0

    def mag_upper(self):
        """Magnitude bound on |self|."""
        if self.is_indeterminate:
            return MAG_INF
        return mag_add(mag_from_dyadic(self.man, self.exp), self.rad)

    def __repr__(self):
        if self.is_indeterminate:
            return "RealBall(indeterminate)"
        return "RealBall(%s +/- %s)" % (decimal_str_dyadic(self.man, self.exp, 10),
                                        decimal_str_dyadic(self.rad[0], self.rad[1], 3))


def mag_from_abs_lower(man, exp):
    """Magnitude lower bound of |man*2**exp| (rounds down)."""
    m = abs(man)
    if m == 0:
        return MAG_ZERO
    nb = m.bit_length()
    if nb <= _MAG_BITS:
        return (m, exp)
    sh = nb - _MAG_BITS
    return (m >> sh, exp + sh)


def _endpoints(x, prec):
    """Exact dyadic (lo, hi) containing x, slightly widened if the radius
    is too far below the midpoint to align within ~prec bits."""
    if x.is_indeterminate:
        raise ValueError("indeterminate ball has no endpoints")
    if x.rad[0] == 0:
        return (x.man, x.exp), (x.man, x.exp)
    rman, rexp = x.rad
    if x.man != 0:
        hi_mid = x.exp + x.man.bit_length()
        hi_rad = rexp + rman.bit_length()
        if hi_mid - hi_rad > prec + 64:
            rman, rexp = 1, hi_mid - (prec + 64)
    e = min(x.exp, rexp)
    m = x.man << (x.exp - e)
    r = rman << (rexp - e)
    return (m - r, e), (m + r, e)


def ball_from_endpoints(lo, hi, prec):
    """Ball containing [lo, hi] (exact dyadics (man, exp))."""
    (ml, el), (mh, eh) = lo, hi
    e = min(el, eh)
    a = ml << (el - e)
    b = mh << (eh - e)
    mid2 = a + b  # 2*mid at exponent e
    man, exp, err = _round_dyadic(mid2, e - 1, prec)
    rad = mag_add(mag_from_dyadic(b - a, e - 1), err)
    return RealBall(man, exp, rad)


# -- real arithmetic --------------------------------------------------------

def rb_neg(x):
    return RealBall(-x.man, x.exp, x.rad)


def rb_add(x, y, prec):
    if x.is_indeterminate or y.is_indeterminate:
        return RealBall.whole_line()
    man, exp, drop = _add_dyadic(x.man, x.exp, y.man, y.exp, prec)
    man, exp, err = _round_dyadic(man, exp, prec)
    rad = mag_add(mag_add(x.rad, y.rad), mag_add(drop, err))
    return RealBall(man, exp, rad)


def rb_sub(x, y, prec):
    return rb_add(x, rb_neg(y), prec)


def rb_mul(x, y, prec):
    if x.is_indeterminate or y.is_indeterminate:
        return RealBall.whole_line()
    man, exp, err = _round_dyadic(x.man * y.man, x.exp + y.exp, prec)
    mx = mag_from_dyadic(x.man, x.exp)
    my = mag_from_dyadic(y.man, y.exp)
    rad = mag_add(mag_add(mag_mul(mx, y.rad), mag_mul(my, x.rad)),
                  mag_add(mag_mul(x.rad, y.rad), err))
    return RealBall(man, exp, rad)


def rb_mul_int(x, n, prec):
    return rb_mul(x, RealBall.from_int(n), prec)


def rb_inv(x, prec):
    """1/x; indeterminate if x may contain zero."""
    if x.is_indeterminate or x.contains_zero():
        return RealBall.whole_line()
    # |1/z - 1/m| <= r / (|m| (|m| - r))
    neg = x.man < 0
    a = -x.man if neg else x.man
    nb = a.bit_length()
    sh = prec + 2 + nb
    q = (1 << sh) // a  # 1/a = q*2**-sh up to one ulp
    man, exp, err = _round_dyadic(q, -sh - x.exp, prec)
    err = mag_add(err, mag_pow2(-sh - x.exp))
    mlo = mag_from_abs_lower(x.man, x.exp)
    # lower bound of |m| - r
    diff_lo = _mag_sub_lower(mlo, x.rad)
    if diff_lo[0] <= 0:
        return RealBall.whole_line()
    rad = mag_add(_mag_div_up(x.rad, mag_mul_lower(mlo, diff_lo)), err)
    res = RealBall(-man if neg else man, exp, rad)
    return res


def _mag_sub_lower(a, b):
    """Lower bound of a - b for magnitudes (may be <= 0, signalled by man 0)."""
    e = min(a[1], b[1])
    va = a[0] << (a[1] - e)
    vb = b[0] << (b[1] - e)
    d = va - vb
    if d <= 0:
        return MAG_ZERO
    return mag_from_abs_lower(d, e)


def mag_mul_lower(a, b):
    if a[0] == 0 or b[0] == 0:
        return MAG_ZERO
    return mag_from_abs_lower(a[0] * b[0], a[1] + b[1])


def _mag_div_up(a, b_lower):
    """Upper bound of a / b given a lower bound of b."""
    if a[0] == 0:
        return MAG_ZERO
    if b_lower[0] == 0:
        return MAG_INF
    q = (a[0] << (2 * _MAG_BITS)) // b_lower[0] + 1
    return mag_trim(q, a[1] - b_lower[1] - 2 * _MAG_BITS)


def rb_div(x, y, prec):
    return rb_mul(x, rb_inv(y, prec + 4), prec)


def _isqrt_floor(man, exp, guard):
    """Floor of sqrt(man*2**exp) with `guard` extra bits.

    Returns (q, e) with q*2**e <= sqrt(x) < (q+1)*2**e.
    """
    if exp % 2:
        man <<= 1
        exp -= 1
    man <<= 2 * guard
    exp -= 2 * guard
    return math.isqrt(man), exp // 2


def rb_sqrt_nonneg(x, prec):
    """Square root of a ball known to lie in [0, inf)."""
    if x.is_indeterminate:
        return RealBall.whole_line()
    lo, hi = _endpoints(x, prec)
    if hi[0] < 0:
        return RealBall.whole_line()
    g = prec + 8
    if lo[0] <= 0:
        slo = (0, 0)
    else:
        slo = _isqrt_floor(lo[0], lo[1], g)
    qh, eh = _isqrt_floor(hi[0], hi[1], g)
    shi = (qh + 1, eh)
    return ball_from_endpoints(slo, shi, prec)


# -- real elementary functions ----------------------------------------------

@lru_cache(maxsize=None)
def _log2_ball(prec):
    """Enclosure of log(2) = 2*atanh(1/3)."""
    wp = prec + 16
    one = 1 << wp
    # s = sum 1/((2k+1) 3^(2k+1)), integer arithmetic with floor divisions
    t = one // 3
    s = t
    k = 1
    terms = 1
    while t:
        t //= 9
        if not t:
            break
        s += t // (2 * k + 1)
        k += 1
        terms += 1
    s *= 2
    rad = mag_trim(2 * terms + 8, -wp)
    man, exp, err = _round_dyadic(s, -wp, prec)
    return RealBall(man, exp, mag_add(rad, err))


def _atan_inv_int(q, wp):
    """(floor-ish of 2**wp * atan(1/q), term count) for integer q >= 2."""
    one = 1 << wp
    t = one // q
    q2 = q * q
    s = t
    k = 1
    terms = 1
    while t:
        t //= q2
        if not t:
            break
        d = t // (2 * k + 1)
        s += -d if k % 2 else d
        k += 1
        terms += 1
    return s, terms


@lru_cache(maxsize=None)
def const_pi(prec):
    """Enclosure of pi via Machin's formula 16*atan(1/5) - 4*atan(1/239)."""
    wp = prec + 16
    a5, t5 = _atan_inv_int(5, wp)
    a239, t239 = _atan_inv_int(239, wp)
    s = 16 * a5 - 4 * a239
    rad = mag_trim(16 * (t5 + 2) + 4 * (t239 + 2), -wp)
    man, exp, err = _round_dyadic(s, -wp, prec)
    return RealBall(man, exp, mag_add(rad, err))


def _log_point(man, exp, prec):
    """Enclosure of log(man*2**exp) for an exact positive dyadic."""
    assert man > 0
    wp = prec + 16
    nb = man.bit_length()
    # x = a * 2**s with a in [1, 2)
    s = exp + nb - 1
    a_man, a_exp = man, -(nb - 1)
    # keep a in [0.75, 1.5) so u = (a-1)/(a+1) is small
    if a_man * 2 >= 3 << (nb - 1):  # a >= 1.5
        a_exp -= 1
        s += 1
    num = RealBall(a_man, a_exp + 1, MAG_ZERO)  # 2a
    u = rb_div(rb_add(num, RealBall.from_int(-2), wp),
               rb_add(num, RealBall.from_int(2), wp), wp)
    u2 = rb_mul(u, u, wp)
    t = u
    total = u
    k = 1
    while True:
        t = rb_mul(t, u2, wp)
        if mag_cmp(t.mag_upper(), mag_pow2(-wp)) <= 0:
            break
        total = rb_add(total, rb_mul(t, RealBall.from_fraction(Fraction(1, 2 * k + 1), wp), wp), wp)
        k += 1
        if k > wp:
            break
    # tail bound: |t| * u^2/(1-u^2) <= |t| (u^2 <= 1/4)
    tail = mag_add(t.mag_upper(), mag_pow2(-wp + 2))
    total = RealBall(total.man, total.exp, mag_add(total.rad, tail))
    res = rb_mul_int(total, 2, wp)
    if s:
        res = rb_add(res, rb_mul_int(_log2_ball(wp), s, wp), wp)
    man2, exp2, err = _round_dyadic(res.man, res.exp, prec)
    return RealBall(man2, exp2, mag_add(res.rad, err))


def rb_log_pos(x, prec):
    """log of a ball separated above zero (monotone endpoint evaluation)."""
    if x.is_indeterminate:
        return RealBall.whole_line()
    lo, hi = _endpoints(x, prec)
    if lo[0] <= 0:
        return RealBall.whole_line()
    bl = _log_point(lo[0], lo[1], prec + 8)
    bh = _log_point(hi[0], hi[1], prec + 8)
    llo, _ = _endpoints(bl, prec + 8)
    _, hhi = _endpoints(bh, prec + 8)
    return ball_from_endpoints(llo, hhi, prec)


def _atan_point(man, exp, prec):
    """Enclosure of atan(man*2**exp) for an exact dyadic."""
    if man == 0:
        return RealBall.from_int(0)
    wp = prec + 16
    neg = man < 0
    if neg:
        man = -man
    x = RealBall(man, exp, MAG_ZERO)
    flip = False
    # atan(x) = pi/2 - atan(1/x) for x > 1
    if x.mid_fraction() > 1:
        x = rb_inv(x, wp)
        flip = True
    # halve until |x| <= 3/8
    halvings = 0
    while x.mag_upper()[0] != 0 and mag_cmp(x.mag_upper(), mag_trim(3, -3)) > 0:
        den = rb_add(RealBall.from_int(1),
                     rb_sqrt_nonneg(rb_add(RealBall.from_int(1), rb_mul(x, x, wp), wp), wp), wp)
        x = rb_div(x, den, wp)
        halvings += 1
        if halvings > 10:
            break
    x2 = rb_mul(x, x, wp)
    t = x
    total = x
    k = 1
    while True:
        t = rb_mul(t, x2, wp)
        if mag_cmp(t.mag_upper(), mag_pow2(-wp)) <= 0:
            break
        term = rb_mul(t, RealBall.from_fraction(Fraction(1, 2 * k + 1), wp), wp)
        total = rb_sub(total, term, wp) if k % 2 else rb_add(total, term, wp)
        k += 1
        if k > wp:
            break
    total = RealBall(total.man, total.exp, mag_add(total.rad, t.mag_upper()))
    total = rb_mul_int(total, 1 << halvings, wp)
    if flip:
        total = rb_sub(rb_mul(const_pi(wp), RealBall.from_fraction(Fraction(1, 2), wp), wp),
                       total, wp)
    if neg:
        total = rb_neg(total)
    man2, exp2, err = _round_dyadic(total.man, total.exp, prec)
    return RealBall(man2, exp2, mag_add(total.rad, err))


def rb_atan(x, prec):
    if x.is_indeterminate:
        return RealBall.whole_line()
    lo, hi = _endpoints(x, prec)
    bl = _atan_point(lo[0], lo[1], prec + 8)
    bh = _atan_point(hi[0], hi[1], prec + 8)
    llo, _ = _endpoints(bl, prec + 8)
    _, hhi = _endpoints(bh, prec + 8)
    return ball_from_endpoints(llo, hhi, prec)


# ---------------------------------------------------------------------------
# ComplexBall
# ---------------------------------------------------------------------------

class ComplexBall:
    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = re if re is not None else RealBall()
        self.im = im if im is not None else RealBall()

    @staticmethod
    def from_int(n):
        return ComplexBall(RealBall.from_int(n), RealBall.from_int(0))

    @staticmethod
    def from_fractions(re, im, prec):
        return ComplexBall(RealBall.from_fraction(re, prec),
                           RealBall.from_fraction(im, prec))

    @staticmethod
    def indeterminate():
        return ComplexBall(RealBall.whole_line(), RealBall.whole_line())

    @property
    def is_indeterminate(self):
        return self.re.is_indeterminate or self.im.is_indeterminate

    def is_exact(self):
        return self.re.is_exact() and self.im.is_exact()

    def contains_zero(self):
        return self.re.contains_zero() and self.im.contains_zero()

    def contains_fractions(self, re, im):
        return self.re.contains_fraction(re) and self.im.contains_fraction(im)

    def is_exact_real(self):
        return self.im.is_zero()

    def mag_upper(self):
        """Bound on |z| (via |re| + |im|)."""
        return mag_add(self.re.mag_upper(), self.im.mag_upper())

    def __repr__(self):
        return "ComplexBall(%r, %r)" % (self.re, self.im)


def separated_from_zero(z):
    """True iff the enclosure provably excludes 0."""
    if z.is_indeterminate:
        return False
    return not z.contains_zero()


def cb_neg(z):
    return ComplexBall(rb_neg(z.re), rb_neg(z.im))


def cb_conj(z):
    return ComplexBall(z.re, rb_neg(z.im))


def cb_add(x, y, prec):
    return ComplexBall(rb_add(x.re, y.re, prec), rb_add(x.im, y.im, prec))


def cb_sub(x, y, prec):
    return ComplexBall(rb_sub(x.re, y.re, prec), rb_sub(x.im, y.im, prec))


def cb_mul(x, y, prec):
    wp = prec + 4
    re = rb_sub(rb_mul(x.re, y.re, wp), rb_mul(x.im, y.im, wp), prec)
    im = rb_add(rb_mul(x.re, y.im, wp), rb_mul(x.im, y.re, wp), prec)
    return ComplexBall(re, im)


def cb_div(x, y, prec):
    if y.is_indeterminate or y.contains_zero():
        return ComplexBall.indeterminate()
    wp = prec + 8
    den = rb_add(rb_mul(y.re, y.re, wp), rb_mul(y.im, y.im, wp), wp)
    inv_den = rb_inv(den, wp)
    if inv_den.is_indeterminate:
        return ComplexBall.indeterminate()
    num = cb_mul(x, cb_conj(y), wp)
    return ComplexBall(rb_mul(num.re, inv_den, prec), rb_mul(num.im, inv_den, prec))


def cb_inv(z, prec):
    return cb_div(ComplexBall.from_int(1), z, prec)


def cb_pow_int(z, n, prec):
    if n == 0:
        return ComplexBall.from_int(1)
    if n < 0:
        return cb_inv(cb_pow_int(z, -n, prec + 4), prec)
    wp = prec + 4 * max(1, n.bit_length())
    result = None
    base = z
    while n:
        if n & 1:
            result = base if result is None else cb_mul(result, base, wp)
        n >>= 1
        if n:
            base = cb_mul(base, base, wp)
    return cb_round(result, prec)


def cb_round(z, prec):
    rm, re_, err1 = _round_dyadic(z.re.man, z.re.exp, prec)
    im, ie, err2 = _round_dyadic(z.im.man, z.im.exp, prec)
    return ComplexBall(RealBall(rm, re_, mag_add(z.re.rad, err1)),
                       RealBall(im, ie, mag_add(z.im.rad, err2)))


def cb_exp(z, prec):
    """exp on rectangular complex balls via scaled Taylor series."""
    if z.is_indeterminate:
        return ComplexBall.indeterminate()
    m = z.mag_upper()
    if m[0] != 0 and m[1] + m[0].bit_length() > 48:
        # absurdly large argument; give up (sound: whole plane)
        return ComplexBall.indeterminate()
    # scale z/2**k until |z| <= 1/64
    k = 0
    if m[0] != 0:
        size = m[1] + m[0].bit_length()
        if size > -6:
            k = size + 6
    wp = prec + 2 * k + 16
    w = ComplexBall(RealBall(z.re.man, z.re.exp - k, (z.re.rad[0], z.re.rad[1] - k)),
                    RealBall(z.im.man, z.im.exp - k, (z.im.rad[0], z.im.rad[1] - k))) \
        if k else z
    one = ComplexBall.from_int(1)
    total = one
    t = one
    n = 1
    while True:
        t = cb_mul(t, w, wp)
        t = cb_mul(t, ComplexBall(RealBall.from_fraction(Fraction(1, n), wp), RealBall.from_int(0)), wp)
        total = cb_add(total, t, wp)
        if mag_cmp(t.mag_upper(), mag_pow2(-wp)) <= 0:
            break
        n += 1
        if n > wp:
            break
    # geometric tail bound: |t| * |w| / (1 - |w|) <= |t| (|w| <= 1/64)
    tail = t.mag_upper()
    total = ComplexBall(RealBall(total.re.man, total.re.exp, mag_add(total.re.rad, tail)),
                        RealBall(total.im.man, total.im.exp, mag_add(total.im.rad, tail)))
    for _ in range(k):
        total = cb_mul(total, total, wp)
    return cb_round(total, prec)


def _arg_rectangle(z, prec):
    """Enclosure of the principal argument of a rectangle not containing 0.

    Exact points on the negative real axis get arg = +pi; rectangles
    straddling the cut are widened to [-pi, pi].
    """
    wp = prec + 8
    a, b = z.re, z.im
    pi = const_pi(wp)
    if a.is_positive():
        return rb_atan(rb_div(b, a, wp), prec)
    if b.is_positive():
        return rb_sub(rb_mul(pi, RealBall.from_fraction(Fraction(1, 2), wp), wp),
                      rb_atan(rb_div(a, b, wp), wp), prec)
    if b.is_negative():
        return rb_sub(rb_neg(rb_mul(pi, RealBall.from_fraction(Fraction(1, 2), wp), wp)),
                      rb_atan(rb_div(a, b, wp), wp), prec)
    if a.is_negative():
        if b.is_nonnegative():
            # upper edge of the cut, including exact negative reals
            return rb_add(pi, rb_atan(rb_div(b, a, wp), wp), prec)
        # rectangle straddles the cut: principal value lies in (-pi, pi]
        return RealBall(0, 0, mag_add(pi.mag_upper(), mag_pow2(-prec)))
    # contains zero in some direction; caller should have checked
    return RealBall.whole_line()


def cb_log(z, prec):
    """Principal branch log; indeterminate when the ball may contain 0."""
    if z.is_indeterminate or z.contains_zero():
        return ComplexBall.indeterminate()
    wp = prec + 8
    mag2 = rb_add(rb_mul(z.re, z.re, wp), rb_mul(z.im, z.im, wp), wp)
    lg = rb_log_pos(mag2, wp)
    if lg.is_indeterminate:
        return ComplexBall.indeterminate()
    re = rb_mul(lg, RealBall.from_fraction(Fraction(1, 2), wp), prec)
    im = _arg_rectangle(z, prec)
    if im.is_indeterminate:
        return ComplexBall.indeterminate()
    return ComplexBall(re, im)


def cb_sqrt(z, prec):
    """Principal square root.

    A ball containing 0, or straddling the branch cut, is widened to a
    centered ball covering all principal-branch limits.
    """
    if z.is_indeterminate:
        return ComplexBall.indeterminate()
    if z.is_exact_real() and z.re.is_nonnegative():
        return ComplexBall(rb_sqrt_nonneg(z.re, prec), RealBall.from_int(0))
    straddles = z.re.lower() < 0 and z.im.contains_zero() and not z.im.is_zero()
    if z.contains_zero() or straddles:
        m = z.mag_upper()
        if mag_is_inf(m):
            return ComplexBall.indeterminate()
        # sqrt of the magnitude bound, rounded up
        if m[0] == 0:
            return ComplexBall.from_int(0)
        e = m[1]
        man = m[0]
        if e % 2:
            man <<= 1
            e -= 1
        r = mag_trim(math.isqrt(man << 8) + 1, e // 2 - 4)
        return ComplexBall(RealBall(0, 0, r), RealBall(0, 0, r))
    half = ComplexBall(RealBall.from_fraction(Fraction(1, 2), prec + 8), RealBall.from_int(0))
    lg = cb_log(z, prec + 8)
    if lg.is_indeterminate:
        return ComplexBall.indeterminate()
    return cb_exp(cb_mul(lg, half, prec + 8), prec)


def cb_pow(z, w, prec):
    """Principal branch z**w = exp(w log z); indeterminate if z may be 0."""
    if z.is_indeterminate or w.is_indeterminate or z.contains_zero():
        return ComplexBall.indeterminate()
    lg = cb_log(z, prec + 8)
    if lg.is_indeterminate:
        return ComplexBall.indeterminate()
    return cb_exp(cb_mul(w, lg, prec + 8), prec)


def cb_pi(prec):
    return ComplexBall(const_pi(prec), RealBall.from_int(0))


# ---------------------------------------------------------------------------
# the flat operation entry points
# ---------------------------------------------------------------------------

def ball_arith(kind, x, y=None, prec=64):
    """Field/radical operations on complex balls.

    kind is one of add, sub, mul, div, neg, sqrt, pow_int.  For pow_int,
    y is an integer exponent.
    """
    if prec < 2:
        raise ValueError("prec must be >= 2")
    if kind == "add":
        return cb_add(x, y, prec)
    if kind == "sub":
        return cb_sub(x, y, prec)
    if kind == "mul":
        return cb_mul(x, y, prec)
    if kind == "div":
        return cb_div(x, y, prec)
    if kind == "neg":
        return cb_neg(x)
    if kind == "sqrt":
        return cb_sqrt(x, prec)
    if kind == "pow_int":
        return cb_pow_int(x, y, prec)
    raise ValueError("unknown operation %r" % (kind,))


def ball_elementary(kind, x=None, y=None, prec=64):
    """Elementary transcendental operations: exp, log, pow, const_pi."""
    if prec < 2:
        raise ValueError("prec must be >= 2")
    if kind == "exp":
        return cb_exp(x, prec)
    if kind == "log":
        return cb_log(x, prec)
    if kind == "pow":
        return cb_pow(x, y, prec)
    if kind == "const_pi":
        return cb_pi(prec)
    raise ValueError("unknown operation %r" % (kind,))


# ---------------------------------------------------------------------------
# decimal output
# ---------------------------------------------------------------------------

def decimal_str_dyadic(man, exp, digits):
    """Format man*2**exp with `digits` significant decimal digits.

    Positional notation for decimal exponents in [-4, 5], otherwise
    scientific.  Trailing zeros are kept (0.5 -> "0.500000" at 6 digits).
    """
    if man == 0:
        return "0"
    neg = man < 0
    a = -man if neg else man
    e10 = math.floor((exp + a.bit_length() - 1) * 0.30102999566398119)
    for _ in range(3):
        k = digits - 1 - e10
        num = a * (10**k if k >= 0 else 1) * (2**exp if exp >= 0 else 1)
        den = (10**-k if k < 0 else 1) * (2**-exp if exp < 0 else 1)
        d, r = divmod(num, den)
        if 2 * r > den or (2 * r == den and d & 1):
            d += 1
        if d >= 10**digits:
            e10 += 1
            continue
        if d < 10**(digits - 1):
            e10 -= 1
            continue
        break
    s = str(d)
    if -4 <= e10 <= 5:
        if e10 >= 0:
            ip = s[:e10 + 1]
            fp = s[e10 + 1:]
            out = ip + ("." + fp if fp else "")
        else:
            out = "0." + "0" * (-e10 - 1) + s
    else:
        out = s[0] + "." + s[1:] + "e" + ("+%d" % e10 if e10 >= 0 else "%d" % e10)
    return ("-" if neg else "") + out


def decimal_str(ball, digits=6):
    """Decimal display of a real or complex ball at `digits` digits."""
    if isinstance(ball, ComplexBall):
        if (not ball.re.is_indeterminate and not ball.im.is_indeterminate
                and ball.re.contains_zero() and ball.im.contains_zero()):
            if ball.re.is_zero() and ball.im.is_zero():
                return "0"
            reh = ball.re.mag_upper()
            imh = ball.im.mag_upper()
            worst = reh if mag_cmp(reh, imh) >= 0 else imh
            e10 = math.floor((worst[1] + worst[0].bit_length()) * 0.30102999566398119)
            return "0e%+d" % e10
        im_negligible = ball.im.is_zero() or (
            not ball.im.is_indeterminate and ball.im.contains_zero()
            and _tiny_vs(ball.im, ball.re))
        re_negligible = ball.re.is_zero() or (
            not ball.re.is_indeterminate and ball.re.contains_zero()
            and _tiny_vs(ball.re, ball.im))
        if im_negligible:
            return decimal_str(ball.re, digits)
        if re_negligible:
            im_s = decimal_str(ball.im, digits)
            return "-%s*I" % im_s[1:] if im_s.startswith("-") else "%s*I" % im_s
        re_s = decimal_str(ball.re, digits)
        im_s = decimal_str(ball.im, digits)
        if im_s.startswith("-"):
            return "%s - %s*I" % (re_s, im_s[1:])
        return "%s + %s*I" % (re_s, im_s)
    if ball.is_indeterminate:
        return "?"
    if ball.is_zero():
        return "0"
    if ball.contains_zero():
        rman, rexp = ball.rad
        e10 = math.floor((rexp + rman.bit_length()) * 0.30102999566398119)
        return "0e%+d" % e10
    return decimal_str_dyadic(ball.man, ball.exp, digits)


# ---------------------------------------------------------------------------
# interval geometry helpers (used by root isolation)
# ---------------------------------------------------------------------------

def rb_disjoint(a, b):
    """True iff the two real intervals provably do not intersect."""
    if a.is_indeterminate or b.is_indeterminate:
        return False
    return a.upper() < b.lower() or b.upper() < a.lower()


def rb_subset(a, b):
    """True iff interval a lies inside interval b."""
    return b.lower() <= a.lower() and a.upper() <= b.upper()


def rb_intersect(a, b, prec):
    """Ball containing the intersection of two intervals; None if empty."""
    if a.is_indeterminate:
        return b
    if b.is_indeterminate:
        return a
    lo = max(a.lower(), b.lower())
    hi = min(a.upper(), b.upper())
    if lo > hi:
        return None
    if lo == hi:
        return _exact_or_tight(lo, prec)
    mid = (lo + hi) / 2
    halfw = (hi - lo) / 2
    m = RealBall.from_fraction(mid, prec + 8)
    extra = mag_from_fraction_upper(halfw)
    return RealBall(m.man, m.exp, mag_add(m.rad, extra))


def _exact_or_tight(q, prec):
    den = q.denominator
    if den & (den - 1) == 0:
        return RealBall(q.numerator, -(den.bit_length() - 1), MAG_ZERO)
    return RealBall.from_fraction(q, prec + 8)


def mag_from_fraction_upper(q):
    """Magnitude upper bound of a nonnegative Fraction."""
    if q == 0:
        return MAG_ZERO
    num, den = q.numerator, q.denominator
    sh = den.bit_length() + _MAG_BITS
    return mag_trim((num << sh) // den + 1, -sh)


def cb_disjoint(a, b):
    return rb_disjoint(a.re, b.re) or rb_disjoint(a.im, b.im)


def cb_subset(a, b):
    return rb_subset(a.re, b.re) and rb_subset(a.im, b.im)


def cb_intersect(a, b, prec):
    re = rb_intersect(a.re, b.re, prec)
    im = rb_intersect(a.im, b.im, prec)
    if re is None or im is None:
        return None
    return ComplexBall(re, im)


def cb_midpoint_exact(z):
    """The midpoint of a box as an exact (radius-zero) ball."""
    return ComplexBall(RealBall(z.re.man, z.re.exp, MAG_ZERO),
                       RealBall(z.im.man, z.im.exp, MAG_ZERO))


def cb_horner(coeffs, z, prec):
    """Evaluate a polynomial (ascending int/Fraction coefficients) on a ball."""
    acc = ComplexBall.from_int(0)
    for c in reversed(coeffs):
        acc = cb_mul(acc, z, prec)
        if c:
            acc = cb_add(acc, ComplexBall.from_fractions(Fraction(c), Fraction(0), prec), prec)
    return acc


def _tiny_vs(small, big):
    """True if |small| is negligible at display scale relative to big."""
    if not small.man and small.rad[0] == 0:
        return True
    if big.man == 0:
        return False
    ms = small.mag_upper()
    if ms[0] == 0:
        return True
    if mag_is_inf(ms):
        return False
    return (ms[1] + ms[0].bit_length()) < (big.exp + abs(big.man).bit_length()) - 64

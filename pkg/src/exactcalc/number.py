"""Exact numbers over the extended complex plane.

An ExactNumber is a rational, an element of a simple algebraic number
field (polynomial representative with rationalized denominator), a formal
fraction over a general extension field, or a special value (unsigned or
directed infinity, undefined, unknown).  Arithmetic merges fields, reduces
by the certified relation ideal, canonicalizes, and demotes to the
simplest storage.  Computation is nonstop: singular or undecided results
are values, never exceptions.
"""

from fractions import Fraction

from . import intpoly
from .algebraic import (
    AlgebraicNumber, qqbar_add, qqbar_div, qqbar_mul, qqbar_pow_int,
    qqbar_pow_rational, qqbar_sqrt,
)
from .ball import (
    ComplexBall, RealBall, cb_add, cb_div, cb_exp, cb_mul, cb_pi, cb_pow_int,
    cb_sqrt, decimal_str, separated_from_zero,
)
from .extfield import (
    Extension, build_reduction_ideal, field_for, merge_fields, reduce_by_ideal,
)
from .intpoly import UnsupportedDegreeError
from .mpoly import FormalFraction, MPoly, canonicalize_fraction, format_poly, normal_form
from .truth import Truth

RATIONAL = "rational"
NF_ELEM = "nf_elem"
GENERIC = "generic"
SPECIAL = "special"

S_UINF = "uinf"
S_INF = "inf"
S_UNDEF = "undef"
S_UNKNOWN = "unknown"


class NotANumberError(ValueError):
    """A numeric operation was applied to a special value."""


class DomainError(ValueError):
    """Real comparison applied to values not provably real."""


class ExactNumber:
    __slots__ = ("ctx", "kind", "value", "field", "coeffs", "frac",
                 "special", "direction", "_encl", "_encl_prec")

    def __init__(self, ctx, kind):
        self.ctx = ctx
        self.kind = kind
        self.value = None
        self.field = None
        self.coeffs = None
        self.frac = None
        self.special = None
        self.direction = None
        self._encl = None
        self._encl_prec = 0

    # -- structure -----------------------------------------------------------

    def is_number(self):
        return self.kind != SPECIAL

    def is_special(self, which=None):
        if self.kind != SPECIAL:
            return False
        return which is None or self.special == which

    def is_unknown(self):
        return self.is_special(S_UNKNOWN)

    def is_rational_storage(self):
        return self.kind == RATIONAL

    def rational_value(self):
        if self.kind != RATIONAL:
            raise ValueError("not stored as a rational")
        return self.value

    def is_algebraic_storage(self):
        return self.kind in (RATIONAL, NF_ELEM)

    def is_nonzero_algebraic(self):
        if self.kind == RATIONAL:
            return self.value != 0
        return self.kind == NF_ELEM

    def is_one(self):
        return self.kind == RATIONAL and self.value == 1

    def field_extensions(self):
        if self.kind in (RATIONAL, SPECIAL):
            return ()
        return self.field.gens

    def structural_key(self):
        if self.kind == RATIONAL:
            return ("q", self.value)
        if self.kind == NF_ELEM:
            return ("nf", self.field.gens[0].intern_key(), self.coeffs)
        if self.kind == GENERIC:
            return ("gen", tuple(g.intern_key() for g in self.field.gens),
                    self.frac.num.terms, self.frac.den.terms)
        dir_key = self.direction.structural_key() if self.direction is not None else None
        return ("special", self.special, dir_key)

    def fraction_parts(self):
        """(num, den) as polynomials over this number's own field."""
        if self.kind == RATIONAL:
            return (MPoly.constant(self.value, 0), MPoly.constant(1, 0))
        if self.kind == NF_ELEM:
            num = MPoly.from_univariate(list(self.coeffs), 1, 0)
            return (num, MPoly.constant(1, 1))
        if self.kind == GENERIC:
            return (self.frac.num, self.frac.den)
        raise NotANumberError("special values have no fraction representation")

    # -- numerics -------------------------------------------------------------

    def enclosure_raw(self, prec, ctx=None):
        """One-shot enclosure at the given working precision."""
        ctx = ctx or self.ctx
        if self._encl is not None and self._encl_prec >= prec:
            return self._encl
        if self.kind == RATIONAL:
            ball = ComplexBall.from_fractions(self.value, Fraction(0), prec)
        elif self.kind == NF_ELEM:
            g = self.field.gens[0].enclosure(prec + 8, ctx)
            ball = _horner_ball(self.coeffs, g, prec)
        elif self.kind == GENERIC:
            ball = _fraction_ball(self.frac, self.field, prec, ctx)
        else:
            raise NotANumberError("special values have no enclosure")
        if not ball.is_indeterminate:
            self._encl = ball
            self._encl_prec = prec
        return ball

    def __repr__(self):
        return repr_text(self)

    # -- operator sugar --------------------------------------------------------

    def _co(self, other):
        return self.ctx._coerce(other)

    def __add__(self, other):
        return add(self, self._co(other))

    def __radd__(self, other):
        return add(self._co(other), self)

    def __sub__(self, other):
        return sub(self, self._co(other))

    def __rsub__(self, other):
        return sub(self._co(other), self)

    def __mul__(self, other):
        return mul(self, self._co(other))

    def __rmul__(self, other):
        return mul(self._co(other), self)

    def __truediv__(self, other):
        return div(self, self._co(other))

    def __rtruediv__(self, other):
        return div(self._co(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, other):
        if isinstance(other, int):
            return pow_int(self, other)
        return self.ctx.pow(self, other)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def from_rational(ctx, q):
    x = ExactNumber(ctx, RATIONAL)
    x.value = Fraction(q)
    return x


def from_algebraic(ctx, alg):
    if alg.is_rational():
        return from_rational(ctx, alg.to_rational())
    ext = ctx.intern_extension(Extension(alg=alg))
    field = field_for(ctx, (ext,))
    x = ExactNumber(ctx, NF_ELEM)
    x.field = field
    coeffs = [Fraction(0)] * ext.alg.degree()
    coeffs[1] = Fraction(1)
    x.coeffs = tuple(coeffs)
    return x


def _generic_from_gen(ctx, field, k):
    x = ExactNumber(ctx, GENERIC)
    x.field = field
    x.frac = FormalFraction(MPoly.var(k, field.nvars, field.order),
                            MPoly.constant(1, field.nvars, field.order))
    return x


def special_unknown(ctx):
    x = ExactNumber(ctx, SPECIAL)
    x.special = S_UNKNOWN
    return x


def special_uinf(ctx):
    x = ExactNumber(ctx, SPECIAL)
    x.special = S_UINF
    return x


def special_undefined(ctx):
    x = ExactNumber(ctx, SPECIAL)
    x.special = S_UNDEF
    return x


def special_signed_inf(ctx, direction):
    x = ExactNumber(ctx, SPECIAL)
    x.special = S_INF
    x.direction = direction
    return x


def construct_pi(ctx):
    ext = ctx.intern_extension(Extension(head="Pi"))
    field = field_for(ctx, (ext,))
    return _generic_from_gen(ctx, field, 0)


def construct_i(ctx):
    got = ctx.value_cache.get("i")
    if got is not None:
        return got
    from .ball import mag_add, mag_from_fraction_upper
    b = ComplexBall.from_fractions(Fraction(0), Fraction(1), 64)
    widened = ComplexBall(
        RealBall(b.re.man, b.re.exp, mag_add(b.re.rad, mag_from_fraction_upper(Fraction(1, 4)))),
        RealBall(b.im.man, b.im.exp, mag_add(b.im.rad, mag_from_fraction_upper(Fraction(1, 4)))))
    alg = AlgebraicNumber.from_root([1, 0, 1], widened)
    res = from_algebraic(ctx, alg)
    ctx.value_cache["i"] = res
    return res


def _symbolic_number(ctx, head, args):
    """Intern a symbolic extension and return it as a number; the arguments'
    generators are adjoined so relations stay expressible."""
    ext = ctx.intern_extension(Extension(head=head, args=args))
    gens = (ext,)
    for a in args:
        gens = gens + tuple(a.field_extensions())
    field = field_for(ctx, gens)
    return _generic_from_gen(ctx, field, field.index_of(ext))


def _to_qqbar(x, limit):
    """AlgebraicNumber value of an algebraic-storage (or all-algebraic
    generic) number; raises UnsupportedDegreeError past the limit."""
    if x.kind == RATIONAL:
        return AlgebraicNumber.from_rational(x.value)
    if x.kind == NF_ELEM:
        g = x.field.gens[0].alg
        acc = AlgebraicNumber.from_rational(0)
        power = AlgebraicNumber.from_rational(1)
        for j, c in enumerate(x.coeffs):
            if c:
                acc = qqbar_add(acc, qqbar_mul(power, AlgebraicNumber.from_rational(c),
                                               limit), limit)
            if j + 1 < len(x.coeffs):
                power = qqbar_mul(power, g, limit)
        return acc
    if x.kind == GENERIC and x.field.all_algebraic():
        num = _eval_poly_qqbar(x.frac.num, x.field, limit)
        den = _eval_poly_qqbar(x.frac.den, x.field, limit)
        return qqbar_div(num, den, limit)
    raise UnsupportedDegreeError("value is not algebraic-storage")


def construct_sqrt(ctx, x):
    lim = ctx.options.qqbar_degree_limit
    if x.kind == SPECIAL:
        if x.special == S_UINF:
            return x
        if x.special == S_INF:
            d = construct_sqrt(ctx, x.direction)
            if d.is_number():
                return special_signed_inf(ctx, d)
            return special_unknown(ctx)
        return x  # undef, unknown propagate
    if x.kind == RATIONAL:
        q = x.value
        if q == 0:
            return from_rational(ctx, 0)
        key = ("sqrt", q)
        got = ctx.value_cache.get(key)
        if got is not None:
            return got
        rn = _isqrt_exact(abs(q.numerator))
        rd = _isqrt_exact(q.denominator)
        if q > 0 and rn is not None and rd is not None:
            res = from_rational(ctx, Fraction(rn, rd))
        else:
            mp = intpoly.primitive([-q.numerator, 0, q.denominator])
            approx = cb_sqrt(ComplexBall.from_fractions(q, Fraction(0), 96), 96)
            res = from_algebraic(ctx, AlgebraicNumber.from_root(mp, approx))
        ctx.value_cache[key] = res
        return res
    if x.is_algebraic_storage() or (x.kind == GENERIC and x.field.all_algebraic()):
        try:
            return from_algebraic(ctx, qqbar_sqrt(_to_qqbar(x, lim), lim))
        except (UnsupportedDegreeError, ArithmeticError):
            pass
    z = is_zero(x)
    if z is Truth.TRUE:
        return from_rational(ctx, 0)
    return _symbolic_number(ctx, "Sqrt", (x,))


def _isqrt_exact(n):
    import math
    r = math.isqrt(n)
    return r if r * r == n else None


def construct_exp(ctx, x, pow_origin=None):
    if x.kind == SPECIAL:
        if x.special in (S_UNDEF, S_UNKNOWN):
            return x
        if x.special == S_UINF:
            return special_undefined(ctx)
        d = x.direction
        if equal(d, from_rational(ctx, 1)) is Truth.TRUE:
            return special_signed_inf(ctx, from_rational(ctx, 1))
        if equal(d, from_rational(ctx, -1)) is Truth.TRUE:
            return from_rational(ctx, 0)
        return special_undefined(ctx)
    if x.kind == RATIONAL and x.value == 0:
        return from_rational(ctx, 1)
    spec = _exp_specialize(ctx, x)
    if spec is not None:
        return spec
    if pow_origin is not None:
        base, expo = pow_origin
        return _symbolic_number(ctx, "Pow", (base, expo))
    return _symbolic_number(ctx, "Exp", (x,))


def _exp_specialize(ctx, x):
    """Trivial exp rewrites: rational multiples of pi*i become roots of
    unity, integer (or rational) multiples of a single logarithm become
    powers of its argument."""
    if x.kind != GENERIC:
        return None
    num, den = x.frac.num, x.frac.den
    if not den.is_constant() or len(num.terms) != 1:
        return None
    exps, coeff = num.terms[0]
    q = coeff / den.constant_value()
    used = [i for i, e in enumerate(exps) if e]
    gens = x.field.gens
    if len(used) == 2 and all(exps[i] == 1 for i in used):
        g1, g2 = gens[used[0]], gens[used[1]]
        if _is_pi(g1) and _is_imaginary_unit(g2) or _is_pi(g2) and _is_imaginary_unit(g1):
            # exp(q * pi * i): a root of unity when the order is tractable
            b = q.denominator
            if 2 * b <= max(ctx.options.qqbar_degree_limit * 4, 64):
                mp = [0] * (2 * b + 1)
                mp[0] = -1
                mp[2 * b] = 1
                try:
                    def encl(prec):
                        pi = cb_pi(prec)
                        arg = cb_mul(pi, ComplexBall.from_fractions(
                            Fraction(0), q, prec), prec)
                        return cb_exp(arg, prec)
                    alg = AlgebraicNumber.from_root(mp, encl(128))
                    if alg.degree() <= ctx.options.qqbar_degree_limit:
                        return from_algebraic(ctx, alg)
                except (UnsupportedDegreeError, ArithmeticError):
                    return None
        return None
    if len(used) == 1 and exps[used[0]] == 1:
        g = gens[used[0]]
        if g.head == "Log":
            # exp(q * log z) = z**q on the principal branch
            return construct_pow(ctx, g.args[0], from_rational(ctx, q))
    return None


def _is_pi(ext):
    return ext.head == "Pi"


def _is_imaginary_unit(ext):
    return ext.is_algebraic() and ext.alg.minpoly == (1, 0, 1) \
        and ext.alg.enclosure(32).im.is_positive()


def construct_log(ctx, x):
    if x.kind == SPECIAL:
        if x.special in (S_UNDEF, S_UNKNOWN):
            return x
        # log of any infinity: positive real infinity
        return special_signed_inf(ctx, from_rational(ctx, 1))
    z = is_zero(x)
    if z is Truth.TRUE:
        return special_signed_inf(ctx, from_rational(ctx, -1))
    if z is Truth.UNKNOWN:
        return special_unknown(ctx)
    if x.is_one():
        return from_rational(ctx, 0)
    spec = _log_specialize(ctx, x)
    if spec is not None:
        return spec
    return _symbolic_number(ctx, "Log", (x,))


def _log_specialize(ctx, x):
    """log(exp(z)), log(sqrt(z)), log(z**w) rewrites with an exactly
    decidable branch shift."""
    g = _pure_generator(x)
    if g is None:
        return None
    if g.head == "Sqrt":
        lg = construct_log(ctx, g.args[0])
        if not lg.is_number():
            return None
        return mul(from_rational(ctx, Fraction(1, 2)), lg)
    if g.head == "Exp":
        w = g.args[0]
        k = _branch_shift(ctx, w)
        if k is None:
            return None
        return _shift_by_2pii(ctx, w, k)
    if g.head == "Pow":
        base, expo = g.args
        lw = mul(expo, construct_log(ctx, base))
        k = _branch_shift(ctx, lw)
        if k is None:
            return None
        return _shift_by_2pii(ctx, lw, k)
    return None


def _pure_generator(x):
    """The extension g when x is literally the generator monomial X_g."""
    if x.kind != GENERIC:
        return None
    num, den = x.frac.num, x.frac.den
    if not den.is_constant() or den.constant_value() != 1:
        return None
    if len(num.terms) != 1:
        return None
    exps, coeff = num.terms[0]
    if coeff != 1 or sum(exps) != 1:
        return None
    return x.field.gens[exps.index(1)]


def _branch_shift(ctx, w):
    """Integer k with Im(w - 2 pi i k) in (-pi, pi], decided numerically;
    None when the imaginary part sits on an undecidable branch boundary."""
    prec = 64
    while prec <= 1024:
        try:
            ball = w.enclosure_raw(prec)
        except NotANumberError:
            return None
        if not ball.is_indeterminate:
            pi = cb_pi(prec)
            # u = (im(w) + pi) / (2 pi); k is the m with u in (m, m+1]
            num = cb_add(ComplexBall(ball.im, RealBall.from_int(0)), pi, prec)
            u = cb_div(num, cb_mul(pi, ComplexBall.from_int(2), prec), prec)
            m = _halfopen_integer(u.re)
            if m is not None:
                return m
        prec *= 2
    return None


def _halfopen_integer(rb):
    """m such that the interval lies inside (m, m+1], else None."""
    if rb.is_indeterminate:
        return None
    lo, hi = rb.lower(), rb.upper()
    import math
    m = math.floor(hi) if hi != math.floor(hi) else int(hi) - 1
    if lo > m and hi <= m + 1:
        return m
    return None


def _shift_by_2pii(ctx, w, k):
    if k == 0:
        return w
    shift = mul(mul(from_rational(ctx, 2 * k), construct_pi(ctx)), construct_i(ctx))
    return sub(w, shift)


def construct_pow(ctx, x, y):
    if y.kind == SPECIAL or (x.kind == SPECIAL and not y.is_number()):
        if y.is_special(S_UNDEF) or x.is_special(S_UNDEF):
            return special_undefined(ctx)
        return special_unknown(ctx)
    if y.kind == RATIONAL:
        q = y.value
        if q.denominator == 1:
            return pow_int(x, int(q))
        if x.kind == SPECIAL:
            if x.special in (S_UNDEF, S_UNKNOWN):
                return x
            if q > 0:
                return special_uinf(ctx)
            return from_rational(ctx, 0)
        lim = ctx.options.qqbar_degree_limit
        if x.kind == RATIONAL and x.value == 0:
            if q > 0:
                return from_rational(ctx, 0)
            return special_uinf(ctx)
        if x.is_algebraic_storage() or (x.kind == GENERIC and x.field.all_algebraic()):
            try:
                alg = qqbar_pow_rational(_to_qqbar(x, lim), q.numerator,
                                         q.denominator, lim)
                return from_algebraic(ctx, alg)
            except (UnsupportedDegreeError, ArithmeticError, ZeroDivisionError):
                pass
        z = is_zero(x)
        if z is Truth.TRUE:
            return from_rational(ctx, 0) if q > 0 else special_uinf(ctx)
        if z is Truth.UNKNOWN:
            return special_unknown(ctx)
        return _symbolic_number(ctx, "Pow", (x, y))
    if x.kind == SPECIAL:
        if x.special in (S_UNDEF, S_UNKNOWN):
            return x
        return special_unknown(ctx)
    # non-rational exponent: x must be provably nonzero
    z = is_zero(x)
    if z is Truth.TRUE:
        ball = y.enclosure_raw(ctx.options.prec_min)
        if ball.re.is_positive():
            return from_rational(ctx, 0)
        if ball.re.is_negative():
            return special_uinf(ctx)
        return special_unknown(ctx)
    if z is Truth.UNKNOWN:
        return special_unknown(ctx)
    lx = construct_log(ctx, x)
    if lx.kind == SPECIAL:
        return special_unknown(ctx)
    w = mul(y, lx)
    return construct_exp(ctx, w, pow_origin=(x, y))


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def _field_of(x):
    return x.ctx.field_q if x.kind == RATIONAL else x.field


def _embed(x, field):
    num, den = x.fraction_parts()
    n = field.nvars
    exts = x.field_extensions()
    if not exts:
        return (MPoly.constant(num.constant_value(), n, field.order),
                MPoly.constant(den.constant_value(), n, field.order))
    remap = [field.index_of(e) for e in exts]
    return (num.map_vars(remap, n, field.order),
            den.map_vars(remap, n, field.order))


def _make_from_fraction(ctx, field, num, den, coprime=False):
    from .mpoly import scale_normalize_fraction
    rnum = reduce_by_ideal(field, num, ctx)
    rden = reduce_by_ideal(field, den, ctx)
    if coprime and rnum is num and rden is den:
        frac = scale_normalize_fraction(rnum, rden)
    else:
        frac = canonicalize_fraction(rnum, rden)
    used = sorted(frac.num.used_vars() | frac.den.used_vars())
    if not used:
        return from_rational(ctx, frac.num.constant_value()
                             / frac.den.constant_value())
    # demote when a single algebraic generator carries the whole value;
    # other subsets keep the full field (conservative pruning)
    if len(used) == 1 and field.gens[used[0]].is_algebraic():
        k = used[0]
        subfield = field_for(ctx, (field.gens[k],))
        remap = [0] * field.nvars
        frac = FormalFraction(frac.num.map_vars(remap, 1, subfield.order),
                              frac.den.map_vars(remap, 1, subfield.order))
        return _make_nf(ctx, subfield, frac)
    x = ExactNumber(ctx, GENERIC)
    x.field = field
    x.frac = frac
    return x


def _make_nf(ctx, field, frac):
    """Canonical number-field element: reduce modulo the minimal polynomial
    and rationalize the denominator."""
    mp = [Fraction(c) for c in field.gens[0].alg.minpoly]
    num = frac.num.univariate_in(0)
    den = frac.den.univariate_in(0)
    num = intpoly.divmod_exact_field(num, mp)[1] if len(num) >= len(mp) else num
    den = intpoly.divmod_exact_field(den, mp)[1] if len(den) >= len(mp) else den
    if intpoly.degree(den) > 0:
        inv = _poly_invmod(den, mp)
        num = intpoly.divmod_exact_field(intpoly.mul(num, inv), mp)[1]
    elif den and den[0] != 1:
        num = [c / den[0] for c in num]
    deg = len(mp) - 1
    coeffs = tuple(Fraction(num[i]) if i < len(num) else Fraction(0)
                   for i in range(deg))
    if all(c == 0 for c in coeffs[1:]):
        return from_rational(ctx, coeffs[0])
    x = ExactNumber(ctx, NF_ELEM)
    x.field = field
    x.coeffs = coeffs
    return x


def _poly_invmod(a, m):
    """Inverse of a modulo m over Q (extended Euclid); a must be a unit."""
    r0, r1 = [Fraction(c) for c in m], [Fraction(c) for c in a]
    s0, s1 = [], [Fraction(1)]
    while True:
        q, r = intpoly.divmod_exact_field(r0, r1)
        if not r:
            break
        s = intpoly.sub(s0, intpoly.mul(q, s1))
        r0, r1, s0, s1 = r1, r, s1, s
    if intpoly.degree(r1) != 0:
        raise ZeroDivisionError("element is not invertible modulo the minimal polynomial")
    c = r1[0]
    return [x / c for x in s1]


def _nf_pair(x, y):
    """Coefficient lists when x, y live in the same number field."""
    if x.kind == NF_ELEM and y.kind == NF_ELEM and x.field is y.field:
        return x.field, list(x.coeffs), list(y.coeffs)
    if x.kind == NF_ELEM and y.kind == RATIONAL:
        return x.field, list(x.coeffs), [y.value] + [Fraction(0)] * (len(x.coeffs) - 1)
    if y.kind == NF_ELEM and x.kind == RATIONAL:
        return y.field, [x.value] + [Fraction(0)] * (len(y.coeffs) - 1), list(y.coeffs)
    return None


def _nf_make(ctx, field, coeffs):
    deg = field.gens[0].alg.degree()
    mp = [Fraction(c) for c in field.gens[0].alg.minpoly]
    if intpoly.degree(coeffs) >= deg:
        coeffs = intpoly.divmod_exact_field(coeffs, mp)[1]
    out = tuple(Fraction(coeffs[i]) if i < len(coeffs) else Fraction(0)
                for i in range(deg))
    if all(c == 0 for c in out[1:]):
        return from_rational(ctx, out[0])
    x = ExactNumber(ctx, NF_ELEM)
    x.field = field
    x.coeffs = out
    return x


def add(x, y):
    ctx = x.ctx
    if x.kind == SPECIAL or y.kind == SPECIAL:
        return _special_add(ctx, x, y)
    if x.kind == RATIONAL and y.kind == RATIONAL:
        return from_rational(ctx, x.value + y.value)
    nf = _nf_pair(x, y)
    if nf is not None:
        field, a, b = nf
        return _nf_make(ctx, field, intpoly.add(a, b))
    return _generic_arith(ctx, "add", x, y)


def sub(x, y):
    ctx = x.ctx
    if x.kind == SPECIAL or y.kind == SPECIAL:
        return _special_add(ctx, x, neg(y))
    if equal_structural(x, y):
        return from_rational(ctx, 0)
    if x.kind == RATIONAL and y.kind == RATIONAL:
        return from_rational(ctx, x.value - y.value)
    nf = _nf_pair(x, y)
    if nf is not None:
        field, a, b = nf
        return _nf_make(ctx, field, intpoly.sub(a, b))
    return _generic_arith(ctx, "sub", x, y)


def mul(x, y):
    ctx = x.ctx
    if x.kind == SPECIAL or y.kind == SPECIAL:
        return _special_mul(ctx, x, y)
    if x.kind == RATIONAL and y.kind == RATIONAL:
        return from_rational(ctx, x.value * y.value)
    nf = _nf_pair(x, y)
    if nf is not None:
        field, a, b = nf
        return _nf_make(ctx, field, intpoly.mul(a, b))
    return _generic_arith(ctx, "mul", x, y)


def neg(x):
    ctx = x.ctx
    if x.kind == SPECIAL:
        if x.special == S_INF:
            return special_signed_inf(ctx, neg(x.direction))
        return x
    if x.kind == RATIONAL:
        return from_rational(ctx, -x.value)
    if x.kind == NF_ELEM:
        return _nf_make(ctx, x.field, [-c for c in x.coeffs])
    return _generic_arith(ctx, "mul", x, from_rational(ctx, -1))


def inv(x):
    ctx = x.ctx
    if x.kind == SPECIAL:
        if x.special in (S_UINF, S_INF):
            return from_rational(ctx, 0)
        return x
    if x.kind == RATIONAL:
        if x.value == 0:
            return special_uinf(ctx)
        return from_rational(ctx, 1 / x.value)
    if x.kind == NF_ELEM:
        mp = [Fraction(c) for c in x.field.gens[0].alg.minpoly]
        return _nf_make(ctx, x.field, _poly_invmod(list(x.coeffs), mp))
    z = is_zero(x)
    if z is Truth.TRUE:
        return special_uinf(ctx)
    if z is Truth.UNKNOWN:
        return special_unknown(ctx)
    return _make_from_fraction(ctx, x.field, x.frac.den, x.frac.num, coprime=True)


def div(x, y):
    return mul(x, inv(y))


def pow_int(x, n):
    ctx = x.ctx
    if x.kind == SPECIAL:
        if x.special in (S_UNDEF, S_UNKNOWN):
            return x
        if n == 0:
            return special_undefined(ctx)
        if n < 0:
            return from_rational(ctx, 0)
        if x.special == S_UINF:
            return x
        return special_signed_inf(ctx, pow_int(x.direction, n))
    if n == 0:
        z = is_zero(x)
        if z is Truth.TRUE:
            return special_undefined(ctx)
        if z is Truth.UNKNOWN:
            return special_unknown(ctx)
        return from_rational(ctx, 1)
    if n < 0:
        return pow_int(inv(x), -n)
    if x.kind == RATIONAL:
        return from_rational(ctx, x.value ** n)
    if x.kind == NF_ELEM:
        mp = [Fraction(c) for c in x.field.gens[0].alg.minpoly]
        result = [Fraction(1)]
        base = list(x.coeffs)
        e = n
        while e:
            if e & 1:
                result = intpoly.divmod_exact_field(intpoly.mul(result, base), mp)[1]
            e >>= 1
            if e:
                base = intpoly.divmod_exact_field(intpoly.mul(base, base), mp)[1]
        return _nf_make(ctx, x.field, result)
    num, den = x.frac.num, x.frac.den
    monomial = len(num.terms) <= 1 and len(den.terms) <= 1
    if monomial or n <= ctx.options.pow_expand_limit:
        return _make_from_fraction(ctx, x.field, num ** n, den ** n, coprime=True)
    return _symbolic_number(ctx, "Pow", (x, from_rational(ctx, n)))


def _generic_arith(ctx, kind, x, y):
    """Fraction arithmetic with cofactor gcds (Henrici): the inputs are
    canonical, so the small cross-gcds already make the result coprime."""
    from .mpoly import divide_exact, mpoly_gcd
    field = merge_fields(_field_of(x), _field_of(y), ctx)
    nx, dx = _embed(x, field)
    ny, dy = _embed(y, field)
    if kind == "mul":
        g1 = mpoly_gcd(nx, dy)
        if not g1.is_constant():
            nx = divide_exact(nx, g1)
            dy = divide_exact(dy, g1)
        g2 = mpoly_gcd(ny, dx)
        if not g2.is_constant():
            ny = divide_exact(ny, g2)
            dx = divide_exact(dx, g2)
        return _make_from_fraction(ctx, field, nx * ny, dx * dy, coprime=True)
    if kind == "sub":
        ny = -ny
    elif kind != "add":
        raise ValueError(kind)
    if dx == dy:
        return _make_from_fraction(ctx, field, nx + ny, dx)
    g = mpoly_gcd(dx, dy)
    if g.is_constant():
        return _make_from_fraction(ctx, field, nx * dy + ny * dx, dx * dy,
                                   coprime=True)
    b1 = divide_exact(dx, g)
    d1 = divide_exact(dy, g)
    t = nx * d1 + ny * b1
    h = mpoly_gcd(t, g)
    if h.is_constant():
        return _make_from_fraction(ctx, field, t, b1 * dy, coprime=True)
    return _make_from_fraction(ctx, field, divide_exact(t, h),
                               b1 * divide_exact(dy, h), coprime=True)


def arith(kind, x, y=None):
    """Flat entry point over numbers and special values."""
    if kind == "add":
        return add(x, y)
    if kind == "sub":
        return sub(x, y)
    if kind == "mul":
        return mul(x, y)
    if kind == "div":
        return div(x, y)
    if kind == "neg":
        return neg(x)
    if kind == "pow_int":
        return pow_int(x, y)
    raise ValueError("unknown operation %r" % (kind,))


# -- special-value closure ----------------------------------------------------

def _special_add(ctx, x, y):
    for v in (x, y):
        if v.is_special(S_UNDEF):
            return special_undefined(ctx)
    for v in (x, y):
        if v.is_special(S_UNKNOWN):
            return special_unknown(ctx)
    if x.is_number():
        x, y = y, x
    # x is now uinf or signed inf
    if y.is_number():
        return x
    if x.special == S_UINF or y.special == S_UINF:
        return special_undefined(ctx)
    same = equal(x.direction, y.direction)
    if same is Truth.TRUE:
        return x
    if same is Truth.FALSE:
        return special_undefined(ctx)
    return special_unknown(ctx)


def _special_mul(ctx, x, y):
    for v in (x, y):
        if v.is_special(S_UNDEF):
            return special_undefined(ctx)
    for v in (x, y):
        if v.is_special(S_UNKNOWN):
            return special_unknown(ctx)
    if x.is_number():
        x, y = y, x
    if y.is_number():
        z = is_zero(y)
        if z is Truth.TRUE:
            return special_undefined(ctx)
        if z is Truth.UNKNOWN:
            return special_unknown(ctx)
        if x.special == S_UINF:
            return x
        d = _unit_direction(ctx, y)
        if d is None:
            return special_unknown(ctx)
        return special_signed_inf(ctx, mul(x.direction, d))
    if x.special == S_UINF or y.special == S_UINF:
        return special_uinf(ctx)
    return special_signed_inf(ctx, mul(x.direction, y.direction))


def _unit_direction(ctx, y):
    """y/|y| for a certified-nonzero y, when cheaply computable."""
    if y.kind == RATIONAL:
        return from_rational(ctx, 1 if y.value > 0 else -1)
    real = _provably_real(y)
    if real:
        s = _real_sign(y)
        if s is not None:
            return from_rational(ctx, s)
    return None


def _real_sign(y):
    prec = y.ctx.options.prec_min
    while prec <= y.ctx.options.prec_max:
        ball = y.enclosure_raw(prec)
        if ball.re.is_positive():
            return 1
        if ball.re.is_negative():
            return -1
        prec *= 2
    return None


# ---------------------------------------------------------------------------
# numerical evaluation
# ---------------------------------------------------------------------------

def _horner_ball(coeffs, g, prec):
    acc = ComplexBall.from_int(0)
    for c in reversed(coeffs):
        acc = cb_mul(acc, g, prec)
        if c:
            acc = cb_add(acc, ComplexBall.from_fractions(Fraction(c), Fraction(0), prec), prec)
    return acc


def _poly_ball(poly, field, prec, ctx):
    if poly.is_zero():
        return ComplexBall.from_int(0)
    pows = {}

    def gen_pow(i, e):
        key = (i, e)
        got = pows.get(key)
        if got is None:
            got = cb_pow_int(field.gens[i].enclosure(prec + 8, ctx), e, prec)
            pows[key] = got
        return got

    acc = ComplexBall.from_int(0)
    for exps, c in poly.terms:
        t = ComplexBall.from_fractions(c, Fraction(0), prec)
        for i, e in enumerate(exps):
            if e:
                t = cb_mul(t, gen_pow(i, e), prec)
        acc = cb_add(acc, t, prec)
    return acc


def _fraction_ball(frac, field, prec, ctx):
    num = _poly_ball(frac.num, field, prec, ctx)
    if frac.den.is_constant() and frac.den.constant_value() == 1:
        return num
    den = _poly_ball(frac.den, field, prec, ctx)
    return cb_div(num, den, prec)


def enclosure(x, prec):
    """Adaptive enclosure meeting roughly 2**(4-prec) relative radius."""
    if x.kind == SPECIAL:
        raise NotANumberError("enclosure of a special value")
    if x.kind == RATIONAL:
        return ComplexBall.from_fractions(x.value, Fraction(0), prec)
    wp = prec + 16
    best = None
    cap = max(4 * prec + 256, x.ctx.options.prec_min)
    while wp <= cap:
        ball = x.enclosure_raw(wp)
        if not ball.is_indeterminate:
            best = ball
            if _radius_meets(ball, prec):
                return ball
        wp *= 2
    if best is not None:
        return best
    return ComplexBall.indeterminate()


def _radius_meets(ball, prec):
    from .ball import mag_cmp, mag_pow2, mag_is_inf
    m = ball.mag_upper()
    if mag_is_inf(m):
        return False
    scale = (m[1] + m[0].bit_length()) if m[0] else 0
    target = mag_pow2(scale + 4 - prec)
    for rad in (ball.re.rad, ball.im.rad):
        if rad[0] == -1 or mag_cmp(rad, target) > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def is_zero(x):
    """Three-valued zero test: certified relations, completeness, rigorous
    enclosures, then relation discovery at doubling work strength."""
    ctx = x.ctx
    if x.kind == SPECIAL:
        return Truth.UNKNOWN if x.special == S_UNKNOWN else Truth.FALSE
    if x.kind == RATIONAL:
        return Truth.TRUE if x.value == 0 else Truth.FALSE
    if x.kind == NF_ELEM:
        return Truth.FALSE  # canonical nonzero representative
    num = x.frac.num
    if num.is_zero():
        return Truth.TRUE
    field = x.field
    o = ctx.options
    schedule = []
    w = o.prec_min
    while w < o.prec_max:
        schedule.append(w)
        w *= 2
    schedule.append(o.prec_max)
    for w in schedule:
        basis = field.reduction_basis(ctx)
        if basis and normal_form(num, basis).is_zero():
            return Truth.TRUE
        if field.complete:
            return Truth.FALSE
        ball = _poly_ball(num, field, w, ctx)
        if separated_from_zero(ball):
            return Truth.FALSE
        build_reduction_ideal(field, w, ctx)
    basis = field.reduction_basis(ctx)
    if basis and normal_form(num, basis).is_zero():
        return Truth.TRUE
    if field.complete:
        return Truth.FALSE
    if field.all_algebraic():
        try:
            v = _eval_poly_qqbar(num, field, max(ctx.options.qqbar_degree_limit, 8))
            return Truth.TRUE if v.is_zero() else Truth.FALSE
        except (UnsupportedDegreeError, ArithmeticError, ZeroDivisionError):
            pass
    return Truth.UNKNOWN


def _eval_poly_qqbar(poly, field, limit):
    gens = [g.alg for g in field.gens]
    pows = {}

    def gen_pow(i, e):
        key = (i, e)
        got = pows.get(key)
        if got is None:
            got = qqbar_pow_int(gens[i], e, limit)
            pows[key] = got
        return got

    acc = AlgebraicNumber.from_rational(0)
    for exps, c in poly.terms:
        t = AlgebraicNumber.from_rational(c)
        for i, e in enumerate(exps):
            if e:
                t = qqbar_mul(t, gen_pow(i, e), limit)
        acc = qqbar_add(acc, t, limit)
    return acc


def equal(x, y):
    """Mathematical equality over the extended plane (three-valued)."""
    if x.is_special(S_UNKNOWN) or y.is_special(S_UNKNOWN):
        return Truth.UNKNOWN
    if x.kind == SPECIAL or y.kind == SPECIAL:
        if x.kind != SPECIAL or y.kind != SPECIAL:
            return Truth.FALSE
        if x.special != y.special:
            return Truth.FALSE
        if x.special == S_INF:
            return equal(x.direction, y.direction)
        return Truth.TRUE
    if equal_structural(x, y):
        return Truth.TRUE
    result = is_zero(sub(x, y))
    return result


def equal_structural(x, y):
    """Identically represented elements of the same field (cheap, total)."""
    if x.kind != y.kind:
        return False
    if x.kind == RATIONAL:
        return x.value == y.value
    if x.kind == NF_ELEM:
        return x.field is y.field and x.coeffs == y.coeffs
    if x.kind == GENERIC:
        return x.field is y.field and x.frac == y.frac
    if x.special != y.special:
        return False
    if x.special == S_INF:
        return equal_structural(x.direction, y.direction)
    return True


def _ext_provably_real(ext, ctx):
    if ext.is_algebraic():
        return ext.alg.is_real()
    if ext.head == "Pi":
        return True
    if ext.head == "Exp":
        return _provably_real(ext.args[0])
    if ext.head == "Log":
        z = ext.args[0]
        return _provably_real(z) and _real_sign(z) == 1
    if ext.head == "Sqrt":
        z = ext.args[0]
        if not _provably_real(z):
            return False
        s = _real_sign(z)
        return s == 1 or is_zero(z) is Truth.TRUE
    if ext.head == "Pow":
        base, expo = ext.args
        return (_provably_real(base) and _real_sign(base) == 1
                and _provably_real(expo))
    return False


def _provably_real(x):
    if x.kind == SPECIAL:
        return False
    if x.kind == RATIONAL:
        return True
    return all(_ext_provably_real(g, x.ctx) for g in x.field.gens)


def cmp_real(x, y):
    """'lt', 'eq', 'gt', or 'unknown' for provably real numbers."""
    if not (x.is_number() and y.is_number()):
        raise DomainError("real comparison of special values")
    if not (_provably_real(x) and _provably_real(y)):
        raise DomainError("operands are not provably real")
    if equal_structural(x, y):
        return "eq"
    d = sub(x, y)
    z = is_zero(d)
    if z is Truth.TRUE:
        return "eq"
    o = x.ctx.options
    prec = o.prec_min
    while prec <= o.prec_max:
        ball = d.enclosure_raw(prec)
        if ball.re.is_negative():
            return "lt"
        if ball.re.is_positive():
            return "gt"
        prec *= 2
    return "unknown"


# ---------------------------------------------------------------------------
# text output
# ---------------------------------------------------------------------------

_NAMES = "abcdefghijklmnopqrstuvwxyz"


def _gen_name(i):
    return _NAMES[i] if i < len(_NAMES) else "g%d" % (i + 1,)


def _decimal_of(x, digits=6):
    if x.kind == RATIONAL:
        return decimal_str(ComplexBall.from_fractions(x.value, Fraction(0),
                                                      64 + 4 * digits), digits)
    prec = 64
    last = None
    while prec <= 1 << 14:
        ball = enclosure(x, prec)
        s = decimal_str(ball, digits)
        if s == last:
            return s
        last = s
        prec *= 2
    return last


def _poly_str(terms_poly, names):
    return format_poly(terms_poly, names)


def _elem_str(x, names):
    if x.kind == RATIONAL:
        return str(x.value)
    if x.kind == NF_ELEM:
        name = names[id(x.field.gens[0])]
        num = MPoly.from_univariate(list(x.coeffs), 1, 0)
        return _poly_str(num, [name])
    local = [names[id(g)] for g in x.field.gens]
    num_s = _poly_str(x.frac.num, local)
    if x.frac.den.is_constant() and x.frac.den.constant_value() == 1:
        return num_s
    den_s = _poly_str(x.frac.den, local)
    if len(x.frac.num.terms) > 1:
        num_s = "(%s)" % num_s
    if len(x.frac.den.terms) > 1:
        den_s = "(%s)" % den_s
    return "%s/%s" % (num_s, den_s)


def _gen_def_str(ext, names, ctx):
    if ext.is_algebraic():
        name = names[id(ext)]
        mp = MPoly.from_univariate(list(ext.alg.minpoly), 1, 0)
        return "%s=0" % _poly_str(mp, [name])
    if ext.head == "Pi":
        return "Pi"
    args = []
    for a in ext.args:
        if a.kind == RATIONAL:
            args.append(str(a.value))
        else:
            args.append("%s {%s}" % (_decimal_of(a), _elem_str(a, names)))
    return "%s(%s)" % (ext.head, ", ".join(args))


def repr_text(x):
    """Decimal approximation plus the exact representation in braces."""
    if x.kind == SPECIAL:
        if x.special == S_UINF:
            return "UnsignedInfinity"
        if x.special == S_UNDEF:
            return "Undefined"
        if x.special == S_UNKNOWN:
            return "Unknown"
        d = x.direction
        if d.kind == RATIONAL and d.value == 1:
            return "+Infinity"
        if d.kind == RATIONAL and d.value == -1:
            return "-Infinity"
        return "Infinity[%s]" % repr_text(d)
    if x.kind == RATIONAL:
        if x.value == 0:
            return "0"
        return "%s {%s}" % (_decimal_of(x), x.value)
    if x.kind == GENERIC and x.enclosure_raw(x.ctx.options.prec_min).contains_zero():
        # a certified zero that has not been reduced yet prints as 0
        if is_zero(x) is Truth.TRUE:
            return "0"
    names = {}
    for i, g in enumerate(x.field.gens):
        names[id(g)] = _gen_name(i)
    gens_part = ", ".join(
        "%s = %s [%s]" % (names[id(g)], _decimal_of_gen(g, x.ctx),
                          _gen_def_str(g, names, x.ctx))
        for g in x.field.gens)
    return "%s {%s where %s}" % (_decimal_of(x), _elem_str(x, names), gens_part)


def _decimal_of_gen(ext, ctx):
    prec = 64
    last = None
    while prec <= 1 << 14:
        s = decimal_str(ext.enclosure(prec, ctx), 6)
        if s == last:
            return s
        last = s
        prec *= 2
    return last


# ---------------------------------------------------------------------------
# machine-readable serialization
# ---------------------------------------------------------------------------

def _poly_json(poly):
    return [{"exps": list(e), "coeff": str(c)} for e, c in poly.terms]


def _gen_json(ext, ctx):
    if ext.is_algebraic():
        from .ball import mag_cmp
        box = ext.alg.enclosure(64)
        worse = box.re.rad if mag_cmp(box.re.rad, box.im.rad) >= 0 else box.im.rad
        return {"kind": "algebraic",
                "minpoly": list(ext.alg.minpoly),
                "root": {"re": decimal_str(box.re, 20),
                         "im": decimal_str(box.im, 20),
                         "rad": decimal_str(RealBall(worse[0], worse[1]), 3)}}
    return {"kind": "symbolic", "head": ext.head,
            "args": [to_machine(a) for a in ext.args]}


def to_machine(x):
    """JSON-ready dict: decimal, generators, numerator/denominator terms."""
    if x.kind == SPECIAL:
        return {"decimal": None, "field_generators": None, "numerator": None,
                "denominator": None, "special": repr_text(x)}
    num, den = (x.fraction_parts() if x.is_number() else (None, None))
    return {
        "decimal": _decimal_of(x),
        "field_generators": [_gen_json(g, x.ctx) for g in x.field_extensions()],
        "numerator": _poly_json(num),
        "denominator": _poly_json(den),
    }

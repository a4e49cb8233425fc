"""Sparse multivariate polynomials over Q.

The engine behind formal fraction fields Frac(Q[X1,...,Xn]/I): monomial
orders, multivariate division (normal forms), Buchberger's algorithm with
graceful degradation under work limits, multivariate gcd, and joint
canonical forms of formal fractions.
"""

from fractions import Fraction
import math

from . import intpoly


class InvalidFractionError(ZeroDivisionError):
    """Formal fraction with zero denominator."""


class MonomialOrder:
    """Total multiplicative order on exponent vectors: lex, deglex, degrevlex."""

    _cache = {}

    def __new__(cls, kind):
        if kind not in ("lex", "deglex", "degrevlex"):
            raise ValueError("unknown monomial order %r" % (kind,))
        if kind not in cls._cache:
            obj = object.__new__(cls)
            obj.kind = kind
            cls._cache[kind] = obj
        return cls._cache[kind]

    def key(self, exps):
        if self.kind == "lex":
            return exps
        if self.kind == "deglex":
            return (sum(exps), exps)
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __repr__(self):
        return "MonomialOrder(%r)" % (self.kind,)


LEX = MonomialOrder("lex")
DEGLEX = MonomialOrder("deglex")
DEGREVLEX = MonomialOrder("degrevlex")


class MPoly:
    """Immutable sparse polynomial; terms sorted descending by the order."""

    __slots__ = ("nvars", "order", "terms", "_hash")

    def __init__(self, nvars, order, terms):
        # terms: iterable of (exps tuple, coeff); normalized here
        self.nvars = nvars
        self.order = order
        merged = {}
        for exps, c in terms:
            c = Fraction(c)
            if not c:
                continue
            prev = merged.get(exps)
            s = c if prev is None else prev + c
            if s:
                merged[exps] = s
            elif prev is not None:
                del merged[exps]
        self.terms = tuple(sorted(merged.items(), key=lambda t: order.key(t[0]),
                                  reverse=True))
        self._hash = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(nvars, order=LEX):
        return MPoly(nvars, order, ())

    @staticmethod
    def constant(c, nvars, order=LEX):
        return MPoly(nvars, order, [((0,) * nvars, Fraction(c))])

    @staticmethod
    def var(i, nvars, order=LEX):
        e = [0] * nvars
        e[i] = 1
        return MPoly(nvars, order, [(tuple(e), Fraction(1))])

    @staticmethod
    def from_univariate(coeffs, nvars=1, var=0, order=LEX):
        terms = []
        for d, c in enumerate(coeffs):
            e = [0] * nvars
            e[var] = d
            terms.append((tuple(e), Fraction(c)))
        return MPoly(nvars, order, terms)

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
                                  and not any(self.terms[0][0]))

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return self.terms[0][1]
        raise ValueError("not a constant polynomial")

    def lead(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def total_degree(self):
        return max((sum(e) for e, _ in self.terms), default=-1)

    def used_vars(self):
        used = set()
        for e, _ in self.terms:
            for i, d in enumerate(e):
                if d:
                    used.add(i)
        return used

    def degree_in(self, k):
        return max((e[k] for e, _ in self.terms), default=-1)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.order.kind, self.terms))
        return self._hash

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.nvars == other.nvars
                and self.order is other.order and self.terms == other.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars or self.order is not other.order:
            raise ValueError("incompatible polynomials")

    def __add__(self, other):
        self._check(other)
        return MPoly(self.nvars, self.order, list(self.terms) + list(other.terms))

    def __sub__(self, other):
        self._check(other)
        return MPoly(self.nvars, self.order,
                     list(self.terms) + [(e, -c) for e, c in other.terms])

    def __neg__(self):
        return MPoly(self.nvars, self.order, [(e, -c) for e, c in self.terms])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, self.order, acc.items())

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return MPoly.zero(self.nvars, self.order)
        return MPoly(self.nvars, self.order, [(e, q * c) for e, q in self.terms])

    def mul_term(self, exps, coeff):
        return MPoly(self.nvars, self.order,
                     [(tuple(a + b for a, b in zip(e, exps)), c * coeff)
                      for e, c in self.terms])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(1, self.nvars, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- normalization -------------------------------------------------------

    def content_and_sign(self):
        """Rational c > 0 (times the sign of the leading coefficient) such
        that self / c is a primitive integer polynomial with positive lc."""
        if not self.terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for _, c in self.terms:
            num_gcd = math.gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        c = Fraction(num_gcd, den_lcm)
        if self.terms[0][1] < 0:
            c = -c
        return c

    def primitive(self):
        """Primitive integer scaling with positive leading coefficient."""
        if not self.terms:
            return self
        return self.scale(1 / self.content_and_sign())

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.terms[0][1])

    # -- conversions ---------------------------------------------------------

    def map_vars(self, mapping, nvars, order=None):
        """Reindex variables: mapping[i] gives the new index of old var i."""
        order = order or self.order
        terms = []
        for e, c in self.terms:
            ne = [0] * nvars
            for i, d in enumerate(e):
                if d:
                    ne[mapping[i]] += d
            terms.append((tuple(ne), c))
        return MPoly(nvars, order, terms)

    def univariate_in(self, k):
        """Coefficient list (ascending) if self uses only variable k."""
        if not self.used_vars() <= {k}:
            raise ValueError("polynomial is not univariate in the given variable")
        coeffs = [Fraction(0)] * (self.degree_in(k) + 1)
        for e, c in self.terms:
            coeffs[e[k]] = c
        return coeffs

    def __repr__(self):
        return "MPoly(%s)" % (format_poly(self),)


def format_poly(p, names=None):
    if p.is_zero():
        return "0"
    names = names or ["X%d" % (i + 1) for i in range(p.nvars)]
    parts = []
    for e, c in p.terms:
        vars_s = "*".join(
            ("%s^%d" % (names[i], d) if d > 1 else names[i])
            for i, d in enumerate(e) if d)
        if not vars_s:
            s = str(c)
        elif c == 1:
            s = vars_s
        elif c == -1:
            s = "-" + vars_s
        else:
            s = "%s*%s" % (c, vars_s)
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += "-" + s[1:] if s.startswith("-") else "+" + s
    return out


# ---------------------------------------------------------------------------
# multivariate division / normal forms
# ---------------------------------------------------------------------------

def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def divmod_multi(p, gs):
    """Multivariate division: returns (quotients, remainder) with
    p = sum(q_i * g_i) + r and no term of r divisible by any lead(g)."""
    order = p.order
    quotients = [dict() for _ in gs]
    remainder = {}
    work = dict(p.terms)
    leads = [(g.lead() if not g.is_zero() else None) for g in gs]
    while work:
        exps = max(work, key=order.key)
        c = work.pop(exps)
        for i, lt in enumerate(leads):
            if lt is None:
                continue
            le, lc = lt
            if _divides(le, exps):
                q_e = tuple(a - b for a, b in zip(exps, le))
                q_c = c / lc
                quotients[i][q_e] = quotients[i].get(q_e, Fraction(0)) + q_c
                for ge, gc in gs[i].terms[1:]:
                    e = tuple(a + b for a, b in zip(q_e, ge))
                    s = work.get(e, Fraction(0)) - q_c * gc
                    if s:
                        work[e] = s
                    elif e in work:
                        del work[e]
                break
        else:
            remainder[exps] = remainder.get(exps, Fraction(0)) + c
    qs = [MPoly(p.nvars, order, q.items()) for q in quotients]
    return qs, MPoly(p.nvars, order, remainder.items())


def normal_form(p, gs, order=None):
    """Remainder of multivariate division of p by the list gs."""
    if order is not None and order is not p.order:
        p = MPoly(p.nvars, order, p.terms)
        gs = [MPoly(g.nvars, order, g.terms) for g in gs]
    gs = [g for g in gs if not g.is_zero()]
    if not gs:
        return p
    return divmod_multi(p, gs)[1]


def divide_exact(p, d):
    """Exact quotient p/d; raises ValueError if the division is not exact."""
    qs, r = divmod_multi(p, [d])
    if not r.is_zero():
        raise ValueError("inexact polynomial division")
    return qs[0]


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _lcm_exps(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f, g):
    fe, fc = f.lead()
    ge, gc = g.lead()
    l = _lcm_exps(fe, ge)
    mf = tuple(a - b for a, b in zip(l, fe))
    mg = tuple(a - b for a, b in zip(l, ge))
    return f.mul_term(mf, 1 / fc) - g.mul_term(mg, 1 / gc)


class GroebnerLimits:
    """Work limits for basis computation; breaching any of them truncates."""

    def __init__(self, degree_limit=64, term_limit=100000, pair_limit=20000):
        self.degree_limit = degree_limit
        self.term_limit = term_limit
        self.pair_limit = pair_limit


def buchberger(F, order=None, limits=None):
    """Reduced Groebner basis of <F>.

    Returns (basis, truncated).  When a work limit is hit the original
    (normalized) generating set is returned with truncated=True; reduction
    by it is still sound, the basis is just not confluent.
    """
    limits = limits or GroebnerLimits()
    F = [f for f in F if not f.is_zero()]
    if not F:
        return [], False
    if order is not None:
        F = [MPoly(f.nvars, order, f.terms) for f in F]
    order = F[0].order
    fallback = _interreduce_light(F)
    G = [f.primitive() for f in F]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    processed = set()
    steps = 0
    while pairs:
        steps += 1
        if steps > limits.pair_limit:
            return fallback, True
        i, j = min(pairs, key=lambda ij: order.key(
            _lcm_exps(G[ij[0]].lead()[0], G[ij[1]].lead()[0])))
        pairs.discard((i, j))
        processed.add((i, j))
        ei, ej = G[i].lead()[0], G[j].lead()[0]
        l = _lcm_exps(ei, ej)
        # first criterion: coprime leading monomials
        if all(a + b == c for a, b, c in zip(ei, ej, l)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(G[k].lead()[0], l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in processed and p2 in processed:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(_spoly(G[i], G[j]), G)
        if r.is_zero():
            continue
        if (r.total_degree() > limits.degree_limit
                or len(r.terms) > limits.term_limit):
            return fallback, True
        r = r.primitive()
        G.append(r)
        new = len(G) - 1
        for k in range(new):
            pairs.add((k, new))
    # minimalize: drop generators whose lead is divisible by another lead
    G = [g for g in G if not g.is_zero()]
    minimal = []
    for i, g in enumerate(G):
        ge = g.lead()[0]
        if any(_divides(G[j].lead()[0], ge) for j in range(len(G)) if j != i
               and (not _divides(ge, G[j].lead()[0]) or j < i)):
            continue
        minimal.append(g)
    # fully reduce each element against the others
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others) if others else g
        if not r.is_zero():
            reduced.append(r.primitive())
    reduced.sort(key=lambda g: order.key(g.lead()[0]), reverse=True)
    return reduced, False


def _interreduce_light(F):
    return sorted((f.primitive() for f in F),
                  key=lambda g: g.order.key(g.lead()[0]), reverse=True)


# ---------------------------------------------------------------------------
# multivariate gcd (primitive PRS)
# ---------------------------------------------------------------------------

def mpoly_gcd(a, b):
    """Gcd in Q[X1..Xn], primitive over Z with positive leading coefficient.

    gcd(p, 0) = normalized p; the gcd of nonzero constants is 1 (units).
    A heuristic evaluation gcd (verified by trial division) is tried first;
    the subresultant PRS is the fallback.
    """
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    if a.is_constant() or b.is_constant():
        return MPoly.constant(1, a.nvars, a.order)
    ap, bp = a.primitive(), b.primitive()
    if ap == bp:
        return ap
    h = _heugcd(ap, bp)
    if h is not None:
        return h.primitive()
    used = sorted(a.used_vars() | b.used_vars())
    return _gcd_rec(a, b, used).primitive()


def _max_abs_coeff(p):
    return max(abs(c.numerator) for _, c in p.terms)


def _eval_var_int(p, v, xi):
    """Substitute X_v := xi (an integer)."""
    acc = {}
    for e, c in p.terms:
        ne = list(e)
        d = ne[v]
        ne[v] = 0
        key = tuple(ne)
        acc[key] = acc.get(key, Fraction(0)) + c * xi**d
    return MPoly(p.nvars, p.order, acc.items())


def _symmetric_mod_poly(p, xi):
    """Coefficient-wise symmetric remainder mod xi (integer coefficients)."""
    terms = []
    for e, c in p.terms:
        r = c.numerator % xi
        if 2 * r > xi:
            r -= xi
        if r:
            terms.append((e, Fraction(r)))
    return MPoly(p.nvars, p.order, terms)


def _divides_poly(d, p):
    try:
        divide_exact(p, d)
        return True
    except ValueError:
        return False


def _heugcd(a, b, depth=0):
    """Heuristic gcd by integer evaluation and xi-adic reconstruction.

    Inputs are primitive integer polynomials; returns a verified gcd of
    the primitive parts, or None when the heuristic fails.
    """
    used = sorted(a.used_vars() | b.used_vars())
    if not used:
        return MPoly.constant(1, a.nvars, a.order)
    if depth > 8:
        return None
    v = used[0]
    xi = 2 * min(_max_abs_coeff(a), _max_abs_coeff(b)) + 29
    for _ in range(6):
        if xi.bit_length() * max(a.degree_in(v), b.degree_in(v)) > 600000:
            return None
        av = _eval_var_int(a, v, xi)
        bv = _eval_var_int(b, v, xi)
        if av.is_zero() or bv.is_zero():
            xi = xi * 73 // 10 + 11
            continue
        if not (av.used_vars() | bv.used_vars()):
            g = MPoly.constant(math.gcd(int(av.constant_value()),
                                        int(bv.constant_value())), a.nvars, a.order)
        else:
            g = _heugcd(av.primitive(), bv.primitive(), depth + 1)
            if g is None:
                return None
            # restore the integer content lost to primitive()
            ca = int(av.content_and_sign())
            cb = int(bv.content_and_sign())
            g = g.scale(math.gcd(abs(ca), abs(cb)))
        # xi-adic reconstruction of the gcd in X_v
        h = MPoly.zero(a.nvars, a.order)
        power = 0
        while not g.is_zero():
            c = _symmetric_mod_poly(g, xi)
            if not c.is_zero():
                h = h + c.mul_term(tuple(power if i == v else 0
                                         for i in range(a.nvars)), 1)
            g = (g - c).scale(Fraction(1, xi))
            power += 1
            if power > 2000:
                return None
        h = h.primitive()
        if not h.is_zero() and _divides_poly(h, a) and _divides_poly(h, b):
            return h
        xi = xi * 73 // 10 + 11
    return None


def _to_rec(p, v):
    """Represent p as {deg in v: MPoly coefficient (not using v)}."""
    out = {}
    for e, c in p.terms:
        d = e[v]
        ne = list(e)
        ne[v] = 0
        key = tuple(ne)
        coeff = out.setdefault(d, {})
        coeff[key] = coeff.get(key, Fraction(0)) + c
    return {d: MPoly(p.nvars, p.order, t.items()) for d, t in out.items()
            if any(t.values())}


def _from_rec(rec, v, nvars, order):
    terms = []
    for d, coeff in rec.items():
        for e, c in coeff.terms:
            ne = list(e)
            ne[v] += d
            terms.append((tuple(ne), c))
    return MPoly(nvars, order, terms)


def _rec_degree(rec):
    return max(rec.keys(), default=-1)


def _gcd_rec(a, b, used):
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return MPoly.constant(1, a.nvars, a.order)
    av, bv = a.used_vars(), b.used_vars()
    common = sorted(av & bv)
    if not common:
        return MPoly.constant(1, a.nvars, a.order)
    v = common[0]
    ra, rb = _to_rec(a, v), _to_rec(b, v)
    cont_a = _rec_content(ra, used)
    cont_b = _rec_content(rb, used)
    pa = divide_exact(a, cont_a)
    pb = divide_exact(b, cont_b)
    cont = _gcd_rec(cont_a, cont_b, used)
    # subresultant PRS on the primitive parts (exact divisions replace
    # per-step content extraction)
    ra, rb = _to_rec(pa, v), _to_rec(pb, v)
    if _rec_degree(ra) < _rec_degree(rb):
        ra, rb = rb, ra
    one = MPoly.constant(1, a.nvars, a.order)
    g_co, h_co = one, one
    first = True
    while True:
        if not rb:
            g = _from_rec(ra, v, a.nvars, a.order)
            break
        delta = _rec_degree(ra) - _rec_degree(rb)
        r = _pseudo_rem(ra, rb, v, a.nvars, a.order)
        if not r:
            g = _from_rec(rb, v, a.nvars, a.order)
            break
        if first:
            divisor = one
            first = False
        else:
            divisor = g_co * (h_co ** delta)
        if not (divisor.is_constant() and abs(divisor.constant_value()) == 1):
            r = {k: divide_exact(c, divisor) for k, c in r.items()}
        g_co = rb[_rec_degree(rb)]
        if delta == 1:
            h_co = g_co
        elif delta > 1:
            h_co = divide_exact(g_co ** delta, h_co ** (delta - 1))
        ra, rb = rb, r
    rec_g = _to_rec(g, v)
    if rec_g and _rec_degree(rec_g) == 0:
        return cont
    g = divide_exact(g, _rec_content(rec_g, used))
    return cont * g


def _rec_content(rec, used):
    c = None
    for coeff in rec.values():
        c = coeff if c is None else _gcd_rec(c, coeff, used)
        if c.is_constant():
            break
    c = c.primitive()
    if c.is_zero():
        return MPoly.constant(1, c.nvars, c.order)
    return c if not c.is_constant() else MPoly.constant(1, c.nvars, c.order)


def _pseudo_rem(ra, rb, v, nvars, order):
    """Pseudo-remainder of recursive univariates in v."""
    da, db = _rec_degree(ra), _rec_degree(rb)
    lb = rb[db]
    r = dict(ra)
    while r and _rec_degree(r) >= db:
        d = _rec_degree(r)
        lr = r[d]
        # r = lb * r - lr * x^(d-db) * rb
        new = {}
        for k, c in r.items():
            new[k] = c * lb
        for k, c in rb.items():
            kk = k + d - db
            new[kk] = new.get(kk, MPoly.zero(nvars, order)) - lr * c
        r = {k: c for k, c in new.items() if not c.is_zero()}
    return r


# ---------------------------------------------------------------------------
# formal fractions
# ---------------------------------------------------------------------------

class FormalFraction:
    """num/den with gcd(num, den) = 1 and den primitive integer, positive lc."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (isinstance(other, FormalFraction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "FormalFraction(%s, %s)" % (format_poly(self.num), format_poly(self.den))


def canonicalize_fraction(num, den):
    """Joint canonical form of a formal fraction over Q[X1..Xn]."""
    if den.is_zero():
        raise InvalidFractionError("zero denominator in formal fraction")
    if num.is_zero():
        return FormalFraction(num, MPoly.constant(1, den.nvars, den.order))
    g = mpoly_gcd(num, den)
    if not g.is_constant():
        num = divide_exact(num, g)
        den = divide_exact(den, g)
    return scale_normalize_fraction(num, den)


def scale_normalize_fraction(num, den):
    """Scale normalization only: den primitive over Z with positive lc.

    The caller guarantees gcd(num, den) = 1.
    """
    if den.is_zero():
        raise InvalidFractionError("zero denominator in formal fraction")
    if num.is_zero():
        return FormalFraction(num, MPoly.constant(1, den.nvars, den.order))
    c = den.content_and_sign()
    if c != 1:
        den = den.scale(1 / c)
        num = num.scale(1 / c)
    return FormalFraction(num, den)


# ---------------------------------------------------------------------------
# univariate factorization entry point (over Z)
# ---------------------------------------------------------------------------

def factor_univariate_integers(coeffs, degree_limit=64):
    """Factor an integer polynomial into (irreducible, multiplicity) pairs.

    Each factor is primitive with positive leading coefficient; the product
    of the factors to their multiplicities equals the input up to a unit.
    """
    if not intpoly.trim(list(coeffs)):
        raise ValueError("cannot factor the zero polynomial")
    return intpoly.factor_int_poly(list(coeffs), degree_limit=degree_limit)

"""Dense univariate polynomial arithmetic over Z and Q.

Polynomials are plain lists of coefficients in ascending degree order
with no trailing zeros.  Provides exact gcd, squarefree decomposition,
Sturm sequences, resultants, and factorization over Z (squarefree
decomposition, Cantor-Zassenhaus factorization modulo a small prime,
multifactor linear Hensel lifting, subset recombination).
"""

from fractions import Fraction
import math
import random


class UnsupportedDegreeError(ValueError):
    """Degree exceeds a configured work limit."""


def trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def is_zero(p):
    return not p


def neg(p):
    return [-c for c in p]


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n)])


def sub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)
                 for i in range(n)])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]


def shift_pow(p, k):
    """Multiply by x**k."""
    if not p:
        return []
    return [0] * k + list(p)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_exact_field(p, q):
    """Division with remainder over Q (coefficients become Fractions)."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = [Fraction(c) for c in p]
    qlc = Fraction(q[-1])
    dq = degree(q)
    quo = [Fraction(0)] * max(0, len(p) - dq)
    while len(p) - 1 >= dq and p:
        c = p[-1] / qlc
        k = len(p) - 1 - dq
        quo[k] = c
        for i in range(dq + 1):
            p[k + i] -= c * q[i]
        trim(p)
    return trim(quo), p


def content(p):
    """Positive gcd of integer coefficients (0 for the zero polynomial)."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def primitive(p):
    """Primitive part with positive leading coefficient, over Z."""
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def clear_denominators(p):
    """Fraction coefficients -> primitive integer polynomial (+ positive lc)."""
    if not p:
        return []
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    q = [int(Fraction(c) * den) for c in p]
    return primitive(q)


def gcd_q(p, q):
    """Gcd over Q, returned as a primitive integer polynomial."""
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in q]
    while b:
        a, b = b, divmod_exact_field(a, b)[1]
    if not a:
        return []
    return clear_denominators(a)


def squarefree_part(p):
    d = derivative(p)
    if not d:
        return primitive(p)
    g = gcd_q(p, d)
    if degree(g) == 0:
        return primitive(p)
    quo, rem = divmod_exact_field(p, g)
    assert not rem
    return clear_denominators(quo)


def squarefree_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors primitive."""
    p = clear_denominators(p)
    g = gcd_q(p, derivative(p))
    if degree(g) == 0:
        return [(p, 1)]
    out = []
    c, _ = divmod_exact_field(p, g)
    d = sub(divmod_exact_field(derivative(p), g)[0], derivative(c))
    i = 1
    while degree(c) > 0:
        a = gcd_q(clear_denominators(c), clear_denominators(d) if d else [])
        if not a or degree(a) == 0:
            a = [1]
        else:
            out.append((a, i))
        c, _ = divmod_exact_field(c, a)
        d = sub(divmod_exact_field(d, a)[0] if d else [], derivative(c))
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm sequences / real root counting
# ---------------------------------------------------------------------------

def sturm_sequence(p):
    seq = [[Fraction(c) for c in p], [Fraction(c) for c in derivative(p)]]
    while seq[-1]:
        r = divmod_exact_field(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq, x):
    signs = []
    for s in seq:
        v = evaluate(s, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo, hi, seq=None):
    """Number of distinct real roots of squarefree p in (lo, hi]."""
    if seq is None:
        seq = sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(p):
    """Cauchy bound: all complex roots have |z| < bound (a Fraction)."""
    lc = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return 1 + Fraction(m, lc)


# ---------------------------------------------------------------------------
# resultants (Sylvester matrix + fraction-free elimination)
# ---------------------------------------------------------------------------

def det_bareiss_int(rows):
    """Exact determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[-1][-1]


def resultant_int(p, q):
    """Resultant of two integer polynomials."""
    if not p or not q:
        return 0
    dp, dq = degree(p), degree(q)
    if dp == 0:
        return p[0] ** dq
    if dq == 0:
        return q[0] ** dp
    n = dp + dq
    rows = []
    pc = list(reversed(p))
    qc = list(reversed(q))
    for i in range(dq):
        rows.append([0] * i + pc + [0] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qc + [0] * (n - dq - 1 - i))
    return det_bareiss_int(rows)


# ---------------------------------------------------------------------------
# arithmetic in GF(p)[x]
# ---------------------------------------------------------------------------

def _gf_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def gf_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        for i in range(db + 1):
            a[k + i] = (a[k + i] - c * b[i]) % p
        _gf_trim(a)
    return a


def gf_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db + 1):
            a[k + i] = (a[k + i] - c * b[i]) % p
        _gf_trim(a)
    return _gf_trim(q), a


def gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, gf_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def gf_gcdext(a, b, p):
    """(g, s, t) with s*a + t*b = g (monic gcd)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_trim([(x - y) % p for x, y in
                               _zip_pad(s0, gf_mul(q, s1, p))])
        t0, t1 = t1, _gf_trim([(x - y) % p for x, y in
                               _zip_pad(t0, gf_mul(q, t1, p))])
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0))
            for i in range(n)]


def gf_pow_mod(a, e, m, p):
    result = [1]
    base = gf_rem(list(a), m, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), m, p)
        base = gf_rem(gf_mul(base, base, p), m, p)
        e >>= 1
    return result


def gf_factor_squarefree(f, p, rng):
    """Monic irreducible factors of a squarefree monic f in GF(p)[x]."""
    factors = []
    # distinct-degree splitting
    xq = [0, 1]
    d = 0
    rest = list(f)
    while len(rest) - 1 > 0:
        d += 1
        if 2 * d > len(rest) - 1:
            factors.append((rest, len(rest) - 1))
            break
        xq = gf_pow_mod(xq, p, rest, p)
        g = gf_gcd(_gf_trim([(a - b) % p for a, b in _zip_pad(xq, [0, 1])]), rest, p)
        if len(g) - 1 > 0:
            factors.append((g, d))
            rest, _ = gf_divmod(rest, g, p)
            xq = gf_rem(xq, rest, p)
    out = []
    for prod, d in factors:
        out.extend(_gf_equal_degree(prod, d, p, rng))
    return out


def _gf_equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _gf_trim(a)
        if len(a) - 1 < 1:
            continue
        g = gf_gcd(a, f, p)
        if 0 < len(g) - 1 < n:
            break
        b = gf_pow_mod(a, (p**d - 1) // 2, f, p)
        bm1 = list(b) if b else [0]
        bm1[0] = (bm1[0] - 1) % p
        g = gf_gcd(_gf_trim(bm1), f, p)
        if 0 < len(g) - 1 < n:
            break
    rest, _ = gf_divmod(f, g, p)
    return _gf_equal_degree(g, d, p, rng) + _gf_equal_degree(rest, d, p, rng)


# ---------------------------------------------------------------------------
# Hensel lifting and factor recombination over Z
# ---------------------------------------------------------------------------

def _symmetric(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _lift_factors(f, facs, p, K):
    """Lift f = lc * prod(facs) (mod p) to the same congruence mod p**K.

    facs are monic mod p; returns monic lifts mod p**K.
    """
    lc = f[-1]
    lc_inv = pow(lc, -1, p)
    # Bezout basis: sum_i ell_i * prod_{j != i} g_j = 1 (mod p)
    others = []
    for i in range(len(facs)):
        prod = [1]
        for j, g in enumerate(facs):
            if j != i:
                prod = gf_mul(prod, g, p)
        others.append(prod)
    ells = []
    for g, o in zip(facs, others):
        u = gf_rem(list(o), g, p)
        _, s, _ = gf_gcdext(u, g, p)
        ells.append(gf_rem(s, g, p))
    lifted = [list(g) for g in facs]
    m = p
    while m < p**K:
        m_next = m * p
        prod = [lc]
        for g in lifted:
            prod = mul(prod, g)
        e = sub(f, prod)
        e = [c % m_next for c in e] + [0] * max(0, len(f) - len(e))
        ek = [(c // m) % p for c in e]
        if any(ek):
            for i, g in enumerate(lifted):
                di = gf_rem(gf_mul(gf_mul(ek, ells[i], p), [lc_inv], p), facs[i], p)
                for k, c in enumerate(di):
                    g[k] = g[k] + m * c
        for g in lifted:
            for k in range(len(g)):
                g[k] %= m_next
        m = m_next
    return lifted, m


def factor_squarefree_int(f, rng=None, degree_limit=64):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    rng = rng or random.Random(123456789)
    if degree(f) > degree_limit:
        raise UnsupportedDegreeError(
            "degree %d exceeds the factoring limit %d" % (degree(f), degree_limit))
    if degree(f) == 1:
        return [primitive(f)]
    lc = f[-1]
    prime = None
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
              61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113):
        if lc % p == 0:
            continue
        fp = _gf_trim([c % p for c in f])
        if len(fp) != len(f):
            continue
        if len(gf_gcd(fp, _gf_trim([c % p for c in derivative(f)]), p)) - 1 == 0:
            prime = p
            break
    if prime is None:
        raise ArithmeticError("no suitable small prime found for factoring")
    p = prime
    inv_lc = pow(lc % p, -1, p)
    fp = [c % p for c in f]
    fp_monic = [c * inv_lc % p for c in fp]
    modular = gf_factor_squarefree(fp_monic, p, rng)
    if len(modular) == 1:
        return [primitive(f)]
    # coefficient bound for any factor times lc
    norm2 = math.isqrt(sum(c * c for c in f)) + 1
    bound = (1 << (degree(f) + 1)) * norm2 * abs(lc)
    K = 1
    while p**K < 2 * bound + 1:
        K += 1
    lifted, m = _lift_factors(f, modular, p, K)
    # subset recombination
    result = []
    remaining = list(range(len(lifted)))
    current = list(f)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in _subsets(remaining, size):
            g = [current[-1]]
            for i in subset:
                g = mul(g, lifted[i])
            g = [_symmetric(c, m) for c in g]
            g = primitive(trim(g))
            if not g:
                continue
            quo, rem = divmod_exact_field(current, g)
            if not rem and all(Fraction(c).denominator == 1 for c in quo):
                result.append(g)
                current = [int(c) for c in quo]
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if degree(current) > 0:
        result.append(primitive(current))
    return result


def _subsets(items, size):
    import itertools
    return itertools.combinations(items, size)


def factor_int_poly(f, degree_limit=64):
    """Full factorization over Z: list of (primitive irreducible, multiplicity).

    The rational content/unit is discarded; the product of factors to their
    multiplicities equals f up to a rational unit.
    """
    f = list(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if any(isinstance(c, Fraction) for c in f):
        f = clear_denominators(f)
    else:
        f = primitive(f)
    if degree(f) == 0:
        return []
    cached = _factor_cached(tuple(f), degree_limit)
    return [(list(irr), mult) for irr, mult in cached]


from functools import lru_cache


@lru_cache(maxsize=4096)
def _factor_cached(f, degree_limit):
    out = []
    for part, mult in squarefree_decomposition(list(f)):
        if degree(part) == 0:
            continue
        for irr in factor_squarefree_int(part, degree_limit=degree_limit):
            out.append((tuple(irr), mult))
    out.sort(key=lambda t: (degree(list(t[0])), t[0]))
    return tuple(out)

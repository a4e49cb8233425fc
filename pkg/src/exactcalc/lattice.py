"""Exact-integer LLL reduction and integer-relation candidate search.

The relation finder builds the classic lattice [I | 2**W * values] and
reduces it; short rows whose numeric part nearly vanishes are candidate
integer relations.  Candidates are unverified by construction - exact
certification is the caller's job.
"""

from fractions import Fraction
import math


class DependentBasisError(ValueError):
    """The input rows do not form a basis (linearly dependent)."""


class RelationCandidate:
    """Normalized candidate tuple m with sum(m_j * v_j) numerically small."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = list(coefficients)
        if not any(coeffs):
            raise ValueError("relation candidate cannot be all zero")
        g = 0
        for c in coeffs:
            g = math.gcd(g, c)
        coeffs = [c // g for c in coeffs]
        for c in coeffs:
            if c:
                if c < 0:
                    coeffs = [-x for x in coeffs]
                break
        self.coefficients = tuple(coeffs)

    def __eq__(self, other):
        return isinstance(other, RelationCandidate) and \
            self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "RelationCandidate%r" % (self.coefficients,)


def _gram_schmidt(b):
    """Rational Gram-Schmidt data (mu, B) for integer rows b."""
    n = len(b)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    star = []
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            if B[j] == 0:
                raise DependentBasisError("rows are linearly dependent")
            mu[i][j] = Fraction(sum(Fraction(x) * y for x, y in zip(b[i], star[j]))) / B[j]
            v = [a - mu[i][j] * c for a, c in zip(v, star[j])]
        star.append(v)
        B[i] = sum(x * x for x in v)
        if B[i] == 0:
            raise DependentBasisError("rows are linearly dependent")
    return mu, B


def lll_reduce(rows, delta=Fraction(3, 4)):
    """LLL-reduced basis of the lattice spanned by the integer rows.

    Size-reduced and satisfying the Lovasz condition with parameter delta.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    b = [list(map(int, r)) for r in rows]
    n = len(b)
    if n <= 1:
        if n == 1 and not any(b[0]):
            raise DependentBasisError("zero row")
        return b
    mu, B = _gram_schmidt(b)

    def size_reduce(k, j):
        if abs(mu[k][j]) > Fraction(1, 2):
            q = _round_frac(mu[k][j])
            b[k] = [x - q * y for x, y in zip(b[k], b[j])]
            for i in range(j):
                mu[k][i] -= q * mu[j][i]
            mu[k][j] -= q

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
        else:
            # swap rows k-1 and k, updating Gram-Schmidt data in place
            m = mu[k][k - 1]
            Bk = B[k] + m * m * B[k - 1]
            mu[k][k - 1] = m * B[k - 1] / Bk
            B[k] = B[k - 1] * B[k] / Bk
            B[k - 1] = Bk
            b[k - 1], b[k] = b[k], b[k - 1]
            for j in range(k - 1):
                mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
    return b


def _round_frac(q):
    fl, rem = divmod(q.numerator, q.denominator)
    if 2 * rem > q.denominator or (2 * rem == q.denominator and fl % 2):
        return fl + 1
    return fl


def lovasz_holds(rows, delta=Fraction(3, 4)):
    """Check size reduction and the Lovasz condition on a basis (for tests)."""
    mu, B = _gram_schmidt(rows)
    n = len(rows)
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, n):
        if B[k] < (Fraction(delta) - mu[k][k - 1] ** 2) * B[k - 1]:
            return False
    return True


def _dyadic_round_to_int(man, exp, shift):
    """round(man * 2**(exp + shift))."""
    e = exp + shift
    if e >= 0:
        return man << e
    half = 1 << (-e - 1)
    q, r = divmod(man, 1 << -e)
    return q + (1 if r >= half else 0)


def find_integer_relations(values, W, coeff_bound, weight=1):
    """Candidate integer relations among complex-ball values.

    Each value's enclosure should have radius at most ~2**(-W/2) (the
    caller refines first).  Returned candidates satisfy max|m_j| <=
    coeff_bound and make sum(m_j v_j) numerically small at precision W.
    """
    n = len(values)
    if n == 0:
        return []
    cols_re = []
    cols_im = []
    for v in values:
        if v.is_indeterminate:
            return []
        cols_re.append(_dyadic_round_to_int(v.re.man, v.re.exp, W) * weight)
        cols_im.append(_dyadic_round_to_int(v.im.man, v.im.exp, W) * weight)
    any_im = any(cols_im)
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        row.append(cols_re[i])
        if any_im:
            row.append(cols_im[i])
        rows.append(row)
    reduced = lll_reduce(rows)
    ncols = n + 1 + (1 if any_im else 0)
    threshold = 1 << (3 * W // 4)
    out = []
    seen = set()
    for row in reduced:
        m = row[:n]
        tail = row[n:ncols]
        if not any(m):
            continue
        if max(abs(c) for c in m) > coeff_bound:
            continue
        if max(abs(t) for t in tail) > threshold:
            continue
        cand = RelationCandidate(m)
        if cand not in seen:
            seen.add(cand)
            out.append(cand)
    return out

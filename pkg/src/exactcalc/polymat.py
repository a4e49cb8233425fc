"""Dense univariate polynomials and matrices over exact numbers.

Pivoting and degree decisions consult the three-valued zero test; when a
decision comes back Unknown the operation either falls back to a
division-free algorithm (determinants, characteristic polynomials) or
raises a dedicated error (inversion, rank, gcd).
"""

from fractions import Fraction

from . import number
from .algebraic import AlgebraicNumber, qqbar_add, qqbar_mul
from .intpoly import UnsupportedDegreeError
from .mpoly import MPoly, divide_exact, LEX
from .truth import Truth


class SingularMatrixError(ZeroDivisionError):
    """singular matrix"""


class UnknownSingularityError(ValueError):
    """failed to prove matrix singular or nonsingular"""


class UnknownRankError(ValueError):
    """failed to decide a pivot, rank is undetermined"""


class UnknownDegreeError(ValueError):
    """failed to decide a leading coefficient"""


class ExactPoly:
    """Dense polynomial with exact-number coefficients, ascending degree."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        cs = [ctx._coerce(c) for c in coeffs]
        while cs and number.equal_structural(cs[-1], ctx.rational(0)):
            cs.pop()
        for c in cs:
            if not c.is_number():
                raise ValueError("special values are not allowed as coefficients")
        self.coeffs = cs

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero_poly(self):
        return not self.coeffs

    def decided_degree(self):
        """Degree with a certified-nonzero leading coefficient."""
        cs = list(self.coeffs)
        while cs:
            z = number.is_zero(cs[-1])
            if z is Truth.FALSE:
                return len(cs) - 1, cs
            if z is Truth.TRUE:
                cs.pop()
                continue
            raise UnknownDegreeError(
                "cannot decide whether the leading coefficient vanishes")
        return -1, cs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.ctx.rational(0)
        out = []
        for k in range(n):
            a = self.coeffs[k] if k < len(self.coeffs) else zero
            b = other.coeffs[k] if k < len(other.coeffs) else zero
            out.append(number.add(a, b))
        return ExactPoly(self.ctx, out)

    def __sub__(self, other):
        return self + other.scale(self.ctx.rational(-1))

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return ExactPoly(self.ctx, [])
        out = [self.ctx.rational(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = number.add(out[i + j], number.mul(a, b))
        return ExactPoly(self.ctx, out)

    def scale(self, c):
        return ExactPoly(self.ctx, [number.mul(a, c) for a in self.coeffs])

    def monic(self):
        d, cs = self.decided_degree()
        if d < 0:
            return ExactPoly(self.ctx, [])
        inv_lc = number.inv(cs[-1])
        return ExactPoly(self.ctx, [number.mul(c, inv_lc) for c in cs])

    def derivative(self):
        return ExactPoly(self.ctx, [number.mul(c, self.ctx.rational(k))
                                    for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        acc = self.ctx.rational(0)
        for c in reversed(self.coeffs):
            acc = number.add(number.mul(acc, x), c)
        return acc

    def evaluate_matrix(self, m):
        acc = ExactMatrix.zero(self.ctx, m.nrows, m.ncols)
        for c in reversed(self.coeffs):
            acc = mat_mul(acc, m)
            acc = mat_add(acc, ExactMatrix.scalar(self.ctx, m.nrows, c))
        return acc

    def divmod(self, other):
        """Division with remainder; the divisor's degree must be decided."""
        dd, dcs = other.decided_degree()
        if dd < 0:
            raise ZeroDivisionError("polynomial division by zero")
        inv_lc = number.inv(dcs[-1])
        rem = list(self.coeffs)
        quo = [self.ctx.rational(0)] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and rem:
            c = number.mul(rem[-1], inv_lc)
            k = len(rem) - 1 - dd
            quo[k] = c
            for i in range(dd + 1):
                rem[k + i] = number.sub(rem[k + i], number.mul(c, dcs[i]))
            rem.pop()
        return ExactPoly(self.ctx, quo), ExactPoly(self.ctx, rem)

    def __repr__(self):
        return "ExactPoly([%s])" % (", ".join(number.repr_text(c)
                                              for c in self.coeffs),)


def poly_gcd_euclid(p, q):
    """Monic gcd by the Euclidean algorithm; divides both inputs exactly."""
    a, b = p, q
    while True:
        db, _ = b.decided_degree()
        if db < 0:
            break
        a, b = b, a.divmod(b)[1]
    da, _ = a.decided_degree()
    if da < 0:
        return ExactPoly(p.ctx, [])
    return a.monic()


def poly_squarefree_roots(p):
    """All complex roots with multiplicities, as exact algebraic numbers.

    Requires algebraic coefficients: the roots are located by eliminating
    the field generators with resultants and certifying each candidate by
    exact evaluation.
    """
    ctx = p.ctx
    d, cs = p.decided_degree()
    if d < 0:
        raise ValueError("the zero polynomial has no root multiset")
    work = ExactPoly(ctx, cs)
    lim = max(ctx.options.qqbar_degree_limit, 16)
    for c in work.coeffs:
        if not (c.is_algebraic_storage()
                or (c.kind == number.GENERIC and c.field.all_algebraic())):
            raise UnsupportedDegreeError("coefficients are not algebraic")
    g = poly_gcd_euclid(work, work.derivative())
    squarefree = work.divmod(g)[0] if g.degree() > 0 else work
    out = [(root, _multiplicity(work, root, lim))
           for root in _roots_of_squarefree(squarefree, lim)]
    total = sum(m for _, m in out)
    assert total == d, "lost roots during factorization"
    return out


def _roots_of_squarefree(p, lim):
    from . import intpoly
    from .algebraic import isolated_roots, _refine_interval_newton
    ctx = p.ctx
    d, cs = p.decided_degree()
    if d <= 0:
        return []
    # integerize: clear generators by resultants against their minpolys
    gens = []
    for c in cs:
        for g in c.field_extensions():
            if g not in gens:
                gens.append(g)
    t = len(gens)
    nv = t + 1
    num_polys = []
    den_lcm = MPoly.constant(1, nv, LEX)
    fracs = []
    for c in cs:
        numc, denc = c.fraction_parts()
        remap = [1 + gens.index(g) for g in c.field_extensions()]
        fracs.append((numc.map_vars(remap, nv, LEX) if c.field_extensions()
                      else MPoly.constant(numc.constant_value(), nv, LEX),
                      denc.map_vars(remap, nv, LEX) if c.field_extensions()
                      else MPoly.constant(denc.constant_value(), nv, LEX)))
        den_lcm = den_lcm * fracs[-1][1]
    big = MPoly.zero(nv, LEX)
    for k, (numc, denc) in enumerate(fracs):
        coef = divide_exact(den_lcm, denc) * numc
        big = big + coef * (MPoly.var(0, nv, LEX) ** k)
    for j, g in enumerate(gens):
        var = 1 + j
        mp = MPoly.from_univariate(list(g.alg.minpoly), nv, var, LEX)
        big = _resultant_var(big, mp, var, nv)
    uni = [int(c) for c in _clear_rational(big.univariate_in(0))]
    candidates = []
    for f, _m in intpoly.factor_int_poly(uni, degree_limit=max(64, len(uni))):
        roots = isolated_roots(tuple(f))
        for idx, box in enumerate(roots):
            candidates.append(AlgebraicNumber(tuple(f), idx, box))
    roots = []
    for cand in candidates:
        val = _eval_poly_qqbar_at(p, cand, lim)
        if val.is_zero():
            roots.append(cand)
    assert len(roots) == d, "resultant elimination lost roots"
    return roots


def _clear_rational(coeffs):
    from . import intpoly
    return intpoly.clear_denominators(coeffs)


def _resultant_var(a, b, var, nv):
    """Resultant of two MPoly in the given variable (Sylvester + Bareiss
    over the polynomial ring)."""
    da = a.degree_in(var)
    db = b.degree_in(var)
    if da < 0 or db < 0:
        raise ValueError("zero polynomial in resultant")
    if da == 0:
        return a ** db
    if db == 0:
        return b ** da

    def coeff_of(p, k):
        terms = []
        for e, c in p.terms:
            if e[var] == k:
                ne = list(e)
                ne[var] = 0
                terms.append((tuple(ne), c))
        return MPoly(nv, LEX, terms)

    ac = [coeff_of(a, k) for k in range(da, -1, -1)]
    bc = [coeff_of(b, k) for k in range(db, -1, -1)]
    n = da + db
    zero = MPoly.zero(nv, LEX)
    rows = []
    for i in range(db):
        rows.append([zero] * i + ac + [zero] * (n - da - 1 - i))
    for i in range(da):
        rows.append([zero] * i + bc + [zero] * (n - db - 1 - i))
    return _det_bareiss_mpoly(rows)


def _det_bareiss_mpoly(rows):
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(a[0][0].nvars, a[0][0].order)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = divide_exact(t, prev) if prev is not None else t
            a[i][k] = MPoly.zero(pivot.nvars, pivot.order)
        prev = pivot
    out = a[-1][-1]
    return out if sign > 0 else -out


def _eval_poly_qqbar_at(p, x, lim):
    acc = AlgebraicNumber.from_rational(0)
    for c in reversed(p.coeffs):
        acc = qqbar_mul(acc, x, lim)
        acc = qqbar_add(acc, number._to_qqbar(c, lim), lim)
    return acc


def _multiplicity(p, root, lim):
    m = 0
    cur = p
    while cur.degree() > 0:
        val = _eval_poly_qqbar_at(cur, root, lim)
        if not val.is_zero():
            break
        m += 1
        cur = cur.derivative()
    return m


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class ExactMatrix:
    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = [[ctx._coerce(e) for e in row] for row in rows]
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")
        for row in self.rows:
            for e in row:
                if not e.is_number():
                    raise ValueError("special values are not allowed as entries")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @staticmethod
    def zero(ctx, n, m):
        z = ctx.rational(0)
        return ExactMatrix(ctx, [[z] * m for _ in range(n)])

    @staticmethod
    def identity(ctx, n):
        return ExactMatrix.scalar(ctx, n, ctx.rational(1))

    @staticmethod
    def scalar(ctx, n, c):
        z = ctx.rational(0)
        return ExactMatrix(ctx, [[c if i == j else z for j in range(n)]
                                 for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def copy_rows(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.nrows, self.ncols)


def mat_add(a, b):
    return ExactMatrix(a.ctx, [[number.add(x, y) for x, y in zip(ra, rb)]
                               for ra, rb in zip(a.rows, b.rows)])


def mat_mul(a, b):
    if a.ncols != b.nrows:
        raise ValueError("dimension mismatch")
    ctx = a.ctx
    out = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = ctx.rational(0)
            for k in range(a.ncols):
                acc = number.add(acc, number.mul(a.rows[i][k], b.rows[k][j]))
            row.append(acc)
        out.append(row)
    return ExactMatrix(ctx, out)


def mat_trace(m):
    acc = m.ctx.rational(0)
    for i in range(m.nrows):
        acc = number.add(acc, m.rows[i][i])
    return acc


def mat_charpoly(m):
    """Characteristic polynomial by the Faddeev-LeVerrier recurrence
    (division-free over the entries; divisions are by integers only)."""
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    ctx = m.ctx
    n = m.nrows
    cs = [ctx.rational(1)]  # leading coefficient of x^n
    mk = ExactMatrix.zero(ctx, n, n)
    for k in range(1, n + 1):
        mk = mat_mul(m, mat_add(mk, ExactMatrix.scalar(ctx, n, cs[-1])) if k > 1
                     else ExactMatrix.identity(ctx, n))
        ck = number.mul(mat_trace(mk), ctx.rational(Fraction(-1, k)))
        cs.append(ck)
    coeffs = list(reversed(cs))
    return ExactPoly(ctx, coeffs)


def mat_det(m):
    """Exact determinant: fraction-free elimination when pivot decisions
    land, otherwise the division-free characteristic-polynomial route (the
    result is always produced as a number)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.ctx.rational(1)
    try:
        return _det_bareiss(m)
    except UnknownRankError:
        p = mat_charpoly(m)
        c0 = p.coeffs[0] if p.coeffs else m.ctx.rational(0)
        return number.mul(c0, m.ctx.rational((-1) ** n))


def _det_bareiss(m):
    ctx = m.ctx
    a = m.copy_rows()
    n = len(a)
    sign = 1
    prev = None
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            z = number.is_zero(a[i][k])
            if z is Truth.FALSE:
                piv = i
                break
            if z is Truth.UNKNOWN:
                raise UnknownRankError("pivot decision is undecided")
        if piv is None:
            return ctx.rational(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = number.sub(number.mul(a[i][j], pivot),
                               number.mul(a[i][k], a[k][j]))
                a[i][j] = number.div(t, prev) if prev is not None else t
            a[i][k] = ctx.rational(0)
        prev = pivot
    det = a[-1][-1]
    return det if sign > 0 else number.neg(det)


def mat_lu(m):
    """PLU decomposition with certified pivots: (perm, L, U, rank)."""
    ctx = m.ctx
    a = m.copy_rows()
    nr, nc = m.nrows, m.ncols
    perm = list(range(nr))
    lower = [[ctx.rational(1) if i == j else ctx.rational(0)
              for j in range(nr)] for i in range(nr)]
    rank = 0
    row = 0
    for col in range(nc):
        if row >= nr:
            break
        piv = None
        for i in range(row, nr):
            z = number.is_zero(a[i][col])
            if z is Truth.FALSE:
                piv = i
                break
            if z is Truth.UNKNOWN:
                raise UnknownRankError("pivot decision is undecided")
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
            perm[row], perm[piv] = perm[piv], perm[row]
            for j in range(row):
                lower[row][j], lower[piv][j] = lower[piv][j], lower[row][j]
        inv_p = number.inv(a[row][col])
        for i in range(row + 1, nr):
            f = number.mul(a[i][col], inv_p)
            lower[i][row] = f
            for j in range(col, nc):
                a[i][j] = number.sub(a[i][j], number.mul(f, a[row][j]))
        rank += 1
        row += 1
    return perm, ExactMatrix(ctx, lower), ExactMatrix(ctx, a), rank


def mat_rank(m):
    return mat_lu(m)[3]


def mat_solve(m, b):
    """Solve M x = b for a square certified-nonsingular M."""
    n = m.nrows
    inv_m = mat_inv(m)
    return mat_mul(inv_m, b)


def mat_inv(m):
    """Exact inverse by Gauss-Jordan with certified pivots."""
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    ctx = m.ctx
    n = m.nrows
    a = m.copy_rows()
    inv = ExactMatrix.identity(ctx, n).copy_rows()
    for col in range(n):
        piv = None
        undecided = False
        for i in range(col, n):
            z = number.is_zero(a[i][col])
            if z is Truth.FALSE:
                piv = i
                break
            if z is Truth.UNKNOWN:
                undecided = True
        if piv is None:
            if undecided:
                raise UnknownSingularityError(
                    "failed to prove matrix singular or nonsingular")
            raise SingularMatrixError("singular matrix")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        inv_p = number.inv(a[col][col])
        a[col] = [number.mul(e, inv_p) for e in a[col]]
        inv[col] = [number.mul(e, inv_p) for e in inv[col]]
        for i in range(n):
            if i == col:
                continue
            f = a[i][col]
            if number.equal_structural(f, ctx.rational(0)):
                continue
            a[i] = [number.sub(x, number.mul(f, y)) for x, y in zip(a[i], a[col])]
            inv[i] = [number.sub(x, number.mul(f, y)) for x, y in zip(inv[i], inv[col])]
    return ExactMatrix(ctx, inv)

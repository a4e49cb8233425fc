import random
from fractions import Fraction

import pytest

from exactcalc.context import Context
from exactcalc.number import equal, is_zero
from exactcalc.polymat import (
    ExactMatrix, ExactPoly, SingularMatrixError, UnknownDegreeError,
    UnknownSingularityError, UnknownRankError, mat_charpoly, mat_det,
    mat_inv, mat_lu, mat_mul, mat_rank, mat_solve, poly_gcd_euclid,
    poly_squarefree_roots,
)
from exactcalc.truth import Truth


@pytest.fixture()
def ctx():
    return Context()


def unknown_entry(ctx):
    return ctx.rational(1) - ctx.exp(ctx.exp(ctx.rational(-10000)))


def test_det_pi_matrix_zero(ctx):
    pi = ctx.pi()
    m = ExactMatrix(ctx, [[pi, pi**2], [pi**3, pi**4]])
    d = mat_det(m)
    assert d.kind == "rational" and d.value == 0


def test_det_identity(ctx):
    d = mat_det(ExactMatrix.identity(ctx, 3))
    assert d.value == 1


def test_det_with_undecided_entry_still_produced(ctx):
    m = ExactMatrix(ctx, [[1, 0], [0, unknown_entry(ctx)]])
    d = mat_det(m)
    assert d.is_number()
    assert is_zero(d) is Truth.UNKNOWN
    assert equal(d, ctx.rational(0)) is Truth.UNKNOWN


def test_inv_pi_matrix(ctx):
    pi = ctx.pi()
    m = ExactMatrix(ctx, [[1, pi], [0, 1 / pi]])
    inv = mat_inv(m)
    assert equal(inv[0, 0], ctx.rational(1)) is Truth.TRUE
    assert equal(inv[0, 1], -(pi**2)) is Truth.TRUE
    assert equal(inv[1, 0], ctx.rational(0)) is Truth.TRUE
    assert equal(inv[1, 1], pi) is Truth.TRUE
    prod = mat_mul(m, inv)
    for i in range(2):
        for j in range(2):
            want = ctx.rational(1 if i == j else 0)
            assert equal(prod[i, j], want) is Truth.TRUE


def test_inv_singular_raises(ctx):
    pi = ctx.pi()
    m = ExactMatrix(ctx, [[pi, pi**2], [pi**3, pi**4]])
    with pytest.raises(SingularMatrixError):
        mat_inv(m)


def test_inv_unknown_raises_then_succeeds_at_high_precision():
    ctx = Context()
    m = ExactMatrix(ctx, [[1, 0], [0, unknown_entry(ctx)]])
    with pytest.raises(UnknownSingularityError):
        mat_inv(m)
    ctx2 = Context(prec_max=40000)
    m2 = ExactMatrix(ctx2, [[1, 0], [0, unknown_entry(ctx2)]])
    inv = mat_inv(m2)
    assert inv[1, 1].is_number()


def test_rank_examples(ctx):
    assert mat_rank(ExactMatrix(ctx, [[1, 2], [2, 4]])) == 1
    pi = ctx.pi()
    m = ExactMatrix(ctx, [[pi, pi**2], [pi**3, pi**4]])
    assert mat_rank(m) == 1


def test_lu_and_solve(ctx):
    b = ExactMatrix(ctx, [[3], [5]])
    x = mat_solve(ExactMatrix.identity(ctx, 2), b)
    assert equal(x[0, 0], ctx.rational(3)) is Truth.TRUE
    assert equal(x[1, 0], ctx.rational(5)) is Truth.TRUE
    m = ExactMatrix(ctx, [[2, 1], [1, 3]])
    perm, low, up, rank = mat_lu(m)
    assert rank == 2


def test_rank_unknown_raises(ctx):
    m = ExactMatrix(ctx, [[unknown_entry(ctx)]])
    with pytest.raises(UnknownRankError):
        mat_rank(m)


def test_poly_gcd(ctx):
    s2 = ctx.sqrt(2)
    # (x - sqrt2)(x - 1) and (x - sqrt2)(x + 1)
    p = ExactPoly(ctx, [s2, (s2 + 1) * ctx.rational(-1), 1])  # x^2-(1+sqrt2)x+sqrt2
    q = ExactPoly(ctx, [-s2, ctx.rational(1) - s2, 1])        # x^2+(1-sqrt2)x-sqrt2
    g = poly_gcd_euclid(p, q)
    assert g.degree() == 1
    assert equal(g.coeffs[1], ctx.rational(1)) is Truth.TRUE
    assert equal(g.coeffs[0], -s2) is Truth.TRUE
    # gcd divides both exactly
    for h in (p, q):
        _, rem = h.divmod(g)
        assert rem.is_zero_poly()
    # gcd(p, 0) is monic p
    z = ExactPoly(ctx, [])
    g2 = poly_gcd_euclid(p, z)
    assert equal(g2.coeffs[-1], ctx.rational(1)) is Truth.TRUE
    g3 = poly_gcd_euclid(ExactPoly(ctx, [1, 0, 1]), ExactPoly(ctx, [1, 0, 1]))
    assert [c.value for c in g3.coeffs] == [1, 0, 1]


def test_poly_gcd_unknown_leading(ctx):
    p = ExactPoly(ctx, [ctx.rational(1), unknown_entry(ctx)])
    with pytest.raises(UnknownDegreeError):
        poly_gcd_euclid(ExactPoly(ctx, [1, 1]), p)


def test_squarefree_roots_examples(ctx):
    # (x-1)^2 (x+2)
    p = ExactPoly(ctx, [2, -3, 0, 1])
    roots = sorted(((r.to_rational(), m) for r, m in poly_squarefree_roots(p)))
    assert roots == [(-2, 1), (1, 2)]
    p2 = ExactPoly(ctx, [-2, 0, 1])
    out = poly_squarefree_roots(p2)
    assert sorted(r.minpoly for r, _ in out) == [(-2, 0, 1), (-2, 0, 1)]
    assert all(m == 1 for _, m in out)
    cp = mat_charpoly(ExactMatrix(ctx, [[0, 1], [1, 0]]))
    roots3 = sorted(((r.to_rational(), m) for r, m in poly_squarefree_roots(cp)))
    assert roots3 == [(-1, 1), (1, 1)]


def test_squarefree_roots_algebraic_coeffs(ctx):
    s2 = ctx.sqrt(2)
    # (x - sqrt2)(x + sqrt2) = x^2 - 2 built with algebraic coefficients
    p = ExactPoly(ctx, [s2 * s2 * ctx.rational(-1), ctx.rational(0), ctx.rational(1)])
    out = poly_squarefree_roots(p)
    assert sorted(r.minpoly for r, _ in out) == [(-2, 0, 1), (-2, 0, 1)]
    # x^2 - 2 sqrt2 x + 2 = (x - sqrt2)^2
    p2 = ExactPoly(ctx, [ctx.rational(2), s2 * ctx.rational(-2), ctx.rational(1)])
    out2 = poly_squarefree_roots(p2)
    assert len(out2) == 1
    root, mult = out2[0]
    assert mult == 2 and root.minpoly == (-2, 0, 1)


def test_charpoly_examples(ctx):
    pi = ctx.pi()
    cp = mat_charpoly(ExactMatrix(ctx, [[pi, 0], [0, pi]]))
    # (x - pi)^2 = x^2 - 2 pi x + pi^2
    assert equal(cp.coeffs[2], ctx.rational(1)) is Truth.TRUE
    assert equal(cp.coeffs[1], pi * ctx.rational(-2)) is Truth.TRUE
    assert equal(cp.coeffs[0], pi * pi) is Truth.TRUE
    c = ctx.sqrt(3)
    cp1 = mat_charpoly(ExactMatrix(ctx, [[c]]))
    assert equal(cp1.coeffs[0], -c) is Truth.TRUE
    # constant term is (-1)^n det
    m = ExactMatrix(ctx, [[1, 2], [3, ctx.sqrt(2)]])
    cp2 = mat_charpoly(m)
    assert equal(cp2.coeffs[0], mat_det(m)) is Truth.TRUE


def test_det_multiplicative_random(ctx):
    rng = random.Random(5)
    pool = [ctx.rational(1), ctx.rational(-2), ctx.sqrt(2), ctx.pi(),
            ctx.rational(Fraction(1, 2))]
    for _ in range(4):
        a = ExactMatrix(ctx, [[rng.choice(pool) for _ in range(3)] for _ in range(3)])
        b = ExactMatrix(ctx, [[rng.choice(pool) for _ in range(3)] for _ in range(3)])
        lhs = mat_det(mat_mul(a, b))
        rhs = mat_det(a) * mat_det(b)
        assert equal(lhs, rhs) is Truth.TRUE


def test_cayley_hamilton_small(ctx):
    rng = random.Random(7)
    pool = [ctx.rational(1), ctx.rational(-1), ctx.sqrt(2), ctx.pi()]
    for n in (2, 3):
        m = ExactMatrix(ctx, [[rng.choice(pool) for _ in range(n)] for _ in range(n)])
        cp = mat_charpoly(m)
        val = cp.evaluate_matrix(m)
        for i in range(n):
            for j in range(n):
                assert is_zero(val[i, j]) is Truth.TRUE

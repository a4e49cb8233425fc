import random
from fractions import Fraction

from exactcalc import intpoly as ip


def test_divmod_and_gcd():
    # (x-1)(x+1) = x^2 - 1
    q, r = ip.divmod_exact_field([-1, 0, 1], [-1, 1])
    assert r == []
    assert q == [Fraction(1), Fraction(1)]
    assert ip.gcd_q([-1, 0, 1], [-1, 1]) == [-1, 1]
    assert ip.gcd_q([6], [4]) == [1]


def test_squarefree_decomposition():
    # (x-1)^2 (x+2)
    p = ip.mul(ip.mul([-1, 1], [-1, 1]), [2, 1])
    parts = ip.squarefree_decomposition(p)
    assert sorted(parts, key=lambda t: t[1]) == [([2, 1], 1), ([-1, 1], 2)]


def _has_quadratic_factor(p, bound=12):
    """Brute-force oracle: search x^2+bx+c | p with small integer b, c."""
    for b in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            if c == 0:
                continue
            _, r = ip.divmod_exact_field(p, [c, b, 1])
            if not r:
                return True
    return False


def _has_rational_root(p):
    lc, tc = p[-1], p[0]
    for u in range(-abs(tc), abs(tc) + 1):
        if u == 0 or tc % u:
            continue
        for v in range(1, abs(lc) + 1):
            if lc % v:
                continue
            if ip.evaluate(p, Fraction(u, v)) == 0:
                return True
    return False


def test_factor_x4_minus_10x2_plus_1_irreducible():
    p = [1, 0, -10, 0, 1]
    assert not _has_rational_root(p)
    assert not _has_quadratic_factor(p)
    factors = ip.factor_int_poly(p)
    assert factors == [([1, 0, -10, 0, 1], 1)]


def test_factor_cyclotomic():
    factors = ip.factor_int_poly([-1, 0, 0, 1])  # x^3 - 1
    assert factors == [([-1, 1], 1), ([1, 1, 1], 1)]


def test_factor_square():
    factors = ip.factor_int_poly([1, -2, 1])  # (x-1)^2
    assert factors == [([-1, 1], 2)]


def test_factor_random_products():
    rng = random.Random(42)
    irreducibles = [[-1, 1], [1, 1], [2, 1], [1, 0, 1], [-2, 0, 1],
                    [1, 1, 1], [-1, -1, 1], [1, 0, 0, 1, 1]]
    for _ in range(25):
        chosen = rng.sample(irreducibles, rng.randint(1, 3))
        prod = [rng.choice([1, 2, 3])]
        expect = {}
        for f in chosen:
            m = rng.randint(1, 2)
            for _ in range(m):
                prod = ip.mul(prod, f)
            expect[tuple(f)] = expect.get(tuple(f), 0) + m
        got = {}
        for f, m in ip.factor_int_poly(prod):
            got[tuple(f)] = got.get(tuple(f), 0) + m
        # x^3+x+1-type entries might combine with themselves; compare multisets
        assert got == expect
        back = [1]
        for f, m in ip.factor_int_poly(prod):
            for _ in range(m):
                back = ip.mul(back, list(f))
        assert ip.primitive(back) == ip.primitive(prod)


def test_sturm_count():
    # x^3 - 2x: roots -sqrt2, 0, sqrt2
    p = [0, -2, 0, 1]
    assert ip.count_real_roots(p, Fraction(-10), Fraction(10)) == 3
    assert ip.count_real_roots(p, Fraction(0), Fraction(10)) == 1
    assert ip.count_real_roots(p, Fraction(-10), Fraction(-1)) == 1


def test_resultant():
    # res(x^2-2, x^2-3) = (sqrt2-sqrt3)(sqrt2+sqrt3)(-sqrt2-sqrt3)(-sqrt2+sqrt3) = 1
    assert ip.resultant_int([-2, 0, 1], [-3, 0, 1]) == 1
    # res(x-a, q) = q(a)
    assert ip.resultant_int([-5, 1], [1, 2, 3]) == 1 + 10 + 75

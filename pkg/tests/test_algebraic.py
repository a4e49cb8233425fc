import random
from fractions import Fraction

import pytest

from exactcalc.algebraic import (
    AlgebraicNumber, NotIsolatingError, isolated_roots, qqbar_add, qqbar_arith,
    qqbar_cmp_real, qqbar_conj, qqbar_div, qqbar_equal, qqbar_inv, qqbar_mul,
    qqbar_neg, qqbar_pow_rational, qqbar_sqrt,
)
from exactcalc.ball import ComplexBall
from exactcalc.intpoly import UnsupportedDegreeError


def approx(re, im=0, rad=Fraction(1, 100)):
    b = ComplexBall.from_fractions(Fraction(re), Fraction(im), 64)
    from exactcalc.ball import RealBall, mag_from_fraction_upper, mag_add
    extra = mag_from_fraction_upper(Fraction(rad))
    return ComplexBall(RealBall(b.re.man, b.re.exp, mag_add(b.re.rad, extra)),
                       RealBall(b.im.man, b.im.exp, mag_add(b.im.rad, extra)))


def test_sqrt2_from_root():
    a = AlgebraicNumber.from_root([-2, 0, 1], approx(Fraction(1414, 1000)))
    assert a.minpoly == (-2, 0, 1)
    assert a.is_real()
    e = a.enclosure(64)
    assert e.re.lower() > 1.41 and e.re.upper() < 1.42


def test_sqrt2_plus_sqrt3_selected_from_quartic():
    # oracle: prod(x +/- sqrt2 +/- sqrt3) = x^4 - 10x^2 + 1 (expanded by hand)
    a = AlgebraicNumber.from_root([1, 0, -10, 0, 1], approx(Fraction(31463, 10000)))
    assert a.minpoly == (1, 0, -10, 0, 1)
    assert a.root_index == 3  # largest of the four real roots


def test_golden_ratio_from_root():
    # oracle: substitute (1+sqrt5)/2 into x^2-x-1 and clear radicals -> 0
    phi = AlgebraicNumber.from_root([-1, -1, 1], approx(Fraction(1618, 1000)))
    assert phi.minpoly == (-1, -1, 1)
    e = phi.enclosure(80)
    assert e.re.contains_fraction(Fraction(
        16180339887498948482045868343656381177203091798057628621354486227,
        10**64))


def test_from_root_rejects_ambiguous_box():
    with pytest.raises(NotIsolatingError):
        AlgebraicNumber.from_root([-2, 0, 1], approx(0, 0, rad=Fraction(5)))
    with pytest.raises(NotIsolatingError):
        AlgebraicNumber.from_root([-2, 0, 1], approx(100, 0, rad=Fraction(1, 10)))


def sqrt_int(n):
    return qqbar_sqrt(AlgebraicNumber.from_rational(n))


def test_add_sqrt2_sqrt3():
    s = qqbar_add(sqrt_int(2), sqrt_int(3))
    assert s.minpoly == (1, 0, -10, 0, 1)


def test_mul_sqrt2_sqrt2():
    p = qqbar_mul(sqrt_int(2), sqrt_int(2))
    assert p.is_rational() and p.to_rational() == 2


def test_i_plus_minus_i():
    i = AlgebraicNumber.from_root([1, 0, 1], approx(0, 1))
    mi = qqbar_neg(i)
    z = qqbar_add(i, mi)
    assert z.is_rational() and z.to_rational() == 0


def test_sqrt8_equals_2sqrt2():
    a = sqrt_int(8)
    b = qqbar_mul(AlgebraicNumber.from_rational(2), sqrt_int(2))
    assert a.minpoly == (-8, 0, 1) == b.minpoly
    assert qqbar_equal(a, b)


def test_equal_cases():
    assert not qqbar_equal(sqrt_int(2), AlgebraicNumber.from_rational(Fraction(3, 2)))
    a = sqrt_int(2)
    assert qqbar_equal(a, a)


def test_cmp_real():
    s2 = sqrt_int(2)
    assert qqbar_cmp_real(s2, AlgebraicNumber.from_rational(Fraction(3, 2))) == -1
    assert qqbar_cmp_real(s2, s2) == 0
    assert qqbar_cmp_real(qqbar_neg(s2), s2) == -1


def test_cmp_real_rejects_complex():
    i = AlgebraicNumber.from_root([1, 0, 1], approx(0, 1))
    with pytest.raises(ValueError):
        qqbar_cmp_real(i, sqrt_int(2))


def test_conj():
    i = AlgebraicNumber.from_root([1, 0, 1], approx(0, 1))
    ci = qqbar_conj(i)
    assert ci.minpoly == (1, 0, 1)
    assert ci.enclosure(64).im.upper() < 0
    s2 = sqrt_int(2)
    assert qqbar_conj(s2) is s2
    # conjugate of an upper root of x^5-x-1 (~0.1812 + 1.0839i) is the lower partner
    r = AlgebraicNumber.from_root([-1, -1, 0, 0, 0, 1],
                                  approx(Fraction(18, 100), Fraction(108, 100),
                                         rad=Fraction(1, 8)))
    assert not r.is_real()
    cr = qqbar_conj(r)
    assert cr.minpoly == r.minpoly and cr.root_index != r.root_index
    assert cr.enclosure(64).im.upper() < 0


def test_inverse_and_division():
    s2 = sqrt_int(2)
    inv = qqbar_inv(s2)
    prod = qqbar_mul(inv, s2)
    assert prod.is_rational() and prod.to_rational() == 1
    q = qqbar_div(sqrt_int(8), sqrt_int(2))
    assert q.is_rational() and q.to_rational() == 2


def test_pow_rational_principal_branch():
    # (-8)^(1/3) is principal: 2 * exp(i pi/3), not -2
    m8 = AlgebraicNumber.from_rational(-8)
    r = qqbar_pow_rational(m8, 1, 3)
    e = r.enclosure(64)
    assert e.re.contains_fraction(1)
    assert e.im.lower() > 0
    # real positive case lands on the real root
    r2 = qqbar_pow_rational(AlgebraicNumber.from_rational(8), 1, 3)
    assert r2.is_rational() and r2.to_rational() == 2


def test_degree_growth_and_limit():
    s2, s3 = sqrt_int(2), sqrt_int(3)
    s = qqbar_add(s2, s3)
    assert s.degree() == s2.degree() * s3.degree()
    with pytest.raises(UnsupportedDegreeError):
        qqbar_add(s2, s3, degree_limit=2)


def test_minpoly_divides_annihilator():
    from exactcalc.algebraic import _binary_annihilator
    from exactcalc import intpoly
    s2, s3 = sqrt_int(2), sqrt_int(3)
    ann = _binary_annihilator("add", list(s2.minpoly), list(s3.minpoly))
    s = qqbar_add(s2, s3)
    _, rem = intpoly.divmod_exact_field(ann, list(s.minpoly))
    assert not rem


def test_canonicality_random_radicals():
    rng = random.Random(99)
    pool = [2, 3, 5, 6, 7, 8]
    for _ in range(120):
        n1, n2 = rng.choice(pool), rng.choice(pool)
        c = rng.randint(1, 3)
        # (sqrt(n1) + c) * sqrt(n2) built two ways
        a = qqbar_mul(qqbar_add(sqrt_int(n1), AlgebraicNumber.from_rational(c)),
                      sqrt_int(n2))
        b = qqbar_add(qqbar_mul(sqrt_int(n1), sqrt_int(n2)),
                      qqbar_mul(AlgebraicNumber.from_rational(c), sqrt_int(n2)))
        assert a.key() == b.key()


def test_box_refinement_keeps_root():
    s2 = sqrt_int(2)
    for prec in (64, 128, 256, 512):
        e = s2.enclosure(prec)
        assert e.re.lower() ** 2 < 2 < e.re.upper() ** 2


def test_isolated_roots_count_and_order():
    # x^3 - 2: one real root, a conjugate pair
    roots = isolated_roots((-2, 0, 0, 1))
    assert len(roots) == 3
    assert roots[0].im.is_zero()
    assert not roots[1].im.is_zero() and not roots[2].im.is_zero()
    assert roots[1].im.upper() < 0 < roots[2].im.lower()


def test_arith_entry_point():
    s2 = sqrt_int(2)
    r = qqbar_arith("pow_rational", s2, (2, 1))
    assert r.is_rational() and r.to_rational() == 2

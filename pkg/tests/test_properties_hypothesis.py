from hypothesis import given, settings, strategies as st

from exactcalc.ball import ComplexBall, ball_arith
from exactcalc.mpoly import MPoly, LEX, canonicalize_fraction, mpoly_gcd, divide_exact

small_fraction = st.fractions(min_value=-30, max_value=30, max_denominator=9)


@given(a_re=small_fraction, a_im=small_fraction,
       b_re=small_fraction, b_im=small_fraction,
       op=st.sampled_from(["add", "sub", "mul", "div"]))
@settings(max_examples=300, deadline=None)
def test_ball_single_op_inclusion(a_re, a_im, b_re, b_im, op):
    if op == "div" and b_re == 0 and b_im == 0:
        return
    x = ComplexBall.from_fractions(a_re, a_im, 64)
    y = ComplexBall.from_fractions(b_re, b_im, 64)
    out = ball_arith(op, x, y, prec=64)
    if op == "add":
        want = (a_re + b_re, a_im + b_im)
    elif op == "sub":
        want = (a_re - b_re, a_im - b_im)
    elif op == "mul":
        want = (a_re * b_re - a_im * b_im, a_re * b_im + a_im * b_re)
    else:
        den = b_re * b_re + b_im * b_im
        want = ((a_re * b_re + a_im * b_im) / den,
                (a_im * b_re - a_re * b_im) / den)
    assert out.is_indeterminate or out.contains_fractions(*want)


def polys(nvars):
    term = st.tuples(
        st.tuples(*([st.integers(min_value=0, max_value=2)] * nvars)),
        st.fractions(min_value=-3, max_value=3, max_denominator=3))
    return st.lists(term, min_size=1, max_size=3).map(
        lambda ts: MPoly(nvars, LEX, ts))


@given(num=polys(2), den=polys(2))
@settings(max_examples=150, deadline=None)
def test_fraction_canonicalization_properties(num, den):
    if den.is_zero():
        return
    fr = canonicalize_fraction(num, den)
    # idempotent
    assert canonicalize_fraction(fr.num, fr.den) == fr
    # equality-preserving: num * den' = num' * den
    assert num * fr.den == fr.num * den
    # coprime and normalized denominator
    if not fr.num.is_zero():
        assert mpoly_gcd(fr.num, fr.den).is_constant()
    assert fr.den.content_and_sign() == 1


@given(a=polys(2), b=polys(2), g=polys(2))
@settings(max_examples=100, deadline=None)
def test_gcd_divides_products(a, b, g):
    if a.is_zero() or b.is_zero() or g.is_zero():
        return
    d = mpoly_gcd(g * a, g * b)
    divide_exact(g * a, d)
    divide_exact(g * b, d)
    divide_exact(d, g.primitive())

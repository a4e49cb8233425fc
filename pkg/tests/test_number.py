import random
from fractions import Fraction

import pytest

from exactcalc.context import Context
from exactcalc.number import (
    DomainError, NotANumberError, add, cmp_real, div, enclosure, equal,
    equal_structural, inv, is_zero, mul, neg, pow_int, repr_text, sub,
    to_machine,
)
from exactcalc.truth import Truth


@pytest.fixture()
def ctx():
    return Context()


def test_intro_pi_fraction(ctx):
    x = div(sub(pow_int(ctx.pi(), 2), ctx.rational(9)), add(ctx.pi(), ctx.rational(3)))
    assert repr_text(x) == "0.141593 {a-3 where a = 3.14159 [Pi]}"


def test_fibonacci_identity(ctx):
    phi = div(add(ctx.sqrt(5), ctx.rational(1)), ctx.rational(2))
    num = sub(pow_int(phi, 100), pow_int(sub(ctx.rational(1), phi), 100))
    x = div(num, ctx.sqrt(5))
    assert x.kind == "rational"
    assert x.value == 354224848179261915075


def test_one_over_zero_and_zero_over_zero(ctx):
    assert div(ctx.rational(1), ctx.rational(0)).is_special("uinf")
    assert div(ctx.rational(0), ctx.rational(0)).is_special("undef")
    inf = div(ctx.rational(1), ctx.rational(0))
    assert sub(inf, inf).is_special("undef")
    assert add(inf, ctx.rational(5)).is_special("uinf")


def test_signed_infinity_closure(ctx):
    minf = ctx.log(ctx.rational(0))
    assert minf.is_special("inf")
    assert minf.direction.value == -1
    # -inf + 2i stays the same signed infinity
    two_i = mul(ctx.rational(2), ctx.i())
    s = add(minf, two_i)
    assert s.is_special("inf") and s.direction.value == -1
    assert neg(minf).direction.value == 1
    assert mul(minf, ctx.rational(-3)).direction.value == 1
    assert inv(minf).kind == "rational" and inv(minf).value == 0


def test_construct_specializations(ctx):
    assert ctx.exp(ctx.rational(0)).value == 1
    assert ctx.log(ctx.rational(1)).value == 0
    s = ctx.sqrt(2)
    assert s.kind == "nf_elem"
    assert s.field.gens[0].alg.minpoly == (-2, 0, 1)
    assert ctx.sqrt(Fraction(9, 4)).value == Fraction(3, 2)
    # exp of a rational multiple of pi*i is a root of unity
    w = ctx.exp(div(mul(mul(ctx.rational(2), ctx.pi()), ctx.i()), ctx.rational(8)))
    assert w.kind == "nf_elem"
    assert w.field.gens[0].alg.minpoly == (1, 0, 0, 0, 1)  # x^4 + 1
    assert ctx.exp(mul(ctx.pi(), ctx.i())).value == -1
    # exp(q log z) = z^q
    assert ctx.exp(mul(ctx.rational(2), ctx.log(ctx.rational(3)))).value == 9


def test_is_zero_examples(ctx):
    x = div(ctx.log(add(ctx.sqrt(2), ctx.sqrt(3))),
            ctx.log(add(ctx.rational(5), mul(ctx.rational(2), ctx.sqrt(6)))))
    assert is_zero(sub(x, ctx.rational(Fraction(1, 2)))) is Truth.TRUE
    u = sub(ctx.rational(1), ctx.exp(ctx.exp(ctx.rational(-10000))))
    assert is_zero(u) is Truth.UNKNOWN
    assert is_zero(sub(ctx.pi(), ctx.rational(3))) is Truth.FALSE


def test_equal_with_specials(ctx):
    undef = ctx.undefined()
    unknown = ctx.unknown()
    uinf = ctx.unsigned_infinity()
    assert equal(undef, undef) is Truth.TRUE
    assert equal(undef, ctx.rational(3)) is Truth.FALSE
    assert equal(unknown, ctx.rational(3)) is Truth.UNKNOWN
    assert equal(unknown, unknown) is Truth.UNKNOWN
    assert equal(uinf, uinf) is Truth.TRUE
    assert equal(uinf, undef) is Truth.FALSE


def test_equal_rationalized_denominator(ctx):
    a = div(ctx.rational(1), ctx.sqrt(2))
    b = div(ctx.sqrt(2), ctx.rational(2))
    # both canonicalize to the same number-field representative
    assert equal_structural(a, b)
    assert equal(a, b) is Truth.TRUE


def test_equal_structural_examples(ctx):
    x = div(sub(pow_int(ctx.pi(), 2), ctx.rational(9)), add(ctx.pi(), ctx.rational(3)))
    y = sub(ctx.pi(), ctx.rational(3))
    assert equal_structural(x, y)
    e = ctx.exp(ctx.rational(1))
    assert not equal_structural(ctx.pi(), e)
    assert equal(ctx.pi(), e) is Truth.FALSE


def test_cmp_real(ctx):
    assert cmp_real(ctx.pi(), ctx.pi()) == "eq"
    assert cmp_real(ctx.rational(1), ctx.rational(2)) == "lt"
    v = sub(ctx.exp(mul(ctx.pi(), ctx.sqrt(163))), ctx.rational(262537412640768744))
    assert cmp_real(v, ctx.rational(0)) == "lt"
    assert cmp_real(v, ctx.rational(Fraction(-1, 10**12))) == "gt"
    with pytest.raises(DomainError):
        cmp_real(ctx.i(), ctx.rational(0))


def test_cmp_real_unknown(ctx):
    u = sub(ctx.rational(1), ctx.exp(ctx.exp(ctx.rational(-10000))))
    assert cmp_real(u, ctx.rational(0)) == "unknown"


def test_enclosure(ctx):
    ball = enclosure(ctx.pi(), 64)
    assert ball.re.rad_fraction() <= Fraction(1, 2**60)
    with pytest.raises(NotANumberError):
        enclosure(ctx.unsigned_infinity(), 64)


def test_repr_special_values(ctx):
    assert repr_text(ctx.unsigned_infinity()) == "UnsignedInfinity"
    assert repr_text(ctx.undefined()) == "Undefined"
    assert repr_text(ctx.unknown()) == "Unknown"
    assert repr_text(ctx.log(ctx.rational(0))) == "-Infinity"
    assert repr_text(ctx.rational(0)) == "0"


def test_demotion_x_minus_x(ctx):
    for x in (ctx.pi(), ctx.sqrt(2), ctx.exp(ctx.pi()),
              div(ctx.rational(1), add(ctx.pi(), ctx.rational(1)))):
        z = sub(x, x)
        assert z.kind == "rational" and z.value == 0


def test_demotion_to_nf_elem(ctx):
    # pi + sqrt2 - pi lives in Q(sqrt2) storage again
    x = sub(add(ctx.pi(), ctx.sqrt(2)), ctx.pi())
    assert x.kind == "nf_elem"
    assert equal(x, ctx.sqrt(2)) is Truth.TRUE


def test_field_laws_random(ctx):
    rng = random.Random(11)
    pool = [ctx.pi(), ctx.sqrt(2), ctx.rational(Fraction(3, 7)),
            add(ctx.pi(), ctx.sqrt(2)), div(ctx.rational(1), add(ctx.pi(), ctx.rational(2)))]
    for _ in range(12):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert equal(add(a, b), add(b, a)) is Truth.TRUE
        assert equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) is Truth.TRUE
        assert equal(add(add(a, b), c), add(a, add(b, c))) is Truth.TRUE


def test_structural_implies_mathematical(ctx):
    rng = random.Random(13)
    pool = [ctx.pi(), ctx.sqrt(2), ctx.rational(5), add(ctx.pi(), ctx.rational(1))]
    for _ in range(20):
        a, b = rng.choice(pool), rng.choice(pool)
        x = mul(a, b)
        y = mul(a, b)
        if equal_structural(x, y):
            assert equal(x, y) is Truth.TRUE


def test_decision_soundness(ctx):
    cases = [
        sub(ctx.pi(), ctx.rational(3)),
        sub(ctx.sqrt(8), mul(ctx.rational(2), ctx.sqrt(2))),
        sub(ctx.exp(ctx.rational(2)), ctx.rational(7)),
    ]
    for x in cases:
        z = is_zero(x)
        if z is Truth.FALSE:
            found = False
            prec = 64
            while prec <= 4096:
                if x.enclosure_raw(prec).contains_zero() is False:
                    found = True
                    break
                prec *= 2
            assert found
        elif z is Truth.TRUE:
            for prec in (64, 256):
                assert x.enclosure_raw(prec).contains_zero()


def test_pow_int_expansion_limit(ctx):
    base = add(ctx.pi(), ctx.rational(1))
    small = pow_int(base, 3)
    assert small.kind == "generic"
    assert small.frac.num.total_degree() == 3
    big = pow_int(base, 1000)
    # above the limit a power generator is created instead of expanding
    assert big.kind == "generic"
    assert any(g.head == "Pow" for g in big.field.gens)
    # monomials always expand
    mono = pow_int(ctx.pi(), 1000)
    assert mono.kind == "generic"
    assert mono.frac.num.total_degree() == 1000


def test_pow_int_algebraic_always_expands(ctx):
    phi = div(add(ctx.sqrt(5), ctx.rational(1)), ctx.rational(2))
    p = pow_int(phi, 100)
    assert p.kind == "nf_elem"


def test_division_certification(ctx):
    u = sub(ctx.rational(1), ctx.exp(ctx.exp(ctx.rational(-10000))))
    q = div(ctx.rational(1), u)
    assert q.is_special("unknown")


def test_machine_serialization(ctx):
    import json
    x = div(sub(pow_int(ctx.pi(), 2), ctx.rational(9)), add(ctx.pi(), ctx.rational(3)))
    payload = to_machine(x)
    s = json.dumps(payload)
    back = json.loads(s)
    assert back["decimal"] == "0.141593"
    assert back["field_generators"][0]["head"] == "Pi"
    assert back["numerator"] == [{"exps": [1], "coeff": "1"},
                                 {"exps": [0], "coeff": "-3"}]
    assert back["denominator"] == [{"exps": [0], "coeff": "1"}]

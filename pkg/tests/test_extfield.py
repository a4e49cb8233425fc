import random
from fractions import Fraction

import pytest

from exactcalc.ball import separated_from_zero
from exactcalc.context import Context
from exactcalc.extfield import (
    Extension, build_reduction_ideal, ext_complexity_cmp, field_for,
    merge_fields,
)
from exactcalc.mpoly import MPoly
from exactcalc import number


@pytest.fixture()
def ctx():
    return Context()


def field_of(x):
    return x.field


def test_complexity_symbolic_above_argument(ctx):
    pi = ctx.pi()
    e_pi = ctx.exp(pi)
    gens = e_pi.field.gens
    exp_ext = next(g for g in gens if g.head == "Exp")
    pi_ext = next(g for g in gens if g.head == "Pi")
    assert ext_complexity_cmp(exp_ext, pi_ext) > 0
    assert gens[0] is exp_ext  # descending order


def test_complexity_symbolic_above_algebraic(ctx):
    pi_ext = ctx.pi().field.gens[0]
    s2_ext = ctx.sqrt(2).field.gens[0]
    assert ext_complexity_cmp(pi_ext, s2_ext) > 0
    assert ext_complexity_cmp(s2_ext, s2_ext) == 0


def test_complexity_strict_total_order(ctx):
    vals = [ctx.pi(), ctx.sqrt(2), ctx.sqrt(3), ctx.exp(ctx.pi()),
            ctx.log(ctx.rational(2)), ctx.i(), ctx.exp(ctx.rational(2)),
            ctx.sqrt(ctx.pi())]
    exts = []
    for v in vals:
        exts.extend(v.field.gens)
    exts = list({id(e): e for e in exts}.values())
    rng = random.Random(4)
    for _ in range(200):
        a, b, c = rng.choice(exts), rng.choice(exts), rng.choice(exts)
        sab = ext_complexity_cmp(a, b)
        assert sab == -ext_complexity_cmp(b, a)
        if sab == 0:
            assert a is b
        if sab > 0 and ext_complexity_cmp(b, c) > 0:
            assert ext_complexity_cmp(a, c) > 0


def test_interning_and_cache_growth(ctx):
    a = ctx.sqrt(2)
    n_ext, n_fields = ctx.cache_sizes()
    b = ctx.sqrt(2)
    assert ctx.cache_sizes() == (n_ext, n_fields)
    assert a.field is b.field
    assert a.field.gens[0] is b.field.gens[0]


def test_example_field_log_i_pi_i(ctx):
    # Q(log i, pi, i): relations 2X1 - X2X3 and X3^2 + 1
    i = ctx.i()
    li = ctx.log(i)
    pi = ctx.pi()
    field = merge_fields(merge_fields(li.field, pi.field, ctx), i.field, ctx)
    assert [g.describe() for g in field.gens] == ["Log", "Pi", "algebraic deg 2"]
    build_reduction_ideal(field, 128, ctx)
    n = field.nvars
    want1 = (MPoly.var(0, n) * 2 - MPoly.var(1, n) * MPoly.var(2, n)).primitive()
    want2 = (MPoly.var(2, n) ** 2 + MPoly.constant(1, n)).primitive()
    have = {p.primitive().terms for p in field.ideal}
    assert want1.terms in have
    assert want2.terms in have


def test_sqrt2_field_complete(ctx):
    f = ctx.sqrt(2).field
    assert f.complete
    n = f.nvars
    assert any(p.terms == (MPoly.var(0, n) ** 2 - MPoly.constant(2, n)).terms
               for p in f.ideal)


def test_pi_field_complete_empty_ideal(ctx):
    f = ctx.pi().field
    assert f.complete
    assert f.ideal == []


def test_completeness_whitelist_exp_log(ctx):
    assert ctx.exp(ctx.rational(2)).field.complete       # Lindemann-Weierstrass
    assert ctx.log(ctx.rational(2)).field.complete
    # exp of an irrational algebraic adjoins the argument's generator, so
    # the field is not single-generator and stays unmarked
    assert not ctx.exp(ctx.sqrt(2)).field.complete
    # multi-generator fields are never marked complete
    two_gen = merge_fields(ctx.pi().field, ctx.sqrt(2).field, ctx)
    assert not two_gen.complete
    # a complete field with empty ideal has exactly one whitelisted generator
    for f in (ctx.pi().field, ctx.exp(ctx.rational(2)).field,
              ctx.log(ctx.rational(2)).field):
        assert f.complete and f.ideal == [] and f.nvars == 1


def test_vieta_full_conjugate_set(ctx):
    from exactcalc.algebraic import AlgebraicNumber, isolated_roots
    from exactcalc.extfield import conjugate_root_relations
    mp = (-1, -1, 1)  # x^2 - x - 1
    roots = isolated_roots(mp)
    exts = [ctx.intern_extension(Extension(alg=AlgebraicNumber(mp, k, roots[k])))
            for k in range(2)]
    field = field_for(ctx, exts)
    rels = {p.primitive().terms for p in conjugate_root_relations(field)}
    n = field.nvars
    e1 = (MPoly.var(0, n) + MPoly.var(1, n) - MPoly.constant(1, n)).primitive()
    e2 = (MPoly.var(0, n) * MPoly.var(1, n) + MPoly.constant(1, n)).primitive()
    assert e1.terms in rels and e2.terms in rels


def test_vieta_partial_set_empty(ctx):
    from exactcalc.extfield import conjugate_root_relations
    phi = ctx.sqrt(5).field  # single root of x^2 - 5
    assert conjugate_root_relations(phi) == []


def test_vieta_cubic(ctx):
    from exactcalc.algebraic import AlgebraicNumber, isolated_roots
    from exactcalc.extfield import conjugate_root_relations
    mp = (-2, 0, 0, 1)  # x^3 - 2
    roots = isolated_roots(mp)
    exts = [ctx.intern_extension(Extension(alg=AlgebraicNumber(mp, k, roots[k])))
            for k in range(3)]
    field = field_for(ctx, exts)
    rels = {p.primitive().terms for p in conjugate_root_relations(field)}
    n = field.nvars
    x1, x2, x3 = (MPoly.var(k, n) for k in range(3))
    assert (x1 + x2 + x3).primitive().terms in rels
    assert (x1 * x2 + x1 * x3 + x2 * x3).primitive().terms in rels
    assert (x1 * x2 * x3 - MPoly.constant(2, n)).primitive().terms in rels


def test_log_linear_2_3_6(ctx):
    l2, l3, l6 = ctx.log(ctx.rational(2)), ctx.log(ctx.rational(3)), ctx.log(ctx.rational(6))
    field = merge_fields(merge_fields(l2.field, l3.field, ctx), l6.field, ctx)
    build_reduction_ideal(field, 128, ctx)
    # generators are ordered [log6, log3, log2]; the relation is X1 - X2 - X3
    n = field.nvars
    want = (MPoly.var(0, n) - MPoly.var(1, n) - MPoly.var(2, n)).primitive()
    assert any(p.primitive().terms == want.terms for p in field.ideal)


def test_log_minus_one_is_pi_i(ctx):
    lm1 = ctx.log(ctx.rational(-1))
    field = merge_fields(merge_fields(lm1.field, ctx.pi().field, ctx),
                         ctx.i().field, ctx)
    build_reduction_ideal(field, 128, ctx)
    n = field.nvars
    # gens: [Log(-1), Pi, i]; log(-1) = pi i
    want = (MPoly.var(0, n) - MPoly.var(1, n) * MPoly.var(2, n)).primitive()
    assert any(p.primitive().terms == want.terms for p in field.ideal)


def test_no_relation_log2_log3(ctx):
    l2, l3 = ctx.log(ctx.rational(2)), ctx.log(ctx.rational(3))
    field = merge_fields(l2.field, l3.field, ctx)
    build_reduction_ideal(field, 128, ctx)
    assert field.ideal == []  # 2^a 3^b = 1 has no nonzero integer solutions


def test_multiplicative_sqrt8_sqrt2(ctx):
    s8, s2 = ctx.sqrt(8), ctx.sqrt(2)
    field = merge_fields(s8.field, s2.field, ctx)
    build_reduction_ideal(field, 128, ctx)
    n = field.nvars
    # the rational-ratio sweep certifies sqrt8 = 2 sqrt2 in the closure
    want = (MPoly.var(0, n) - MPoly.var(1, n) * 2).primitive()
    assert any(p.primitive().terms == want.terms for p in field.ideal)


def test_multiplicative_exp_x_2x(ctx):
    pi = ctx.pi()
    e1 = ctx.exp(pi)
    e2 = ctx.exp(pi + pi)
    field = merge_fields(e1.field, e2.field, ctx)
    from exactcalc.relations import multiplicative_relations
    rels = {p.primitive().terms for p in multiplicative_relations(field, 128, ctx)}
    # gens sorted: [Exp(2pi), Exp(pi), Pi]; relation X1 - X2^2
    n = field.nvars
    want = (MPoly.var(0, n) - MPoly.var(1, n) ** 2).primitive()
    assert want.terms in rels


def test_multiplicative_pi_only_empty(ctx):
    from exactcalc.relations import multiplicative_relations
    assert multiplicative_relations(ctx.pi().field, 128, ctx) == []


def test_algebraic_interrelations(ctx):
    from exactcalc.relations import algebraic_linear_relations
    s2, s8 = ctx.sqrt(2), ctx.sqrt(8)
    field = merge_fields(s2.field, s8.field, ctx)
    rels = {p.primitive().terms for p in algebraic_linear_relations(field, 128, ctx)}
    n = field.nvars
    # gens [sqrt8, sqrt2]: sqrt8 - 2 sqrt2 = 0
    want = (MPoly.var(0, n) - MPoly.var(1, n) * 2).primitive()
    assert want.terms in rels
    # sqrt2, sqrt3: no linear relation certifies
    f2 = merge_fields(ctx.sqrt(2).field, ctx.sqrt(3).field, ctx)
    rels2 = algebraic_linear_relations(f2, 128, ctx)
    assert rels2 == []
    # i and -i adjoined as separate generators: X1 + X2
    from exactcalc.algebraic import AlgebraicNumber, isolated_roots
    roots = isolated_roots((1, 0, 1))
    exts = [ctx.intern_extension(Extension(alg=AlgebraicNumber((1, 0, 1), k, roots[k])))
            for k in range(2)]
    f3 = field_for(ctx, exts)
    rels3 = {p.primitive().terms for p in algebraic_linear_relations(f3, 128, ctx)}
    want3 = (MPoly.var(0, f3.nvars) + MPoly.var(1, f3.nvars)).primitive()
    assert want3.terms in rels3


def test_merge_fields_examples(ctx):
    f_s2 = ctx.sqrt(2).field
    f_pi = ctx.pi().field
    merged = merge_fields(f_s2, f_pi, ctx)
    assert [g.describe() for g in merged.gens] == ["Pi", "algebraic deg 2"]
    assert merge_fields(f_s2, f_s2, ctx) is f_s2
    again = merge_fields(f_pi, f_s2, ctx)
    assert again is merged


def test_ext_enclosure_examples(ctx):
    pi_ext = ctx.pi().field.gens[0]
    ball = pi_ext.enclosure(64, ctx)
    assert ball.re.contains_fraction(Fraction(
        3141592653589793238462643383279502884, 10**36))
    big = ctx.exp(ctx.pi() * ctx.sqrt(163))
    e = big.enclosure_raw(192)
    target = 262537412640768744
    assert e.re.upper() - target < Fraction(-1, 10**13) + 1
    diff_hi = e.re.upper() - target
    diff_lo = e.re.lower() - target
    assert Fraction(-1, 10**12) < diff_lo and diff_hi < Fraction(-1, 10**13)


def test_relation_soundness_numeric(ctx):
    # every certified generator of every ideal must vanish numerically
    exprs = [
        merge_fields(merge_fields(ctx.log(ctx.rational(2)).field,
                                  ctx.log(ctx.rational(3)).field, ctx),
                     ctx.log(ctx.rational(6)).field, ctx),
        merge_fields(ctx.sqrt(8).field, ctx.sqrt(2).field, ctx),
        merge_fields(merge_fields(ctx.log(ctx.rational(-1)).field,
                                  ctx.pi().field, ctx), ctx.i().field, ctx),
    ]
    for field in exprs:
        build_reduction_ideal(field, 128, ctx)
        for rel in field.ideal:
            ball = number._poly_ball(rel, field, 256, ctx)
            assert not separated_from_zero(ball)


def test_reentrancy_guard(ctx):
    field = merge_fields(ctx.log(ctx.rational(2)).field,
                         ctx.log(ctx.rational(3)).field, ctx)
    field.building = True
    ideal, complete = build_reduction_ideal(field, 128, ctx)
    assert ideal == [] and not complete
    field.building = False

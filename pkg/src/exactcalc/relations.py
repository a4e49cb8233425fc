"""Discovery and certification of algebraic relations among generators.

Candidates come from LLL integer-relation searches on enclosures of the
generators (or their logarithms); every candidate is certified by exact
recursive computation before it is admitted to a field's reduction ideal.
Uncertifiable candidates are simply dropped.
"""

from fractions import Fraction

from .algebraic import qqbar_add, qqbar_mul, qqbar_pow_int, qqbar_div
from .ball import (
    ComplexBall, RealBall, cb_add, cb_div, cb_log, cb_mul, cb_pi,
)
from .intpoly import UnsupportedDegreeError
from .lattice import find_integer_relations
from .mpoly import MPoly
from .truth import Truth


def _two_pi_i(prec):
    pi = cb_pi(prec)
    return ComplexBall(RealBall.from_int(0),
                       cb_mul(pi, ComplexBall.from_int(2), prec).re)


def _contains_unique_integer(ball):
    """The single integer inside a complex enclosure, or None.

    Integers are real, so the imaginary part must contain 0 and the real
    interval must trap exactly one integer.
    """
    import math
    if ball.is_indeterminate:
        return None
    if not ball.im.contains_zero():
        return None
    lo, hi = ball.re.lower(), ball.re.upper()
    k = math.floor(hi)
    if k < lo or k - 1 >= lo:
        return None
    return k


def log_linear_relations(field, w, ctx):
    """Integer relations m0*(2 pi i) + sum m_j log(z_j) = 0 among the
    logarithm generators; the 2 pi i slot is used only when pi and i are
    both generators of the field."""
    from .number import _is_imaginary_unit
    logs = [(k, g) for k, g in enumerate(field.gens) if g.head == "Log"]
    if not logs:
        return []
    pi_idx = i_idx = None
    for k, g in enumerate(field.gens):
        if g.head == "Pi":
            pi_idx = k
        elif _is_imaginary_unit(g):
            i_idx = k
    have_2pii = pi_idx is not None and i_idx is not None
    wl = min(w, ctx.options.lll_prec)
    prec = 2 * wl + 32
    values = []
    if have_2pii:
        values.append(_two_pi_i(prec))
    for _, g in logs:
        values.append(g.enclosure(prec, ctx))
    cands = find_integer_relations(values, wl, ctx.options.lll_coeff_bound)
    rels = []
    n = field.nvars
    for cand in cands:
        coeffs = list(cand.coefficients)
        if have_2pii:
            m0, ms = coeffs[0], coeffs[1:]
        else:
            m0, ms = 0, coeffs
        if not any(ms):
            continue
        key = ("log", cand.coefficients, wl)
        if key in field.tried_candidates:
            continue
        field.tried_candidates.add(key)
        k_int = _certify_log_relation(field, logs, ms, have_2pii, prec, ctx)
        if k_int is None:
            continue
        if k_int != 0 and not have_2pii:
            continue
        poly = MPoly.zero(n, field.order)
        for (var, _), m in zip(logs, ms):
            if m:
                poly = poly + MPoly.var(var, n, field.order).scale(m)
        if k_int:
            tpii = (MPoly.var(pi_idx, n, field.order)
                    * MPoly.var(i_idx, n, field.order)).scale(-2 * k_int)
            poly = poly + tpii
        if not poly.is_zero():
            rels.append(poly)
    return rels


def _certify_log_relation(field, logs, ms, have_2pii, prec, ctx):
    """Certify sum m_j log(z_j) = 2 pi i k: the enclosure of the quotient
    must pin a unique integer and prod z_j**m_j = 1 must prove exactly.
    Returns k, or None if certification fails."""
    from . import number
    acc = None
    for (_, g), m in zip(logs, ms):
        if not m:
            continue
        t = cb_mul(g.enclosure(prec, ctx), ComplexBall.from_int(m), prec)
        acc = t if acc is None else cb_add(acc, t, prec)
    quot = cb_div(acc, _two_pi_i(prec), prec)
    k = _contains_unique_integer(quot)
    if k is None:
        return None
    prod = None
    for (_, g), m in zip(logs, ms):
        if not m:
            continue
        factor = number.pow_int(g.args[0], m)
        if not factor.is_number():
            return None
        prod = factor if prod is None else number.mul(prod, factor)
        if not prod.is_number():
            return None
    one = number.from_rational(ctx, 1)
    if number.equal(prod, one) is not Truth.TRUE:
        return None
    return k


def multiplicative_relations(field, w, ctx):
    """Monomial relations prod a_j**m_j = 1 among radical, power,
    exponential and algebraic generators, plus rational-ratio relations
    between pairs of algebraic generators."""
    from . import number
    members = []
    for k, g in enumerate(field.gens):
        if g.is_algebraic() or g.head in ("Sqrt", "Exp", "Pow"):
            members.append((k, g))
    rels = []
    n = field.nvars
    if len(members) >= 2:
        wl = min(w, ctx.options.lll_prec)
        prec = 2 * wl + 32
        values = [_two_pi_i(prec)]
        usable = []
        for k, g in members:
            e = g.enclosure(prec, ctx)
            if e.is_indeterminate or e.contains_zero():
                continue
            lg = cb_log(e, prec)
            if lg.is_indeterminate:
                continue
            usable.append((k, g))
            values.append(lg)
        cands = find_integer_relations(values, wl, ctx.options.lll_coeff_bound)
        for cand in cands:
            ms = list(cand.coefficients[1:])
            if not any(ms):
                continue
            key = ("mult", cand.coefficients, wl)
            if key in field.tried_candidates:
                continue
            field.tried_candidates.add(key)
            # numeric prefilter: the log combination must sit on 2 pi i Z
            acc = None
            for (_, g), m in zip(usable, ms):
                if not m:
                    continue
                t = cb_mul(cb_log(g.enclosure(prec, ctx), prec),
                           ComplexBall.from_int(m), prec)
                acc = t if acc is None else cb_add(acc, t, prec)
            quot = cb_div(acc, _two_pi_i(prec), prec)
            if _contains_unique_integer(quot) is None:
                continue
            if _certify_multiplicative(usable, ms, prec, ctx):
                pos = MPoly.constant(1, n, field.order)
                neg_ = MPoly.constant(1, n, field.order)
                for (var, _), m in zip(usable, ms):
                    if m > 0:
                        pos = pos * MPoly.var(var, n, field.order) ** m
                    elif m < 0:
                        neg_ = neg_ * MPoly.var(var, n, field.order) ** (-m)
                rels.append(pos - neg_)
    # pairwise rational ratios among algebraic generators
    algs = [(k, g) for k, g in members if g.is_algebraic()]
    lim = ctx.options.qqbar_degree_limit
    for a in range(len(algs)):
        for b in range(a + 1, len(algs)):
            ka, ga = algs[a]
            kb, gb = algs[b]
            key = ("ratio", ka, kb)
            if key in field.tried_candidates:
                continue
            field.tried_candidates.add(key)
            try:
                ratio = qqbar_div(ga.alg, gb.alg, lim)
            except (UnsupportedDegreeError, ArithmeticError, ZeroDivisionError):
                continue
            if ratio.is_rational():
                q = ratio.to_rational()
                rels.append(MPoly.var(ka, n, field.order)
                            - MPoly.var(kb, n, field.order).scale(q))
    return rels


def _certify_multiplicative(members, ms, prec, ctx):
    """Prove prod a_j**m_j = 1 by splitting into an exact algebraic part A
    and an exponent sum S with exp(S)*A = 1 iff S - log(1/A) in 2 pi i Z."""
    from . import number
    from .algebraic import AlgebraicNumber
    lim = ctx.options.qqbar_degree_limit
    alg_part = AlgebraicNumber.from_rational(1)
    s_part = None  # ExactNumber

    def s_add(term):
        nonlocal s_part
        s_part = term if s_part is None else number.add(s_part, term)

    try:
        for (_, g), m in zip(members, ms):
            if not m:
                continue
            if g.is_algebraic():
                alg_part = qqbar_mul(alg_part, qqbar_pow_int(g.alg, m, lim), lim)
            elif g.head == "Exp":
                z = g.args[0]
                s_add(number.mul(number.from_rational(ctx, m), z))
            elif g.head == "Sqrt":
                z = g.args[0]
                lg = ctx.log(z)
                if not lg.is_number():
                    return False
                s_add(number.mul(number.from_rational(ctx, Fraction(m, 2)), lg))
            elif g.head == "Pow":
                base, expo = g.args
                lg = ctx.log(base)
                if not lg.is_number():
                    return False
                s_add(number.mul(number.mul(number.from_rational(ctx, m), expo), lg))
            else:
                return False
    except (UnsupportedDegreeError, ArithmeticError, ZeroDivisionError):
        return False
    if s_part is None:
        return alg_part.is_rational() and alg_part.to_rational() == 1
    if not s_part.is_number():
        return False
    # need exp(S) = 1/A: S - log(1/A) must be an exact multiple of 2 pi i
    try:
        inv_a = number.from_algebraic(ctx, qqbar_pow_int(alg_part, -1, lim)) \
            if not (alg_part.is_rational() and alg_part.to_rational() == 1) \
            else number.from_rational(ctx, 1)
    except (UnsupportedDegreeError, ArithmeticError, ZeroDivisionError):
        return False
    d = s_part
    if not (inv_a.is_one()):
        lg_inv = ctx.log(inv_a)
        if not lg_inv.is_number():
            return False
        d = number.sub(s_part, lg_inv)
    ball = cb_div(d.enclosure_raw(prec), _two_pi_i(prec), prec)
    k = _contains_unique_integer(ball)
    if k is None:
        return False
    shift = number.mul(number.mul(number.from_rational(ctx, 2 * k),
                                  ctx.pi()), ctx.i()) if k else None
    resid = number.sub(d, shift) if shift is not None else d
    return number.is_zero(resid) is Truth.TRUE


def algebraic_linear_relations(field, w, ctx):
    """Linear relations c0 + sum c_j a_j = 0 among algebraic generators,
    found by LLL on enclosures and certified in the algebraic closure."""
    from .algebraic import AlgebraicNumber
    algs = [(k, g) for k, g in enumerate(field.gens) if g.is_algebraic()]
    if len(algs) < 2:
        return []
    wl = min(w, ctx.options.lll_prec)
    prec = 2 * wl + 32
    values = [ComplexBall.from_int(1)]
    values += [g.enclosure(prec, ctx) for _, g in algs]
    cands = find_integer_relations(values, wl, ctx.options.lll_coeff_bound)
    rels = []
    n = field.nvars
    lim = ctx.options.qqbar_degree_limit
    for cand in cands:
        c0 = cand.coefficients[0]
        cs = list(cand.coefficients[1:])
        if not any(cs):
            continue
        key = ("lin", cand.coefficients, wl)
        if key in field.tried_candidates:
            continue
        field.tried_candidates.add(key)
        # numeric prefilter before any exact algebraic work
        ball = ComplexBall.from_int(c0)
        for (_, g), c in zip(algs, cs):
            if c:
                ball = cb_add(ball, cb_mul(g.enclosure(prec, ctx),
                                           ComplexBall.from_int(c), prec), prec)
        if not ball.contains_zero():
            continue
        try:
            acc = AlgebraicNumber.from_rational(c0)
            for (_, g), c in zip(algs, cs):
                if c:
                    acc = qqbar_add(acc, qqbar_mul(
                        g.alg, AlgebraicNumber.from_rational(c), lim), lim)
        except (UnsupportedDegreeError, ArithmeticError):
            continue
        if not acc.is_zero():
            continue
        poly = MPoly.constant(c0, n, field.order)
        for (var, _), c in zip(algs, cs):
            if c:
                poly = poly + MPoly.var(var, n, field.order).scale(c)
        rels.append(poly)
    return rels

"""Extension numbers and fields Q(a_1,...,a_n).

An Extension is either a canonical algebraic number or a symbolic
function value (Pi, Exp, Log, Sqrt, Pow applied to exact numbers).  A
Field is an ordered list of extensions (descending complexity, for
lexicographic elimination) plus a certified reduction ideal, a cached
Groebner basis, and a completeness flag.  Both are hash-consed in the
owning Context, so structurally identical objects share one handle.
"""

from fractions import Fraction

from .ball import cb_exp, cb_log, cb_pi, cb_pow, cb_sqrt
from .mpoly import (
    LEX, GroebnerLimits, MPoly, buchberger, normal_form,
)

HEAD_RANK = {"Pi": 1, "Sqrt": 2, "Exp": 3, "Log": 4, "Pow": 5}


class Extension:
    """A symbol a_k adjoined to Q: algebraic constant or function value."""

    __slots__ = ("head", "args", "alg", "depth", "_key", "_encl", "_encl_prec")

    def __init__(self, head=None, args=(), alg=None):
        self.head = head
        self.args = tuple(args)
        self.alg = alg
        if alg is not None:
            self.depth = 0
        else:
            d = 0
            for a in self.args:
                for ext in a.field_extensions():
                    d = max(d, ext.depth)
            self.depth = d + 1
        self._key = None
        self._encl = None
        self._encl_prec = 0

    def is_algebraic(self):
        return self.alg is not None

    def intern_key(self):
        if self.alg is not None:
            return ("alg", self.alg.minpoly, self.alg.root_index)
        return (self.head,) + tuple(a.structural_key() for a in self.args)

    def complexity_key(self):
        """Total-order key: symbolic above algebraic, f(z) above z."""
        if self._key is None:
            if self.alg is not None:
                coeff_bits = sum(abs(c).bit_length() for c in self.alg.minpoly)
                self._key = (0, self.alg.degree(), coeff_bits,
                             self.alg.minpoly, self.alg.root_index)
            else:
                self._key = (1, self.depth, HEAD_RANK[self.head],
                             tuple(a.structural_key() for a in self.args))
        return self._key

    def enclosure(self, prec, ctx):
        """Refining cached enclosure of the extension's value."""
        if self._encl is not None and self._encl_prec >= prec:
            return self._encl
        if self.alg is not None:
            ball = self.alg.enclosure(prec)
        elif self.head == "Pi":
            ball = cb_pi(prec)
        elif self.head == "Exp":
            ball = cb_exp(self.args[0].enclosure_raw(prec + 8, ctx), prec)
        elif self.head == "Log":
            ball = cb_log(self.args[0].enclosure_raw(prec + 8, ctx), prec)
        elif self.head == "Sqrt":
            ball = cb_sqrt(self.args[0].enclosure_raw(prec + 8, ctx), prec)
        elif self.head == "Pow":
            ball = cb_pow(self.args[0].enclosure_raw(prec + 8, ctx),
                          self.args[1].enclosure_raw(prec + 8, ctx), prec)
        else:
            raise ValueError("unknown extension head %r" % (self.head,))
        if not ball.is_indeterminate:
            self._encl = ball
            self._encl_prec = prec
        return ball

    def describe(self):
        if self.alg is not None:
            return "algebraic deg %d" % self.alg.degree()
        return self.head

    def __repr__(self):
        return "Extension(%s)" % (self.describe(),)


def ext_complexity_cmp(a, b):
    """-1/0/1 comparison of extension complexity (total order)."""
    ka, kb = a.complexity_key(), b.complexity_key()
    return (ka > kb) - (ka < kb)


class Field:
    """Q(a_1,...,a_n) with its reduction ideal and cached Groebner basis."""

    __slots__ = ("gens", "order", "ideal", "groebner", "gb_truncated",
                 "complete", "var_index", "relations_done_w", "_rel_keys",
                 "building", "direct_done", "tried_candidates")

    def __init__(self, gens):
        self.gens = tuple(gens)
        self.order = LEX
        self.ideal = []
        self.groebner = None
        self.gb_truncated = False
        self.complete = False
        self.var_index = {id(g): i for i, g in enumerate(self.gens)}
        self.relations_done_w = 0
        self._rel_keys = set()
        self.building = False
        self.direct_done = False
        self.tried_candidates = set()

    @property
    def nvars(self):
        return len(self.gens)

    def index_of(self, ext):
        return self.var_index.get(id(ext))

    def reduction_basis(self, ctx):
        if ctx.options.use_groebner and self.groebner is not None:
            return self.groebner
        return self.ideal

    def add_relations(self, rels, ctx):
        """Append certified relations (deduplicated); refresh the basis."""
        fresh = []
        for r in rels:
            if r.is_zero():
                continue
            r = r.primitive()
            if r.terms in self._rel_keys:
                continue
            self._rel_keys.add(r.terms)
            fresh.append(r)
        if not fresh:
            return False
        self.ideal.extend(fresh)
        self.refresh_groebner(ctx)
        return True

    def refresh_groebner(self, ctx):
        if not ctx.options.use_groebner or not self.ideal:
            self.groebner = None
            return
        limits = GroebnerLimits(degree_limit=ctx.options.gb_degree_limit,
                                term_limit=ctx.options.gb_term_limit,
                                pair_limit=ctx.options.gb_pair_limit)
        basis, truncated = buchberger(self.ideal, limits=limits)
        self.gb_truncated = truncated
        self.groebner = None if truncated else basis
        if truncated:
            self.complete = False

    def all_algebraic(self):
        return all(g.is_algebraic() for g in self.gens)

    def __repr__(self):
        return "Field(%s)" % (", ".join(g.describe() for g in self.gens),)


def field_for(ctx, exts):
    """Interned field on the deduplicated extensions, sorted by descending
    complexity; direct relations and the completeness flag are installed."""
    uniq = {}
    for e in exts:
        uniq[id(e)] = e
    gens = sorted(uniq.values(), key=lambda e: e.complexity_key(), reverse=True)
    key = tuple(id(g) for g in gens)
    cached = ctx.field_cache.get(key)
    if cached is not None:
        return cached
    field = Field(gens)
    ctx.field_cache[key] = field
    _install_direct_relations(field, ctx)
    _mark_completeness(field, ctx)
    if not field.complete and field.nvars:
        n_alg = sum(1 for g in field.gens if g.is_algebraic())
        if n_alg >= 2 or n_alg < field.nvars:
            # discover relations up front so arithmetic reduces immediately
            build_reduction_ideal(field, ctx.options.prec_min, ctx)
    return field


def merge_fields(k1, k2, ctx):
    """Union of generators, interned."""
    if k1 is k2:
        return k1
    return field_for(ctx, k1.gens + k2.gens)


def _mark_completeness(field, ctx):
    """Conservative whitelist: fields certified to have the full ideal."""
    if field.nvars == 0:
        field.complete = True
        return
    if field.nvars != 1:
        return
    g = field.gens[0]
    if g.is_algebraic():
        field.complete = True
        return
    if g.head == "Pi":
        field.complete = True
    elif g.head == "Exp":
        z = g.args[0]
        if z.is_algebraic_storage() and z.is_nonzero_algebraic():
            field.complete = True  # Lindemann-Weierstrass
    elif g.head == "Log":
        z = g.args[0]
        if z.is_algebraic_storage() and z.is_nonzero_algebraic() and not z.is_one():
            field.complete = True


def _install_direct_relations(field, ctx):
    """Defining relations of algebraic and radical generators."""
    if field.direct_done:
        return
    field.direct_done = True
    rels = []
    n = field.nvars
    for k, g in enumerate(field.gens):
        if g.is_algebraic():
            rels.append(MPoly.from_univariate(list(g.alg.minpoly), n, k, field.order))
        elif g.head == "Sqrt":
            fr = _embed_arg(g.args[0], field)
            if fr is not None:
                f, hden = fr
                xk2 = MPoly.var(k, n, field.order) ** 2
                rels.append(hden * xk2 - f)
        elif g.head == "Pow":
            expo = g.args[1]
            if expo.is_rational_storage():
                q = expo.rational_value()
                fr = _embed_arg(g.args[0], field)
                if fr is not None:
                    f, hden = fr
                    m, nn = q.numerator, q.denominator
                    xkn = MPoly.var(k, n, field.order) ** nn
                    if m >= 0:
                        rels.append(hden ** m * xkn - f ** m)
                    else:
                        rels.append(f ** (-m) * xkn - hden ** (-m))
    if ctx.options.use_vieta:
        rels.extend(conjugate_root_relations(field))
    field.add_relations(rels, ctx)


def _embed_arg(z, field):
    """Express a number's fraction in the field's variables, or None if
    some of its generators are absent from the field."""
    num, den = z.fraction_parts()
    mapping = {}
    for ext in z.field_extensions():
        idx = field.index_of(ext)
        if idx is None:
            return None
        mapping[id(ext)] = idx
    src_exts = z.field_extensions()
    remap = [mapping[id(e)] for e in src_exts]
    n = field.nvars
    if not src_exts:
        return (MPoly.constant(num.constant_value(), n, field.order),
                MPoly.constant(den.constant_value(), n, field.order))
    return (num.map_vars(remap, n, field.order),
            den.map_vars(remap, n, field.order))


def conjugate_root_relations(field):
    """Elementary-symmetric-function relations among generators that form a
    complete set of conjugate roots of one irreducible polynomial."""
    groups = {}
    for k, g in enumerate(field.gens):
        if g.is_algebraic():
            groups.setdefault(g.alg.minpoly, []).append((g.alg.root_index, k))
    rels = []
    n = field.nvars
    for minpoly, members in groups.items():
        d = len(minpoly) - 1
        if d < 2 or len(members) != d:
            continue
        if {idx for idx, _ in members} != set(range(d)):
            continue
        vars_ = [MPoly.var(k, n, field.order) for _, k in members]
        # e_j = elementary symmetric polynomials in the member variables
        elem = [MPoly.constant(1, n, field.order)]
        for v in vars_:
            elem = _sym_step(elem, v)
        lc = Fraction(minpoly[d])
        for j in range(1, d + 1):
            target = Fraction((-1) ** j) * Fraction(minpoly[d - j]) / lc
            rels.append(elem[j] - MPoly.constant(target, n, field.order))
    return rels


def _sym_step(elem, v):
    """Update elementary symmetric polynomials when adjoining variable v."""
    out = [elem[0]]
    for j in range(1, len(elem)):
        out.append(elem[j] + elem[j - 1] * v)
    out.append(elem[-1] * v)
    return out


def build_reduction_ideal(field, w, ctx):
    """Run the relation-discovery pipeline at work strength w.

    Direct and conjugate-root relations are installed at field creation;
    this adds the LLL-driven searches.  Reentrant calls return immediately
    (certification may recurse through smaller fields).
    """
    if field.building:
        return field.ideal, field.complete
    _install_direct_relations(field, ctx)
    # the searches run at precision min(w, lll_prec); beyond that cap a
    # higher w cannot produce new candidates
    effective = min(w, ctx.options.lll_prec)
    if effective > field.relations_done_w and field.nvars:
        field.building = True
        try:
            from . import relations
            rels = []
            rels.extend(relations.log_linear_relations(field, w, ctx))
            rels.extend(relations.multiplicative_relations(field, w, ctx))
            rels.extend(relations.algebraic_linear_relations(field, w, ctx))
            field.add_relations(rels, ctx)
            field.relations_done_w = effective
        finally:
            field.building = False
    return field.ideal, field.complete


def reduce_by_ideal(field, poly, ctx):
    """Normal form of poly modulo the field's basis.

    Returns the input object unchanged when no leading monomial applies,
    so callers can cheaply detect that nothing was reduced.
    """
    basis = field.reduction_basis(ctx)
    if not basis:
        return poly
    leads = [g.lead()[0] for g in basis if not g.is_zero()]
    for e, _ in poly.terms:
        if any(all(a <= b for a, b in zip(le, e)) for le in leads):
            r = normal_form(poly, basis)
            return poly if r == poly else r
    return poly

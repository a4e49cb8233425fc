"""Context objects: interning caches, work limits, and number construction.

A Context owns every Extension and Field created through it (hash-consed
caches), plus the configuration of the decision procedures.  A context
and all values bound to it must be used from one thread at a time;
independent contexts are fully isolated.
"""

from fractions import Fraction


class ContextOptions:
    """Work limits and feature switches for a context."""

    __slots__ = ("prec_min", "prec_max", "lll_prec", "lll_coeff_bound",
                 "qqbar_degree_limit", "use_groebner", "use_vieta",
                 "pow_expand_limit", "gb_degree_limit", "gb_term_limit",
                 "gb_pair_limit")

    def __init__(self, prec_min=64, prec_max=4096, lll_prec=256,
                 lll_coeff_bound=2**20, qqbar_degree_limit=24,
                 use_groebner=True, use_vieta=True, pow_expand_limit=20,
                 gb_degree_limit=64, gb_term_limit=50000, gb_pair_limit=5000):
        if not (0 < prec_min <= prec_max):
            raise ValueError("need 0 < prec_min <= prec_max")
        for name, v in (("lll_prec", lll_prec),
                        ("lll_coeff_bound", lll_coeff_bound),
                        ("qqbar_degree_limit", qqbar_degree_limit),
                        ("pow_expand_limit", pow_expand_limit)):
            if v <= 0:
                raise ValueError("%s must be positive" % name)
        self.prec_min = prec_min
        self.prec_max = prec_max
        self.lll_prec = lll_prec
        self.lll_coeff_bound = lll_coeff_bound
        self.qqbar_degree_limit = qqbar_degree_limit
        self.use_groebner = use_groebner
        self.use_vieta = use_vieta
        self.pow_expand_limit = pow_expand_limit
        self.gb_degree_limit = gb_degree_limit
        self.gb_term_limit = gb_term_limit
        self.gb_pair_limit = gb_pair_limit


class Context:
    """Parent object for a lazily expanding subset of the complex numbers."""

    def __init__(self, options=None, **kwargs):
        if options is None:
            options = ContextOptions(**kwargs)
        elif kwargs:
            raise TypeError("pass either an options object or keyword options")
        self.options = options
        self.ext_cache = {}
        self.field_cache = {}
        self.value_cache = {}
        from .extfield import field_for
        self.field_q = field_for(self, ())

    # -- interning -----------------------------------------------------------

    def intern_extension(self, ext):
        key = ext.intern_key()
        got = self.ext_cache.get(key)
        if got is not None:
            return got
        self.ext_cache[key] = ext
        return ext

    def cache_sizes(self):
        return len(self.ext_cache), len(self.field_cache)

    # -- number constructors --------------------------------------------------

    def rational(self, q):
        from . import number
        return number.from_rational(self, Fraction(q))

    def integer(self, n):
        return self.rational(Fraction(n))

    def from_qqbar(self, alg):
        from . import number
        return number.from_algebraic(self, alg)

    def pi(self):
        from . import number
        return number.construct_pi(self)

    def i(self):
        from . import number
        return number.construct_i(self)

    def sqrt(self, x):
        from . import number
        return number.construct_sqrt(self, self._coerce(x))

    def exp(self, x):
        from . import number
        return number.construct_exp(self, self._coerce(x))

    def log(self, x):
        from . import number
        return number.construct_log(self, self._coerce(x))

    def pow(self, x, y):
        from . import number
        return number.construct_pow(self, self._coerce(x), self._coerce(y))

    def unknown(self):
        from . import number
        return number.special_unknown(self)

    def unsigned_infinity(self):
        from . import number
        return number.special_uinf(self)

    def undefined(self):
        from . import number
        return number.special_undefined(self)

    def _coerce(self, x):
        from .number import ExactNumber
        if isinstance(x, ExactNumber):
            if x.ctx is not self:
                raise ValueError("value belongs to a different context")
            return x
        if isinstance(x, (int, Fraction)):
            return self.rational(Fraction(x))
        raise TypeError("cannot coerce %r to an exact number" % (x,))

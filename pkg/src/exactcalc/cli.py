"""exactcalc command-line interface.

Subcommands: eval, is-zero, equal, cmp, dft.  Exit codes: 0 for decided
results, 2 for Unknown, 1 for errors.  EXACTCALC_PREC_LIMIT in the
environment overrides --prec-limit.
"""

import argparse
import json
import os
import re
import sys
import time

# let bare negative literals like "-1e-13" be positional expressions
_NEG_NUMBER = re.compile(r"^-\d+(\.\d*)?([eE][-+]?\d+)?$")

from .context import Context, ContextOptions
from .parser import ParseError, evaluate, parse
from .truth import Truth


def _add_common(p):
    p.add_argument("--prec-limit", type=int, default=4096,
                   help="maximum working precision in bits (default 4096)")
    p.add_argument("--lll-prec", type=int, default=256,
                   help="precision for integer-relation searches (default 256)")
    p.add_argument("--no-groebner", action="store_true",
                   help="disable Groebner-basis reduction")
    p.add_argument("--no-vieta", action="store_true",
                   help="disable conjugate-root relations")
    p.add_argument("--degree-limit", type=int, default=24,
                   help="degree limit for algebraic arithmetic (default 24)")
    p.add_argument("--pow-expand-limit", type=int, default=20,
                   help="largest N for in-field expansion of (x+y)^N (default 20)")
    p.add_argument("--output", choices=("human", "machine"), default="human")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="exactcalc",
        description="Exact real and complex arithmetic with decidable predicates.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression exactly")
    p.add_argument("expr")
    _add_common(p)

    q = sub.add_parser("is-zero", help="decide whether an expression is zero")
    q.add_argument("expr")
    _add_common(q)

    r = sub.add_parser("equal", help="decide equality of two expressions")
    r.add_argument("expr")
    r.add_argument("expr2")
    _add_common(r)

    s = sub.add_parser("cmp", help="order two provably real expressions")
    s.add_argument("expr")
    s.add_argument("expr2")
    _add_common(s)

    t = sub.add_parser("dft", help="exact DFT round-trip check")
    t.add_argument("--n", type=int, required=True, help="transform length (>= 1)")
    t.add_argument("--sequence", required=True,
                   choices=("n", "sqrt_n", "log_n", "exp_2pii_n",
                            "inv_1_plus_n_pi", "inv_1_plus_sqrtn_pi"))
    _add_common(t)
    for parser in (ap, p, q, r, s, t):
        parser._negative_number_matcher = _NEG_NUMBER
    return ap


def _context_from(args):
    prec_limit = args.prec_limit
    env = os.environ.get("EXACTCALC_PREC_LIMIT")
    if env:
        prec_limit = int(env)
    opts = ContextOptions(
        prec_min=min(64, prec_limit),
        prec_max=prec_limit,
        lll_prec=args.lll_prec,
        use_groebner=not args.no_groebner,
        use_vieta=not args.no_vieta,
        qqbar_degree_limit=args.degree_limit,
        pow_expand_limit=args.pow_expand_limit,
    )
    return Context(opts)


def _emit(args, value=None, truth=None, text=None):
    from . import number
    if args.output == "machine":
        if value is not None:
            payload = number.to_machine(value)
        else:
            payload = {"decimal": None, "field_generators": None,
                       "numerator": None, "denominator": None}
        payload["truth"] = truth.value if truth is not None else None
        if text is not None and truth is None and value is None:
            payload["result"] = text
        print(json.dumps(payload))
    else:
        if text is not None:
            print(text)
        elif truth is not None:
            print(truth.value)
        else:
            print(number.repr_text(value))


def _truth_exit(t):
    return 2 if t is Truth.UNKNOWN else 0


def _sequence_value(ctx, name, k):
    if name == "n":
        return ctx.rational(k)
    if name == "sqrt_n":
        return ctx.sqrt(k)
    if name == "log_n":
        return ctx.log(k)
    if name == "exp_2pii_n":
        return ctx.exp(ctx.rational(2) * ctx.pi() * ctx.i() / ctx.rational(k))
    if name == "inv_1_plus_n_pi":
        return ctx.rational(1) / (ctx.rational(1) + ctx.rational(k) * ctx.pi())
    return ctx.rational(1) / (ctx.rational(1) + ctx.sqrt(k) * ctx.pi())


def dft_roundtrip(n, sequence, ctx):
    """Round-trip x - IDFT(DFT(x)) in exact arithmetic.

    Entries use the formula at indices 2..n+1 (so log and division
    sequences avoid their singularities).  Returns (truths, seconds).
    """
    from . import number
    if n < 1:
        raise ValueError("transform length must be at least 1")
    t0 = time.time()
    xs = [_sequence_value(ctx, sequence, k + 2) for k in range(n)]
    omega = ctx.exp(ctx.rational(2) * ctx.pi() * ctx.i() / ctx.rational(n))
    inv_n = ctx.rational(1) / ctx.rational(n)
    # forward: X_k = sum_m omega^(-km) x_m ; inverse with +km and 1/n
    pow_cache = {}

    def wpow(e):
        e %= n
        got = pow_cache.get(e)
        if got is None:
            got = number.pow_int(omega, e)
            pow_cache[e] = got
        return got

    forward = []
    for k in range(n):
        acc = ctx.rational(0)
        for m in range(n):
            acc = number.add(acc, number.mul(wpow(-k * m), xs[m]))
        forward.append(acc)
    truths = []
    for m in range(n):
        acc = ctx.rational(0)
        for k in range(n):
            acc = number.add(acc, number.mul(wpow(k * m), forward[k]))
        back = number.mul(inv_n, acc)
        truths.append(number.is_zero(number.sub(xs[m], back)))
    return truths, time.time() - t0


def main(argv=None):
    from . import number
    args = build_parser().parse_args(argv)
    try:
        ctx = _context_from(args)
        if args.command == "dft":
            truths, seconds = dft_roundtrip(args.n, args.sequence, ctx)
            ok = all(t is Truth.TRUE for t in truths)
            if args.output == "machine":
                print(json.dumps({
                    "n": args.n, "sequence": args.sequence,
                    "components": [t.value for t in truths],
                    "seconds": round(seconds, 6),
                    "all_zero": ok,
                }))
            else:
                for idx, t in enumerate(truths):
                    print("component %d: %s" % (idx, t.value))
                print("dft roundtrip n=%d sequence=%s: %s in %.3fs"
                      % (args.n, args.sequence,
                         "all zero" if ok else "FAILED", seconds))
                if not ok:
                    bad = [i for i, t in enumerate(truths) if t is not Truth.TRUE]
                    print("undecided/failed components: %s" % bad)
            return 0 if ok else 2

        exprs = [parse(args.expr)]
        if args.command in ("equal", "cmp"):
            exprs.append(parse(args.expr2))
        values = [evaluate(e, ctx) for e in exprs]

        if args.command == "eval":
            _emit(args, value=values[0])
            return 0
        if args.command == "is-zero":
            t = number.is_zero(values[0])
            _emit(args, truth=t)
            return _truth_exit(t)
        if args.command == "equal":
            t = number.equal(values[0], values[1])
            _emit(args, truth=t)
            return _truth_exit(t)
        # cmp
        r = number.cmp_real(values[0], values[1])
        if args.output == "machine":
            print(json.dumps({"decimal": None, "field_generators": None,
                              "numerator": None, "denominator": None,
                              "truth": None, "result": r if r != "unknown" else "Unknown"}))
        else:
            print(r if r != "unknown" else "Unknown")
        return 2 if r == "unknown" else 0
    except ParseError as e:
        print("syntax error: %s" % e, file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, ArithmeticError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

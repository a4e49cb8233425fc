"""Expression parser for the command-line front end.

Grammar (precedence climbing):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom (('^' | '**') unary)?          # right-associative
    atom   := NUMBER | 'pi' | 'i'
            | ('sqrt' | 'exp' | 'log') '(' expr ')'
            | 'pow' '(' expr ',' expr ')'
            | '(' expr ')'

Number literals are exact: integers, fractions via '/', and decimal or
scientific literals (parsed as exact decimal rationals).
"""

from fractions import Fraction
import re


class ParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class IntLiteral:
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = int(value)

    def __eq__(self, other):
        return isinstance(other, IntLiteral) and self.value == other.value


class RationalLiteral:
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalLiteral) and self.value == other.value


class Symbol:
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Symbol) and self.name == other.name


class UnaryOp:
    __slots__ = ("op", "operand")

    def __init__(self, op, operand):
        self.op = op
        self.operand = operand

    def __eq__(self, other):
        return (isinstance(other, UnaryOp) and self.op == other.op
                and self.operand == other.operand)


class BinOp:
    __slots__ = ("op", "left", "right")

    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right

    def __eq__(self, other):
        return (isinstance(other, BinOp) and self.op == other.op
                and self.left == other.left and self.right == other.right)


class Call:
    __slots__ = ("head", "args")

    def __init__(self, head, args):
        self.head = head
        self.args = list(args)

    def __eq__(self, other):
        return (isinstance(other, Call) and self.head == other.head
                and self.args == other.args)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>\*\*|[-+*/^(),])
""", re.VERBOSE)

_FUNCTIONS = {"sqrt": 1, "exp": 1, "log": 1, "pow": 2}
_CONSTANTS = {"pi", "i"}
_REJECTED = {"sin", "cos", "tan", "atan", "asin", "acos", "erf", "erfc",
             "gamma", "sinh", "cosh", "tanh"}


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _literal(text, pos):
    if "." in text or "e" in text.lower():
        # exact decimal rational
        m = re.fullmatch(r"(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?", text)
        int_part = m.group(1) or "0"
        frac_part = m.group(2) or ""
        exp_part = int(m.group(3) or 0)
        base = Fraction(int(int_part + frac_part) if int_part + frac_part else 0,
                        10 ** len(frac_part))
        val = base * Fraction(10) ** exp_part
        return RationalLiteral(val)
    return IntLiteral(int(text))


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        t = self.tokens[self.k]
        self.k += 1
        return t

    def expect(self, val):
        kind, text, pos = self.peek()
        if text != val:
            raise ParseError("expected %r" % val, pos)
        return self.advance()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek()[1] in ("+", "-"):
            op = self.advance()[1]
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_unary()
        while self.peek()[1] in ("*", "/"):
            op = self.advance()[1]
            node = BinOp(op, node, self.parse_unary())
        return node

    def parse_unary(self):
        if self.peek()[1] == "-":
            self.advance()
            return UnaryOp("-", self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        node = self.parse_atom()
        if self.peek()[1] in ("^", "**"):
            self.advance()
            return BinOp("^", node, self.parse_unary())
        return node

    def parse_atom(self):
        kind, text, pos = self.peek()
        if kind == "number":
            self.advance()
            return _literal(text, pos)
        if kind == "name":
            self.advance()
            if text in _CONSTANTS:
                return Symbol(text)
            if text in _FUNCTIONS:
                self.expect("(")
                args = [self.parse_expr()]
                while self.peek()[1] == ",":
                    self.advance()
                    args.append(self.parse_expr())
                self.expect(")")
                if len(args) != _FUNCTIONS[text]:
                    raise ParseError("%s expects %d argument(s)"
                                     % (text, _FUNCTIONS[text]), pos)
                return Call(text, args)
            if text in _REJECTED:
                raise ParseError("function %r is not supported by this "
                                 "calculator (only sqrt, exp, log, pow)" % text, pos)
            raise ParseError("unknown name %r" % text, pos)
        if text == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        raise ParseError("unexpected token %r" % (text or "end of input"), pos)


def parse(text):
    p = _Parser(tokenize(text))
    node = p.parse_expr()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise ParseError("trailing input %r" % tok, pos)
    return node


def to_text(node):
    """Printer inverse to parse (round-trips modulo whitespace)."""
    if isinstance(node, IntLiteral):
        return str(node.value)
    if isinstance(node, RationalLiteral):
        v = node.value
        den = v.denominator
        twos = fives = 0
        while den % 2 == 0:
            den //= 2
            twos += 1
        while den % 5 == 0:
            den //= 5
            fives += 1
        if den == 1:
            # exact decimal literal round-trips to a RationalLiteral
            k = max(twos, fives)
            scaled = abs(v.numerator) * 10**k // v.denominator
            digits = str(scaled).rjust(k + 1, "0")
            text = digits[:-k] + "." + digits[-k:] if k else digits + ".0"
            return "(-%s)" % text if v < 0 else text
        return "(%d/%d)" % (v.numerator, v.denominator)
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, UnaryOp):
        return "(-%s)" % to_text(node.operand)
    if isinstance(node, BinOp):
        return "(%s %s %s)" % (to_text(node.left),
                               "^" if node.op == "^" else node.op,
                               to_text(node.right))
    if isinstance(node, Call):
        return "%s(%s)" % (node.head, ", ".join(to_text(a) for a in node.args))
    raise TypeError("not an expression node: %r" % (node,))


def evaluate(node, ctx):
    """Build an exact number from an AST in the given context."""
    if isinstance(node, IntLiteral):
        return ctx.rational(node.value)
    if isinstance(node, RationalLiteral):
        return ctx.rational(node.value)
    if isinstance(node, Symbol):
        return ctx.pi() if node.name == "pi" else ctx.i()
    if isinstance(node, UnaryOp):
        from . import number
        return number.neg(evaluate(node.operand, ctx))
    if isinstance(node, BinOp):
        from . import number
        a = evaluate(node.left, ctx)
        b = evaluate(node.right, ctx)
        if node.op == "+":
            return number.add(a, b)
        if node.op == "-":
            return number.sub(a, b)
        if node.op == "*":
            return number.mul(a, b)
        if node.op == "/":
            return number.div(a, b)
        return ctx.pow(a, b)
    if isinstance(node, Call):
        args = [evaluate(a, ctx) for a in node.args]
        if node.head == "sqrt":
            return ctx.sqrt(args[0])
        if node.head == "exp":
            return ctx.exp(args[0])
        if node.head == "log":
            return ctx.log(args[0])
        return ctx.pow(args[0], args[1])
    raise TypeError("not an expression node: %r" % (node,))

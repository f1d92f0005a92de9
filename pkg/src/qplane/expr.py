"""Parsing of textual expressions into scalars, algebra elements, and
t-vectors.

Grammar (whitespace insensitive):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | power
    power    := atom ('^' exponent)?
    atom     := INTEGER | NAME | '(' expr ')'
    exponent := INTEGER | '-' INTEGER | '(' '-'? INTEGER ')'

The admissible names depend on the syntactic category: ``q`` is always a
scalar; ``x``/``y`` belong to quantum-plane (and localized) expressions,
``X``/``Y`` to q-Weyl expressions, and ``t`` to vector expressions.  Mixing
categories or using a negative exponent outside an invertible position is a
:class:`~qplane.errors.CategoryError`.
"""

from .errors import CategoryError, ExprSyntaxError
from .laurent import LaurentVector, PolyVector
from .ncalgebra import QuantumPlane, QWeylAlgebra

_SYMBOLS = "+-*/^()"


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Context:
    """Category-specific symbol table and coercions."""

    def __init__(self, field, category, algebra=None):
        self.field = field
        self.category = category
        self.algebra = algebra

    def generator_power(self, name, k, pos):
        if name == "q":
            return self.field.q_pow(k)
        if self.category == "vector":
            if name == "t":
                return LaurentVector.basis(self.field, k)
        elif self.algebra is not None and name in self.algebra.letters:
            lx, ly = self.algebra.letters
            a, b = (k, 0) if name == lx else (0, k)
            try:
                return self.algebra.monomial(a, b)
            except ValueError as exc:
                raise CategoryError(str(exc), pos)
        raise CategoryError(
            "symbol %r is not allowed in a %s expression" % (name, self.category), pos
        )

    def promote(self, value):
        """Lift a bare scalar into the ambient space of the category."""
        if self.category == "scalar":
            return value
        if self.category == "vector":
            return LaurentVector.basis(self.field, 0, value)
        return self.algebra.scalar_element(value)

    def is_scalar(self, value):
        return not isinstance(value, (LaurentVector,)) and not hasattr(value, "terms")


class _Parser:
    def __init__(self, text, context):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ctx = context

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, symbol):
        kind, value, at = self.peek()
        if kind != "op" or value != symbol:
            raise ExprSyntaxError("expected %r" % symbol, at)
        return self.advance()

    def parse(self):
        value = self.expr()
        kind, _, at = self.peek()
        if kind != "end":
            raise ExprSyntaxError("unexpected trailing input", at)
        if self.ctx.is_scalar(value):
            value = self.ctx.promote(value)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, symbol, at = self.peek()
            if kind == "op" and symbol in "+-":
                self.advance()
                rhs = self.term()
                value = self.combine_add(value, rhs if symbol == "+" else self.negate(rhs), at)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, symbol, at = self.peek()
            if kind == "op" and symbol == "*":
                self.advance()
                value = self.combine_mul(value, self.factor(), at)
            elif kind == "op" and symbol == "/":
                self.advance()
                value = self.combine_div(value, self.factor(), at)
            else:
                return value

    def factor(self):
        kind, symbol, _ = self.peek()
        if kind == "op" and symbol == "-":
            self.advance()
            return self.negate(self.factor())
        return self.power()

    def power(self):
        kind, value, at = self.peek()
        if kind == "name":
            self.advance()
            exponent = self.maybe_exponent()
            return self.ctx.generator_power(value, 1 if exponent is None else exponent, at)
        base = self.atom()
        exponent = self.maybe_exponent()
        if exponent is None:
            return base
        return self.apply_power(base, exponent, at)

    def atom(self):
        kind, value, at = self.peek()
        if kind == "int":
            self.advance()
            return self.ctx.field.scalar(value)
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError("expected a number, symbol, or parenthesis", at)

    def maybe_exponent(self):
        kind, symbol, _ = self.peek()
        if kind != "op" or symbol != "^":
            return None
        self.advance()
        sign = 1
        kind, value, at = self.peek()
        if kind == "op" and value == "(":
            self.advance()
            kind, value, at = self.peek()
            if kind == "op" and value == "-":
                self.advance()
                sign = -1
                kind, value, at = self.peek()
            if kind != "int":
                raise ExprSyntaxError("expected an integer exponent", at)
            self.advance()
            self.expect_op(")")
            return sign * value
        if kind == "op" and value == "-":
            self.advance()
            kind, value, at = self.peek()
        if kind != "int":
            raise ExprSyntaxError("expected an integer exponent", at)
        self.advance()
        return sign * value

    # -- semantic combination -------------------------------------------------

    def negate(self, value):
        return -value

    def combine_add(self, left, right, at):
        left_scalar = self.ctx.is_scalar(left)
        right_scalar = self.ctx.is_scalar(right)
        if left_scalar and not right_scalar:
            left = self.ctx.promote(left)
        elif right_scalar and not left_scalar:
            right = self.ctx.promote(right)
        return left + right

    def combine_mul(self, left, right, at):
        try:
            result = left * right
        except (ValueError, TypeError) as exc:
            raise CategoryError(str(exc), at)
        if result is NotImplemented:
            raise CategoryError("cannot multiply these operands", at)
        return result

    def combine_div(self, left, right, at):
        if self.ctx.is_scalar(right):
            if not right:
                raise ExprSyntaxError("division by zero", at)
            if self.ctx.is_scalar(left):
                return left / right
            return left * (self.ctx.field.one / right)
        try:
            inverse = right.inverse()
        except ValueError as exc:
            raise CategoryError(str(exc), at)
        return self.combine_mul(left, inverse, at)

    def apply_power(self, base, exponent, at):
        try:
            return base ** exponent
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ZeroDivisionError):
                raise ExprSyntaxError("zero raised to a negative power", at)
            raise CategoryError(str(exc), at)


def parse_scalar(field, text):
    """Parse a scalar expression (numbers, fractions, polynomials in q)."""
    return _Parser(text, _Context(field, "scalar")).parse()


def parse_element(algebra, text):
    """Parse an algebra expression in the letters of ``algebra``."""
    category = "q-Weyl" if isinstance(algebra, QWeylAlgebra) else "quantum-plane"
    if algebra.localized:
        category = "localized " + category
    return _Parser(text, _Context(algebra.field, category, algebra)).parse()


def parse_vector(field, text, polynomial=False):
    """Parse a t-expression; with ``polynomial=True`` the support must be
    nonnegative and a PolyVector is returned."""
    vector = _Parser(text, _Context(field, "vector")).parse()
    if polynomial:
        bad = [i for i in vector.support() if i < 0]
        if bad:
            raise CategoryError(
                "polynomial context forbids negative exponents (found t^%d)" % bad[0]
            )
        return PolyVector(field, dict(vector.coeffs))
    return vector

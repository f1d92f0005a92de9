"""Exact coefficient fields with a distinguished deformation parameter q.

Two fields are supported:

* the rationals with a fixed rational value of q (scalars are
  ``fractions.Fraction``), and
* the field of rational functions in an indeterminate q over the rationals
  (scalars are :class:`RatFunc`).

Both scalar types keep a canonical reduced form, so equality of values is
equality of representations and no rounding ever occurs.  The field objects
own the q-specific operations: exact powers ``q^k``, the discrete logarithm
base q, and the q-integers ``[i]_q = (q^i - 1)/(q - 1)``.
"""

from fractions import Fraction

from .errors import RootOfUnityError, ZeroArgumentError

_F0 = Fraction(0)
_F1 = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomials over the rationals: tuples of Fractions, constant term
# first, no trailing zeros; () is the zero polynomial
# ---------------------------------------------------------------------------

def _ptrim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    if len(a) < len(b):
        return (), _ptrim(rem)
    quot = [_F0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        factor = rem[shift + len(b) - 1] / lead
        if factor:
            quot[shift] = factor
            for i, c in enumerate(b):
                rem[shift + i] -= factor * c
    return _ptrim(quot), _ptrim(rem)


def _pgcd(a, b):
    """Monic gcd; (1,) when the arguments are coprime, () only if both are zero."""
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    lead = a[-1]
    if lead != 1:
        a = tuple(c / lead for c in a)
    return a


def _pdiv_exact(a, b):
    quot, rem = _pdivmod(a, b)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


class RatFunc:
    """A rational function in q, kept in canonical reduced form.

    Invariant: ``num`` and ``den`` are coefficient tuples with gcd 1 and the
    denominator monic; zero is ``((), (1,))``.  With this normalization two
    equal values are structurally equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, value=0):
        if isinstance(value, RatFunc):
            num, den = value.num, value.den
        elif isinstance(value, (int, Fraction)):
            value = Fraction(value)
            num = (value,) if value else ()
            den = (_F1,)
        else:
            raise TypeError("cannot build a rational function from %r" % (value,))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc values are immutable")

    @classmethod
    def _raw(cls, num, den):
        """Internal constructor for data already in canonical form."""
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def from_coeffs(cls, num, den=(1,)):
        num = _ptrim(Fraction(c) for c in num)
        den = _ptrim(Fraction(c) for c in den)
        return cls._normalized(num, den)

    @classmethod
    def _normalized(cls, num, den):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return cls._raw((), (_F1,))
        g = _pgcd(num, den)
        if g != (_F1,):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return cls._raw(num, den)

    @classmethod
    def generator(cls):
        return cls._raw((_F0, _F1), (_F1,))

    # -- arithmetic ---------------------------------------------------------

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return self._normalized(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return self._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._normalized(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return self._normalized(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return self._raw((_F1,), (_F1,))
        base = self
        if k < 0:
            if not base.num:
                raise ZeroDivisionError("inverse of the zero rational function")
            lead = base.num[-1]
            num = tuple(c / lead for c in base.den)
            den = tuple(c / lead for c in base.num)
            base = self._raw(num, den)
            k = -k
        # num and den stay coprime under powering, so skip the gcd
        num, den = base.num, base.den
        pnum, pden = num, den
        for _ in range(k - 1):
            pnum = _pmul(pnum, num)
            pden = _pmul(pden, den)
        return self._raw(pnum, pden)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == (_F1,) and len(self.num) <= 1:
            return hash(self.num[0] if self.num else _F0)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    # -- inspection and display ---------------------------------------------

    def is_monomial_power(self):
        """Exponent k if the value is exactly q^k, else None."""
        if not self.num:
            return None
        num_val = _valuation(self.num)
        den_val = _valuation(self.den)
        k = num_val - den_val
        if self == _QGEN ** k:
            return k
        return None

    def __str__(self):
        num, den = _integer_display_pair(self.num, self.den)
        num_s = _int_poly_str(num)
        if den == (1,):
            return num_s
        den_s = _int_poly_str(den)
        if _term_count(num) > 1:
            num_s = "(%s)" % num_s
        if not _is_display_atom(den):
            den_s = "(%s)" % den_s
        return "%s/%s" % (num_s, den_s)

    __repr__ = __str__


_QGEN = RatFunc.generator()


def _valuation(coeffs):
    for i, c in enumerate(coeffs):
        if c:
            return i
    raise ValueError("valuation of the zero polynomial")


def _term_count(coeffs):
    return sum(1 for c in coeffs if c)


def _is_display_atom(int_coeffs):
    """True when the polynomial prints as a single juxtaposition-free factor:
    a constant, q, or q^k."""
    if _term_count(int_coeffs) != 1:
        return False
    k = _valuation(int_coeffs)
    if k == 0:
        return True
    return int_coeffs[k] == 1


def _integer_display_pair(num, den):
    """Scale a Fraction-coefficient pair to coprime integer polynomials with
    a positive-leading denominator (display form only)."""
    scale = 1
    for c in num + den:
        scale = scale * c.denominator // _gcd_int(scale, c.denominator)
    n = [int(c * scale) for c in num]
    d = [int(c * scale) for c in den]
    content = 0
    for c in n + d:
        content = _gcd_int(content, abs(c))
    if content > 1:
        n = [c // content for c in n]
        d = [c // content for c in d]
    return tuple(n), tuple(d)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _int_poly_str(coeffs, var="q"):
    if not any(coeffs):
        return "0"
    pieces = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = var if mag == 1 else "%d*%s" % (mag, var)
        else:
            body = "%s^%d" % (var, k) if mag == 1 else "%d*%s^%d" % (mag, var, k)
        pieces.append((c < 0, body))
    return join_signed_terms(pieces)


# ---------------------------------------------------------------------------
# shared display machinery for linear combinations
# ---------------------------------------------------------------------------

def is_negative_scalar(s):
    if isinstance(s, Fraction):
        return s < 0
    return bool(s.num) and s.num[-1] < 0


def needs_parens(text):
    """True if the scalar string contains a top-level binary + or -."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0 and text[i - 1] == " ":
            return True
    return False


def coefficient_term(coeff, monomial):
    """Render one term ``coeff * monomial`` as (negative, body)."""
    neg = is_negative_scalar(coeff)
    mag = -coeff if neg else coeff
    if not monomial:
        return neg, str(mag)
    if mag == 1:
        return neg, monomial
    mag_s = str(mag)
    if needs_parens(mag_s):
        mag_s = "(%s)" % mag_s
    return neg, "%s*%s" % (mag_s, monomial)


def join_signed_terms(pieces):
    """Join (negative, body) pairs into ``a + b - c`` form."""
    parts = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# the two coefficient fields
# ---------------------------------------------------------------------------

class BaseField:
    """Shared q-specific operations; concrete fields fix the scalar type."""

    kind = None

    def validate_q(self):
        raise NotImplementedError

    def scalar(self, value):
        raise NotImplementedError

    def log_q(self, s):
        raise NotImplementedError

    def q_pow(self, k):
        raise NotImplementedError

    def q_bracket(self, i):
        """The q-integer [i]_q = (q^i - 1)/(q - 1), exact for any integer i."""
        return (self.q_pow(i) - self.one) / (self.q - self.one)

    def parse_scalar(self, text):
        from .expr import parse_scalar

        return parse_scalar(self, text)

    def __repr__(self):
        return self.describe()


class RationalField(BaseField):
    """The rationals with a fixed rational deformation parameter."""

    kind = "Q"

    def __init__(self, q):
        self.q = Fraction(q)
        self.zero = _F0
        self.one = _F1
        self.validate_q()

    def validate_q(self):
        if self.q == 0 or self.q == 1:
            raise RootOfUnityError("q must differ from 0 and 1, got %s" % self.q)
        if self.q == -1:
            raise RootOfUnityError("q = -1 is a root of unity over the rationals")

    def scalar(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse_scalar(value)
        raise TypeError("cannot interpret %r as a rational scalar" % (value,))

    def q_pow(self, k):
        return self.q ** k

    def log_q(self, s):
        """Integer k with s = q^k, or None.  Bounded exact search: any such k
        satisfies |k|*(bitlength(max(|num q|, den q)) - 1) <= bitlength of
        |num s| * den s, since q^k stays in lowest terms."""
        s = self.scalar(s)
        if s == 0:
            raise ZeroArgumentError("log_q of zero")
        if s == 1:
            return 0
        q = self.q
        base_bits = max(abs(q.numerator), q.denominator).bit_length() - 1
        size = (abs(s.numerator) * s.denominator).bit_length()
        limit = size // max(1, base_bits) + 1
        up = q
        down = 1 / q
        for k in range(1, limit + 1):
            if up == s:
                return k
            if down == s:
                return -k
            up *= q
            down /= q
        return None

    def describe(self):
        return "Q with q = %s" % self.q

    def __eq__(self, other):
        return isinstance(other, RationalField) and other.q == self.q

    def __hash__(self):
        return hash((self.kind, self.q))


class RationalFunctionField(BaseField):
    """Rational functions in the indeterminate q over the rationals."""

    kind = "Qq"

    def __init__(self):
        self.q = RatFunc.generator()
        self.zero = RatFunc(0)
        self.one = RatFunc(1)

    def validate_q(self):
        # the indeterminate is transcendental, hence never a root of unity
        return None

    def scalar(self, value):
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, Fraction)):
            return RatFunc(value)
        if isinstance(value, str):
            return self.parse_scalar(value)
        raise TypeError("cannot interpret %r as a rational function" % (value,))

    def q_pow(self, k):
        if k >= 0:
            return RatFunc._raw((_F0,) * k + (_F1,), (_F1,))
        return RatFunc._raw((_F1,), (_F0,) * (-k) + (_F1,))

    def log_q(self, s):
        """Integer k with s = q^k, or None: read k off the valuations of the
        numerator and denominator, then verify structurally."""
        s = self.scalar(s)
        if not s:
            raise ZeroArgumentError("log_q of zero")
        return s.is_monomial_power()

    def describe(self):
        return "Q(q)"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField)

    def __hash__(self):
        return hash(self.kind)

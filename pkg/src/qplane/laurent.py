"""Laurent-polynomial and polynomial carrier spaces, plus the dilation and
Jackson-derivative operators that represent the quantum plane on them.

Vectors are sparse maps from integer exponents to nonzero scalars over a
fixed coefficient field.  ``PolyVector`` restricts the support to nonnegative
exponents.
"""

from dataclasses import dataclass

from .errors import ZeroDilationError
from .field import coefficient_term, join_signed_terms
from .util import linear_dependence


class LaurentVector:
    """Finite linear combination of basis monomials t^i, i in Z."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("vectors are immutable")

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def basis(cls, field, i, coeff=1):
        cls._check_exponent(i)
        coeff = field.scalar(coeff)
        return cls(field, {i: coeff} if coeff else {})

    @classmethod
    def from_coeffs(cls, field, mapping):
        if hasattr(mapping, "items"):
            mapping = mapping.items()
        coeffs = {}
        for i, c in mapping:
            cls._check_exponent(i)
            c = field.scalar(c)
            if not c:
                continue
            s = coeffs.get(i)
            s = c if s is None else s + c
            if s:
                coeffs[i] = s
            else:
                coeffs.pop(i, None)
        return cls(field, coeffs)

    @staticmethod
    def _check_exponent(i):
        return None

    def _result(self, other, coeffs):
        if isinstance(self, PolyVector) and isinstance(other, PolyVector):
            return PolyVector(self.field, coeffs)
        return LaurentVector(self.field, coeffs)

    def _coerce(self, other):
        if isinstance(other, LaurentVector):
            if other.field != self.field:
                raise ValueError("vectors over different fields")
            return other
        try:
            return type(self).basis(self.field, 0, self.field.scalar(other))
        except TypeError:
            return None

    # -- inspection -----------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def coefficient(self, i):
        return self.coeffs.get(i, self.field.zero)

    # -- linear structure ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = coeffs.get(i)
            s = c if s is None else s + c
            if s:
                coeffs[i] = s
            else:
                coeffs.pop(i, None)
        return self._result(other, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self._result(self, {i: -c for i, c in self.coeffs.items()})

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
        if isinstance(other, LaurentVector):
            other = self._coerce(other)
            coeffs = {}
            zero = self.field.zero
            for i, ci in self.coeffs.items():
                for j, cj in other.coeffs.items():
                    k = i + j
                    s = coeffs.get(k, zero) + ci * cj
                    if s:
                        coeffs[k] = s
                    else:
                        coeffs.pop(k, None)
            return self._result(other, coeffs)
        try:
            scalar = self.field.scalar(other)
        except TypeError:
            return NotImplemented
        return self._scaled(scalar)

    def __rmul__(self, other):
        try:
            scalar = self.field.scalar(other)
        except TypeError:
            return NotImplemented
        return self._scaled(scalar)

    def _scaled(self, scalar):
        if not scalar:
            return self._result(self, {})
        return self._result(self, {i: c * scalar for i, c in self.coeffs.items()})

    def __truediv__(self, other):
        try:
            scalar = self.field.scalar(other)
        except TypeError:
            return NotImplemented
        return self._scaled(self.field.one / scalar)

    def inverse(self):
        if len(self.coeffs) != 1:
            raise ValueError("only monomial vectors can be inverted")
        (i, c), = self.coeffs.items()
        return LaurentVector(self.field, {-i: self.field.one / c})

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = type(self).basis(self.field, 0, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentVector):
            return self.field == other.field and self.coeffs == other.coeffs
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.coeffs == coerced.coeffs

    __hash__ = None

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for i in sorted(self.coeffs):
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "t"
            else:
                mono = "t^%d" % i
            pieces.append(coefficient_term(self.coeffs[i], mono))
        return join_signed_terms(pieces)

    __repr__ = __str__


class PolyVector(LaurentVector):
    """A vector supported on nonnegative exponents (the polynomial model)."""

    __slots__ = ()

    @staticmethod
    def _check_exponent(i):
        if i < 0:
            raise ValueError("polynomial vectors cannot carry negative exponents")


@dataclass(frozen=True)
class BasisEmbedding:
    """The basis relabeling t^i -> t^(offset + i*stride)."""

    offset: int
    stride: int

    def index(self, i):
        return self.offset + i * self.stride

    def apply(self, p):
        return LaurentVector(p.field, {self.index(i): c for i, c in p.coeffs.items()})

    def describe(self):
        return "offset=%d stride=%d" % (self.offset, self.stride)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

def dilate(p, c):
    """Substitute t -> c*t: the coefficient of t^i picks up a factor c^i."""
    c = p.field.scalar(c)
    if not c:
        raise ZeroDilationError("dilation by zero is not invertible on Laurent polynomials")
    coeffs = {}
    for i, v in p.coeffs.items():
        coeffs[i] = v * (c ** i)
    return type(p)(p.field, coeffs)


def jackson_derivative(p):
    """The q-difference operator sending t^k to [k]_q t^(k-1).

    Termwise this is (p(qt) - p(t))/(qt - t); constants are sent to zero.
    """
    field = p.field
    coeffs = {}
    for k, v in p.coeffs.items():
        if k == 0:
            continue
        c = v * field.q_bracket(k)
        if c:
            coeffs[k - 1] = c
    return type(p)(field, coeffs)


def act_jackson(u, p):
    """Apply a quantum-plane element through x -> dilation by q and
    y -> Jackson derivative."""
    if u.algebra.field != p.field:
        raise ValueError("element and vector live over different fields")
    field = p.field
    result = type(p).zero(field)
    for (a, b), coeff in u.terms.items():
        image = p
        for _ in range(b):
            image = jackson_derivative(image)
        for _ in range(a):
            image = dilate(image, field.q)
        result = result + image._scaled(coeff)
    return result


class FaithfulnessReport:
    """Outcome of the finite-degree faithfulness probe.

    Truthful as a boolean; when the probe fails it carries a nonzero kernel
    witness that acts as zero on the checked polynomial degrees.
    """

    def __init__(self, faithful, degree_bound, witness=None):
        self.faithful = faithful
        self.degree_bound = degree_bound
        self.witness = witness

    def __bool__(self):
        return self.faithful

    def __repr__(self):
        if self.faithful:
            return "faithful up to exponent bound %d" % self.degree_bound
        return "kernel witness: %s" % self.witness


def jackson_faithfulness_probe(field, degree_bound):
    """Check that every nonzero element with exponents at most
    ``degree_bound`` acts nonzero on polynomials of degree at most
    ``2 * degree_bound``.

    The probe looks for an exact linear relation among the actions of the
    monomials x^a y^b on the basis t^k.  The action of x^a y^b sends t^k to
    lambda(b, k) * q^(a(k-b)) * t^(k-b) with lambda(b, k) the product
    [k]_q [k-1]_q ... [k-b+1]_q, so rows sharing an output column share the
    same b and hence the same nonzero lambda(b, k); dividing each column by
    it rescales the linear system without changing its solutions.  A found
    relation is turned into an element and re-verified by direct action.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be positive")
    from .ncalgebra import QuantumPlane

    algebra = QuantumPlane(field)
    depth = 2 * degree_bound
    keys = [(a, b) for a in range(degree_bound + 1) for b in range(degree_bound + 1)]
    rows = []
    for a, b in keys:
        row = {}
        for k in range(b, depth + 1):
            scale = field.one
            for j in range(b):
                scale = scale * field.q_bracket(k - j)
            assert scale, "q-integer product vanished; q is a root of unity"
            row[(k, k - b)] = field.q_pow(a * (k - b))
        rows.append(row)
    relation = linear_dependence(rows, field.zero, field.one)
    if relation is None:
        return FaithfulnessReport(True, degree_bound)
    witness = algebra.from_terms(
        {key: c for key, c in zip(keys, relation) if c}
    )
    assert not witness.is_zero()
    for k in range(depth + 1):
        image = act_jackson(witness, PolyVector.basis(field, k))
        assert image.is_zero(), "spurious kernel witness"
    return FaithfulnessReport(False, degree_bound, witness)

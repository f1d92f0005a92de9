"""Representations on the q-Weyl side: the extension of V^{m,n}_f through
the localization, the weight family W^n_g with g(i + n) = q g(i) + 1, its
classification, and the two quantum-plane restrictions with their socles.

Throughout, h denotes the shifted function h(i) = (q - 1) g(i) + 1, which
satisfies the purely multiplicative law h(i + n) = q h(i); membership of
g(0) in the q-integer orbit becomes a discrete-logarithm question for h.
"""

import re
from dataclasses import dataclass

from .errors import (
    InvalidParamError,
    InvalidWParamsError,
    NotCoprimeError,
    ParseInputError,
    UnsupportedNError,
)
from .laurent import BasisEmbedding, LaurentVector
from .ncalgebra import AlgebraElement, QuantumPlane, QWeylAlgebra
from .qplane_reps import f_eval, pi_f
from .util import default_window, exact_rank


@dataclass(frozen=True)
class GWeight:
    """Data of a weight representation W^n_g of the q-Weyl algebra: the n
    base values g(0), ..., g(n-1); zeros are allowed."""

    field: object
    n: int
    base: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParamError("the shift parameter must be a positive integer")
        base = tuple(self.field.scalar(c) for c in self.base)
        if len(base) != self.n:
            raise InvalidParamError(
                "expected %d base values, got %d" % (self.n, len(base))
            )
        object.__setattr__(self, "base", base)
        q = self.field.q
        one = self.field.one
        for i in range(-self.n - 2, self.n + 3):
            assert g_eval(self, i + self.n) == q * g_eval(self, i) + one
            assert h_eval(self, i + self.n) == q * h_eval(self, i)

    def to_text(self):
        return "W[%d; %s]" % (self.n, ", ".join(str(c) for c in self.base))

    @classmethod
    def from_text(cls, field, text):
        match = re.fullmatch(r"\s*W\[\s*(\d+)\s*;([^\]]*)\]\s*", text)
        if match is None:
            raise ParseInputError("malformed W-weight literal: %r" % text)
        n = int(match.group(1))
        base = tuple(field.parse_scalar(part) for part in match.group(2).split(","))
        return cls(field, n, base)

    def to_json(self):
        return {"n": self.n, "base": [str(c) for c in self.base]}

    def __str__(self):
        return self.to_text()


def make_gweight(field, n, base):
    """Build the weight data for W^n_g from its base values."""
    return GWeight(field, n, tuple(base))


def h_eval(weight, i):
    """The shifted value h(i) = (q - 1) g(i) + 1, which obeys h(i+n) = q h(i)."""
    field = weight.field
    n = weight.n
    r = i % n
    h_base = (field.q - field.one) * weight.base[r] + field.one
    return h_base * field.q_pow((i - r) // n)


def g_eval(weight, i):
    """Value g(i) for any integer i, via the multiplicative form of the
    recurrence g(i + n) = q g(i) + 1."""
    field = weight.field
    return (h_eval(weight, i) - field.one) / (field.q - field.one)


def validate_w_params(field, m, n, g, window=None):
    """Check that X.t^i = t^(i+n), Y.t^i = g(i) t^(i-m) defines an action of
    the q-Weyl algebra, by evaluating (YX - qXY - 1).t^i on a window.

    ``g`` may be a GWeight or any callable from integers to scalars.  The
    residual (g(i+n) - q g(i)) t^(i+n-m) - t^i vanishes for every i exactly
    when m = n and g satisfies the recurrence; otherwise the offending data
    is reported.
    """
    if m < 1 or n < 1:
        raise InvalidParamError("shift parameters must be positive integers")
    window = default_window() if window is None else window
    values = g if callable(g) else (lambda i: g_eval(g, i))
    q = field.q
    one = field.one
    for i in range(-window, window + 1):
        residual = {i: -one}
        c = field.scalar(values(i + n)) - q * field.scalar(values(i))
        if c:
            j = i + n - m
            s = residual.get(j, field.zero) + c
            if s:
                residual[j] = s
            else:
                residual.pop(j, None)
        if residual:
            if m != n:
                raise InvalidWParamsError(
                    "no action exists for m=%d, n=%d: the relation requires m = n" % (m, n)
                )
            raise InvalidWParamsError(
                "g violates g(i+n) = q g(i) + 1 at i = %d" % i
            )
    return None


def act_w(u, p, weight):
    """The W^n_g action: X.t^i = t^(i+n) and Y.t^i = g(i) t^(i-n)."""
    if not isinstance(u, AlgebraElement) or not isinstance(u.algebra, QWeylAlgebra):
        raise TypeError("act_w expects a q-Weyl element")
    if u.algebra.field != weight.field or p.field != weight.field:
        raise ValueError("element, vector, and weight must share a field")
    field = weight.field
    n = weight.n
    coeffs = {}
    zero = field.zero
    for (a, b), coeff in u.terms.items():
        for i, c in p.coeffs.items():
            value = coeff * c
            for j in range(b):
                value = value * g_eval(weight, i - j * n)
                if not value:
                    break
            if not value:
                continue
            target = i - b * n + a * n
            s = coeffs.get(target, zero) + value
            if s:
                coeffs[target] = s
            else:
                coeffs.pop(target, None)
    return LaurentVector(field, coeffs)


def extend_action_qweyl(u, p, weight):
    """The q-Weyl action on V^{m,n}_f obtained by extending the quantum-plane
    action through the localization at x:

        X.t^i = t^(i+n),
        Y.t^i = (q - 1)^{-1} (f(i) t^(i-m-n) - t^(i-n)).
    """
    if not isinstance(u, AlgebraElement) or not isinstance(u.algebra, QWeylAlgebra):
        raise TypeError("extend_action_qweyl expects a q-Weyl element")
    if u.algebra.field != weight.field or p.field != weight.field:
        raise ValueError("element, vector, and weight must share a field")
    field = weight.field
    m, n = weight.m, weight.n
    inv = field.one / (field.q - field.one)
    result = LaurentVector.zero(field)
    for (a, b), coeff in u.terms.items():
        image = p
        for _ in range(b):
            coeffs = {}
            zero = field.zero
            for i, c in image.coeffs.items():
                lower = c * inv * f_eval(weight, i)
                s = coeffs.get(i - m - n, zero) + lower
                if s:
                    coeffs[i - m - n] = s
                else:
                    coeffs.pop(i - m - n, None)
                s = coeffs.get(i - n, zero) - c * inv
                if s:
                    coeffs[i - n] = s
                else:
                    coeffs.pop(i - n, None)
            image = LaurentVector(field, coeffs)
        if a:
            image = LaurentVector(field, {i + a * n: c for i, c in image.coeffs.items()})
        result = result + image._scaled(coeff)
    return result


@dataclass(frozen=True)
class SupportGrowth:
    """Supports of the iterates of y = (q-1)XY + 1 applied to t^0, together
    with the dimension they span: unbounded growth witnesses failure of
    semisimplicity over the subalgebra generated by XY."""

    supports: tuple
    span_dimension: int

    def to_json(self):
        return {
            "supports": [list(s) for s in self.supports],
            "span_dimension": self.span_dimension,
        }


def qweyl_not_weight_witness(weight, depth):
    """Iterate the element (q - 1)XY + 1 on t^0 inside the extended action
    on V^{m,n}_f: the supports keep drifting by -m, so the orbit spans
    depth + 1 independent vectors and the representation is not a weight
    representation of the q-Weyl algebra."""
    if depth < 0:
        raise InvalidParamError("depth must be nonnegative")
    field = weight.field
    algebra = QWeylAlgebra(field)
    y_element = algebra.from_terms(
        {(1, 1): field.q - field.one, (0, 0): field.one}
    )
    vector = LaurentVector.basis(field, 0)
    supports = []
    orbit = []
    for _ in range(depth + 1):
        supports.append(tuple(vector.support()))
        orbit.append(dict(vector.coeffs))
        vector = extend_action_qweyl(y_element, vector, weight)
    dimension = exact_rank(orbit, field.zero, field.one)
    assert dimension == depth + 1
    return SupportGrowth(tuple(supports), dimension)


def iso_check_qweyl(weight, other):
    """V^{m,n}_f and V^{m',n'}_{f'} are isomorphic over the q-Weyl algebra
    under exactly the same criterion as over the quantum plane."""
    if weight.field != other.field:
        raise ValueError("weights over different fields")
    if weight.d != 1 or other.d != 1:
        raise NotCoprimeError("the q-Weyl classification needs coprime parameters")
    if (weight.m, weight.n) != (other.m, other.n):
        return False
    return weight.field.log_q(pi_f(other, 0) / pi_f(weight, 0)) is not None


def decompose_w(weight):
    """Split W^n_g into n summands W^1_{g_k} with g_k(i) = g(k + i*n),
    embedded along t^i -> t^(k + i*n)."""
    field = weight.field
    summands = []
    for k in range(weight.n):
        summand = GWeight(field, 1, (g_eval(weight, k),))
        summands.append((summand, BasisEmbedding(k, weight.n)))
    return summands


def w_iso_check(weight, other):
    """For n = 1: W^1_g and W^1_{g'} are isomorphic iff g(0) = g'(i) for
    some integer i, i.e. iff h(0) and h'(0) differ by a power of q (both
    vanish in the constant case)."""
    if weight.n != 1 or other.n != 1:
        raise UnsupportedNError("decompose first: the orbit criterion is for n = 1")
    if weight.field != other.field:
        raise ValueError("weights over different fields")
    h = h_eval(weight, 0)
    h_other = h_eval(other, 0)
    if not h or not h_other:
        return (not h) and (not h_other)
    return weight.field.log_q(h / h_other) is not None


@dataclass(frozen=True)
class InvariantSubspace:
    """A proper invariant subspace of W^1_g: either the tail
    span{t^i : i >= start}, invariant because g(start) = 0 kills the one
    downward step, or the kernel of evaluation at t = 1 (constant g)."""

    kind: str  # "basis_tail" or "evaluation_kernel"
    start: int = None

    def describe(self):
        if self.kind == "basis_tail":
            return "span{t^i : i >= %d}" % self.start
        return "kernel of evaluation at t = 1"

    def to_json(self):
        if self.kind == "basis_tail":
            return {"kind": self.kind, "start": self.start}
        return {"kind": self.kind}


class IrreducibilityReport:
    """Irreducibility of W^1_g, with an invariant-subspace witness in the
    reducible case."""

    def __init__(self, irreducible, witness=None):
        self.irreducible = irreducible
        self.witness = witness

    def __bool__(self):
        return self.irreducible

    def __repr__(self):
        if self.irreducible:
            return "irreducible"
        return "reducible: %s" % self.witness.describe()


def w_is_irreducible(weight):
    """W^1_g is irreducible iff g(0) avoids the q-integers and -1/(q - 1).

    In terms of h(0) = (q - 1) g(0) + 1: reducible iff h(0) = 0 (g constant,
    with the evaluation kernel invariant) or h(0) = q^i (g(-i) = 0, with the
    tail t^{-i}, t^{-i+1}, ... invariant).
    """
    if weight.n != 1:
        raise UnsupportedNError("decompose first: the spectrum criterion is for n = 1")
    field = weight.field
    h = h_eval(weight, 0)
    if not h:
        return IrreducibilityReport(False, InvariantSubspace("evaluation_kernel"))
    exponent = field.log_q(h)
    if exponent is None:
        return IrreducibilityReport(True)
    assert not g_eval(weight, -exponent)
    return IrreducibilityReport(False, InvariantSubspace("basis_tail", -exponent))


# ---------------------------------------------------------------------------
# restriction to the quantum plane
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SigmaRestriction:
    """The quantum-plane action on W^n_g pulled back through the embedding
    x -> X, y -> (q-1)XY + 1:  x.t^i = t^(i+n) and y.t^i = h(i) t^i."""

    weight: GWeight

    def act(self, u, p):
        if not isinstance(u, AlgebraElement) or not isinstance(u.algebra, QuantumPlane):
            raise TypeError("the restriction acts on quantum-plane elements")
        field = self.weight.field
        n = self.weight.n
        coeffs = {}
        zero = field.zero
        for (a, b), coeff in u.terms.items():
            for i, c in p.coeffs.items():
                value = coeff * c * (h_eval(self.weight, i) ** b)
                if not value:
                    continue
                target = i + a * n
                s = coeffs.get(target, zero) + value
                if s:
                    coeffs[target] = s
                else:
                    coeffs.pop(target, None)
        return LaurentVector(field, coeffs)


@dataclass(frozen=True)
class TauRestriction:
    """The quantum-plane action on W^n_g pulled back through the embedding
    x -> (q-1)XY + 1, y -> Y:  x.t^i = h(i) t^i and y.t^i = g(i) t^(i-n)."""

    weight: GWeight

    def act(self, u, p):
        if not isinstance(u, AlgebraElement) or not isinstance(u.algebra, QuantumPlane):
            raise TypeError("the restriction acts on quantum-plane elements")
        field = self.weight.field
        n = self.weight.n
        coeffs = {}
        zero = field.zero
        for (a, b), coeff in u.terms.items():
            for i, c in p.coeffs.items():
                value = coeff * c
                for j in range(b):
                    value = value * g_eval(self.weight, i - j * n)
                    if not value:
                        break
                if not value:
                    continue
                target = i - b * n
                value = value * (h_eval(self.weight, target) ** a)
                if not value:
                    continue
                s = coeffs.get(target, zero) + value
                if s:
                    coeffs[target] = s
                else:
                    coeffs.pop(target, None)
        return LaurentVector(field, coeffs)


def restrict_sigma(weight):
    """Action handle for W^n_g viewed as a quantum-plane representation
    through x -> X, y -> (q-1)XY + 1."""
    return SigmaRestriction(weight)


def restrict_tau(weight):
    """Action handle for W^n_g viewed as a quantum-plane representation
    through x -> (q-1)XY + 1, y -> Y."""
    return TauRestriction(weight)


@dataclass(frozen=True)
class SocleReport:
    """Basis indices whose lines are irreducible quantum-plane
    subrepresentations; empty means the socle is trivial."""

    lines: tuple
    via: str
    window: int

    def to_json(self):
        return list(self.lines)

    def __repr__(self):
        return "socle lines %s (via %s)" % (list(self.lines), self.via)


def socle_sigma(weight, window=None):
    """Under the sigma restriction W^1_g has no irreducible quantum-plane
    subrepresentation: x shifts every support, so no finite-dimensional
    subspace is invariant and no nonzero s lies in qp*x.s.  The window check
    verifies that no basis line and no sample two-term vector is fixed."""
    if weight.n != 1:
        raise UnsupportedNError("decompose first: the socle analysis is for n = 1")
    window = default_window() if window is None else window
    field = weight.field
    algebra = QuantumPlane(field)
    handle = SigmaRestriction(weight)
    for j in range(-window, window + 1):
        line = LaurentVector.basis(field, j)
        image = handle.act(algebra.x, line)
        assert image.support() == [j + 1], "x fixed a line"
    samples = [
        LaurentVector.basis(field, 0) + LaurentVector.basis(field, 2),
        LaurentVector.basis(field, -3) + LaurentVector.basis(field, 1, 5),
    ]
    for vector in samples:
        image = handle.act(algebra.x, vector)
        assert image.support() != vector.support()
    return SocleReport((), "sigma", window)


def socle_tau(weight, window=None):
    """Under the tau restriction W^1_g has at most one irreducible
    subrepresentation: the line at -i when g(0) = [i]_q (equivalently
    h(0) = q^i), where x fixes t^{-i} and y kills it; otherwise the socle is
    trivial.  A window sweep confirms no other line is invariant."""
    if weight.n != 1:
        raise UnsupportedNError("decompose first: the socle analysis is for n = 1")
    window = default_window() if window is None else window
    field = weight.field
    algebra = QuantumPlane(field)
    handle = TauRestriction(weight)
    h = h_eval(weight, 0)
    lines = ()
    if h:
        exponent = field.log_q(h)
        if exponent is not None:
            index = -exponent
            x_image = handle.act(algebra.x, LaurentVector.basis(field, index))
            y_image = handle.act(algebra.y, LaurentVector.basis(field, index))
            assert x_image == LaurentVector.basis(field, index)
            assert y_image.is_zero()
            lines = (index,)
    invariant_in_window = tuple(
        j for j in range(-window, window + 1) if not g_eval(weight, j)
    )
    assert invariant_in_window == tuple(j for j in lines if abs(j) <= window)
    return SocleReport(lines, "tau", window)

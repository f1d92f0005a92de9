"""The representation family V^{m,n}_f of the quantum plane on Laurent
polynomials: x shifts the basis up by n, y shifts down by m with a
twisting function f satisfying f(i + n) = q f(i).

Provides construction of the weights, the module action, the product
invariant Pi_f, irreducibility and isomorphism tests, the direct-sum
decomposition for gcd(m, n) > 1, annihilator certificates, and the weight /
eigenvector probes.
"""

import re
from dataclasses import dataclass
from math import gcd

from .errors import InvalidParamError, NotCoprimeError, ParseInputError
from .laurent import BasisEmbedding, LaurentVector
from .ncalgebra import AlgebraElement, QuantumPlane, grade_split
from .util import default_window


@dataclass(frozen=True)
class FWeight:
    """Data of a representation V^{m,n}_f: the shift parameters and the n
    base values f(0), ..., f(n-1), which determine f on all of Z through
    f(i + n) = q f(i)."""

    field: object
    m: int
    n: int
    base: tuple

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidParamError("shift parameters must be positive integers")
        base = tuple(self.field.scalar(c) for c in self.base)
        if len(base) != self.n:
            raise InvalidParamError(
                "expected %d base values, got %d" % (self.n, len(base))
            )
        for c in base:
            if not c:
                raise InvalidParamError("f must take nonzero values")
        object.__setattr__(self, "base", base)
        q = self.field.q
        for i in range(-self.n - 2, self.n + 3):
            assert f_eval(self, i + self.n) == q * f_eval(self, i)

    @property
    def d(self):
        return gcd(self.m, self.n)

    def to_text(self):
        return "V[%d,%d; %s]" % (self.m, self.n, ", ".join(str(c) for c in self.base))

    @classmethod
    def from_text(cls, field, text):
        match = re.fullmatch(r"\s*V\[\s*(\d+)\s*,\s*(\d+)\s*;([^\]]*)\]\s*", text)
        if match is None:
            raise ParseInputError("malformed V-weight literal: %r" % text)
        m, n = int(match.group(1)), int(match.group(2))
        base = tuple(field.parse_scalar(part) for part in match.group(3).split(","))
        return cls(field, m, n, base)

    def to_json(self):
        return {"m": self.m, "n": self.n, "base": [str(c) for c in self.base]}

    def __str__(self):
        return self.to_text()


def f_eval(weight, i):
    """Value f(i), for any integer i, from the stored base values."""
    n = weight.n
    r = i % n
    return weight.base[r] * weight.field.q_pow((i - r) // n)


def make_f_floor(field, m, n, mu):
    """The weight with f(i) = mu * q^floor(i/n) (constant base values)."""
    mu = field.scalar(mu)
    if not mu:
        raise InvalidParamError("the base value must be nonzero")
    return FWeight(field, m, n, (mu,) * n)


def make_f_lambda(field, m, n, lam):
    """For coprime m, n: the unique weight with f(0) = lambda and f(km) = 1
    for -(n-1) <= k <= -1; its invariant Pi_f(0) equals lambda."""
    if gcd(m, n) != 1:
        raise NotCoprimeError("gcd(%d, %d) != 1" % (m, n))
    lam = field.scalar(lam)
    if not lam:
        raise InvalidParamError("lambda must be nonzero")
    base = [None] * n
    for k in range(0, -n, -1):
        j = k * m
        r = j % n
        assert base[r] is None
        value = lam if k == 0 else field.one
        base[r] = value * field.q_pow(-((j - r) // n))
    weight = FWeight(field, m, n, tuple(base))
    assert pi_f(weight, 0) == lam
    return weight


def act_qp(u, p, weight):
    """Apply an element of the (possibly localized) quantum plane to a
    Laurent vector: x.t^i = t^(i+n) and y.t^i = f(i) t^(i-m), extended
    multiplicatively and linearly."""
    if not isinstance(u, AlgebraElement) or not isinstance(u.algebra, QuantumPlane):
        raise TypeError("act_qp expects a quantum-plane element")
    if u.algebra.field != weight.field or p.field != weight.field:
        raise ValueError("element, vector, and weight must share a field")
    field = weight.field
    m, n = weight.m, weight.n
    coeffs = {}
    zero = field.zero
    for (a, b), coeff in u.terms.items():
        for i, c in p.coeffs.items():
            value = coeff * c
            for j in range(b):
                value = value * f_eval(weight, i - j * m)
            target = i - b * m + a * n
            s = coeffs.get(target, zero) + value
            if s:
                coeffs[target] = s
            else:
                coeffs.pop(target, None)
    return LaurentVector(field, coeffs)


def pi_f(weight, k):
    """The invariant Pi_f(k): the product of f(k - i*m) over 0 <= i < n.

    Requires coprime shift parameters; satisfies Pi_f(k) = q^k Pi_f(0).
    """
    if weight.d != 1:
        raise NotCoprimeError("the invariant needs gcd(m, n) = 1")
    value = weight.field.one
    for i in range(weight.n):
        value = value * f_eval(weight, k - i * weight.m)
    return value


def is_irreducible(weight):
    """V^{m,n}_f is irreducible exactly when gcd(m, n) = 1."""
    return weight.d == 1


def cyclicity_witness(weight, start, target):
    """Monomials x^a y^b with positive exponents whose composite maps
    t^start to a nonzero multiple of t^target (coprime case).

    The index shift of x^a y^b is n*a - m*b; a single monomial suffices,
    found from a Bezout pair shifted by the minimal j >= 0 that makes both
    exponents strictly positive.  The result is verified by direct action.
    """
    if weight.d != 1:
        raise NotCoprimeError("cyclicity needs gcd(m, n) = 1")
    m, n = weight.m, weight.n
    shift = target - start
    algebra = QuantumPlane(weight.field)
    if shift == 0:
        return []
    u, v = _bezout(n, m)  # u*n + v*m = 1
    a0, b0 = u * shift, -v * shift
    assert n * a0 - m * b0 == shift
    j = max(0, -(-(1 - a0) // m), -(-(1 - b0) // n))
    a, b = a0 + j * m, b0 + j * n
    assert a > 0 and b > 0
    witness = [algebra.monomial(a, b)]
    image = LaurentVector.basis(weight.field, start)
    for step in witness:
        image = act_qp(step, image, weight)
    assert image.support() == [target] and not image.is_zero()
    return witness


def _bezout(a, b):
    """(u, v) with u*a + v*b = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_u, u = u, old_u - quot * u
        old_v, v = v, old_v - quot * v
    return old_u, old_v


def annihilator_generator(weight, k):
    """The generator x^m y^n - q^k Pi_f(0) of the annihilator of t^k."""
    if weight.d != 1:
        raise NotCoprimeError("the annihilator description needs gcd(m, n) = 1")
    algebra = QuantumPlane(weight.field)
    c = weight.field.q_pow(k) * pi_f(weight, 0)
    return algebra.from_terms({(weight.m, weight.n): weight.field.one, (0, 0): -c})


@dataclass(frozen=True)
class GradeFactorization:
    """One graded component written as x^a y^b * w(theta) with theta = x^m y^n,
    together with the quotient of w by (theta - eigenvalue)."""

    grade: int
    a: int
    b: int
    w_coeffs: tuple
    quotient: tuple
    eigenvalue: object


class AnnihilatorResult:
    """Membership of an element in the annihilator of t^k, with a structural
    certificate (per-grade factorizations) when the element is a member."""

    def __init__(self, member, certificate=None):
        self.member = member
        self.certificate = certificate

    def __bool__(self):
        return self.member

    def __repr__(self):
        return "member" if self.member else "not a member"


def in_annihilator(u, weight, k):
    """Decide whether u annihilates t^k.

    The boolean is decided by the action itself.  When the element is a
    member, each graded component is factored as x^a y^b * w(theta) with
    theta = x^m y^n, and w is divided by (theta - q^k Pi_f(0)); the division
    is exact precisely for members.
    """
    if weight.d != 1:
        raise NotCoprimeError("the annihilator description needs gcd(m, n) = 1")
    member = act_qp(u, LaurentVector.basis(weight.field, k), weight).is_zero()
    if not member:
        return AnnihilatorResult(False)
    field = weight.field
    m, n = weight.m, weight.n
    eigenvalue = field.q_pow(k) * pi_f(weight, 0)
    algebra = QuantumPlane(field)
    theta = algebra.monomial(m, n)
    certificate = []
    for grade, component in grade_split(u, m, n).items():
        a0 = min(a for (a, _) in component.terms)
        b0 = min(b for (_, b) in component.terms)
        xi_max = 0
        for (a, b) in component.terms:
            assert (a - a0) % m == 0 and (b - b0) % n == 0
            assert (a - a0) // m == (b - b0) // n
            xi_max = max(xi_max, (a - a0) // m)
        # coefficients of x^a0 y^b0 * theta^xi, read off the shipped product
        cursor = algebra.monomial(a0, b0)
        w = []
        for xi in range(xi_max + 1):
            ((key, scale),) = cursor.terms.items()
            w.append(component.terms.get(key, field.zero) / scale)
            cursor = cursor * theta
        quotient, remainder = _divide_linear(w, eigenvalue, field)
        assert not remainder, "member without an exact factorization"
        certificate.append(
            GradeFactorization(grade, a0, b0, tuple(w), tuple(quotient), eigenvalue)
        )
    return AnnihilatorResult(True, certificate)


def _divide_linear(coeffs, root, field):
    """Divide a polynomial (ascending coefficients) by (theta - root)."""
    quotient = [field.zero] * max(0, len(coeffs) - 1)
    carry = field.zero
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + root * carry
        quotient[i - 1] = carry
    remainder = coeffs[0] + root * carry if coeffs else field.zero
    return quotient, remainder


def iso_check(weight, other):
    """Isomorphism of V^{m,n}_f and V^{m',n'}_{f'}.

    The shift parameters must agree; for coprime parameters the invariants
    must differ by an integer power of q, and in general the multisets of
    summand invariants must match coset-wise.
    """
    if weight.field != other.field:
        raise ValueError("weights over different fields")
    if (weight.m, weight.n) != (other.m, other.n):
        return False
    if weight.d == 1:
        return weight.field.log_q(pi_f(other, 0) / pi_f(weight, 0)) is not None
    mine = [pi_f(s, 0) for s, _ in decompose(weight)]
    theirs = [pi_f(s, 0) for s, _ in decompose(other)]
    for value in mine:
        for i, candidate in enumerate(theirs):
            if weight.field.log_q(candidate / value) is not None:
                del theirs[i]
                break
        else:
            return False
    return True


def decompose(weight):
    """Split V^{m,n}_f into d = gcd(m, n) irreducible summands.

    Returns pairs (summand weight, basis embedding): the k-th summand is
    V^{m/d,n/d}_{f_k} with f_k(i) = f(k + i*d), embedded along
    t^i -> t^(k + i*d).  Each embedding intertwines the two actions.
    """
    d = weight.d
    field = weight.field
    m, n = weight.m // d, weight.n // d
    summands = []
    for k in range(d):
        base = tuple(f_eval(weight, k + i * d) for i in range(n))
        summands.append((FWeight(field, m, n, base), BasisEmbedding(k, d)))
    return summands


class WeightAnalysis:
    """Whether the representation is semisimple over the subalgebra generated
    by H = xy, with an explicit certificate either way.

    For m = n the certificate lists H-eigenvalues of the window basis; for
    m != n it records the strictly growing supports of H^l applied to t^0.
    """

    def __init__(self, is_weight, eigenvalues=None, orbit_supports=None):
        self.is_weight = is_weight
        self.eigenvalues = eigenvalues
        self.orbit_supports = orbit_supports

    def __bool__(self):
        return self.is_weight

    def __repr__(self):
        return "weight" if self.is_weight else "not weight"


def is_weight_qp(weight, window=None, depth=10):
    """V^{m,n}_f is a weight representation exactly when m = n."""
    field = weight.field
    window = default_window() if window is None else window
    algebra = QuantumPlane(field)
    h = algebra.monomial(1, 1)
    if weight.m == weight.n:
        eigenvalues = []
        for i in range(-window, window + 1):
            image = act_qp(h, LaurentVector.basis(field, i), weight)
            assert image.support() == [i]
            eigenvalues.append((i, image.coefficient(i)))
            assert image.coefficient(i) == f_eval(weight, i)
        return WeightAnalysis(True, eigenvalues=tuple(eigenvalues))
    supports = []
    vector = LaurentVector.basis(field, 0)
    for step in range(depth + 1):
        supports.append((step, tuple(vector.support())))
        assert vector.support() == [step * (weight.n - weight.m)]
        vector = act_qp(h, vector, weight)
    return WeightAnalysis(False, orbit_supports=tuple(supports))


class EigenvectorProbe:
    """Result of the search for x- or y-eigenvectors: always negative, with
    the support-shift witness recorded for the checked window."""

    def __init__(self, window, shifts):
        self.has_eigenvector = False
        self.window = window
        self.shifts = shifts

    def __bool__(self):
        return False

    def __repr__(self):
        return "no eigenvectors on window %d" % self.window


def whittaker_eigenvector_probe(weight, window=None):
    """Neither x nor y has an eigenvector: x shifts every support up by n
    and y shifts it down by m, so no nonzero vector can be fixed up to
    scalar.  Verified exhaustively on the window basis and on sample
    two-term vectors."""
    field = weight.field
    window = default_window() if window is None else window
    algebra = QuantumPlane(field)
    shifts = []
    samples = [LaurentVector.basis(field, i) for i in range(-window, window + 1)]
    samples.append(
        LaurentVector.basis(field, 0) + LaurentVector.basis(field, 3)
    )
    samples.append(
        LaurentVector.basis(field, -2) + LaurentVector.basis(field, 1, 2)
    )
    for vector in samples:
        x_image = act_qp(algebra.x, vector, weight)
        y_image = act_qp(algebra.y, vector, weight)
        expected_x = [i + weight.n for i in vector.support()]
        expected_y = [i - weight.m for i in vector.support()]
        assert x_image.support() == expected_x
        assert y_image.support() == expected_y
        assert x_image.support() != vector.support()
        assert y_image.support() != vector.support()
        shifts.append((tuple(vector.support()), tuple(x_image.support()), tuple(y_image.support())))
    return EigenvectorProbe(window, tuple(shifts))

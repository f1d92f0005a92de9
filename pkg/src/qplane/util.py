"""Small shared utilities: window configuration and exact linear algebra."""

import os

from .errors import InvalidParamError

WINDOW_ENV = "QPLANE_WINDOW"


def default_window():
    """Half-width of the basis window used by property probes.

    Defaults to 20; can be overridden through the QPLANE_WINDOW environment
    variable.
    """
    raw = os.environ.get(WINDOW_ENV)
    if raw is None:
        return 20
    try:
        window = int(raw)
    except ValueError:
        raise InvalidParamError("%s must be a positive integer, got %r" % (WINDOW_ENV, raw))
    if window < 1:
        raise InvalidParamError("%s must be >= 1, got %d" % (WINDOW_ENV, window))
    return window


def linear_dependence(vectors, zero, one):
    """Search for an exact linear relation among sparse vectors.

    ``vectors`` is a sequence of dicts mapping (hashable, orderable) column
    keys to field scalars.  Returns a list of coefficients, not all zero,
    with ``sum(c_i * v_i) == 0``, or None if the vectors are independent.
    Gaussian elimination with the smallest available key as pivot, so the
    answer is deterministic.
    """
    basis = []  # (pivot key, reduced vector with pivot coefficient 1, combo)
    for idx, vec in enumerate(vectors):
        current = dict(vec)
        combo = [zero] * len(vectors)
        combo[idx] = one
        for pivot, bvec, bcombo in basis:
            factor = current.get(pivot)
            if factor is None or not factor:
                continue
            for key, value in bvec.items():
                updated = current.get(key, zero) - factor * value
                if updated:
                    current[key] = updated
                else:
                    current.pop(key, None)
            for j, value in enumerate(bcombo):
                if value:
                    combo[j] = combo[j] - factor * value
        current = {k: v for k, v in current.items() if v}
        if not current:
            return combo
        pivot = min(current)
        scale = one / current[pivot]
        current = {k: v * scale for k, v in current.items()}
        combo = [c * scale for c in combo]
        basis.append((pivot, current, combo))
    return None


def exact_rank(vectors, zero, one):
    """Rank of a family of sparse vectors over an exact field."""
    basis = []
    for vec in vectors:
        current = {k: v for k, v in vec.items() if v}
        for pivot, bvec in basis:
            factor = current.get(pivot)
            if factor is None or not factor:
                continue
            for key, value in bvec.items():
                updated = current.get(key, zero) - factor * value
                if updated:
                    current[key] = updated
                else:
                    current.pop(key, None)
        if current:
            pivot = min(current)
            scale = one / current[pivot]
            basis.append((pivot, {k: v * scale for k, v in current.items()}))
    return len(basis)

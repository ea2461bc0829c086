"""Root lattice of a simply laced diagram: exact vectors, reflections,
real roots, and the Weyl chamber.

Vectors live in the simple-root basis as tuples (int for lattice vectors,
Fraction where rational coordinates are unavoidable). The inner product
is the generalized Cartan matrix; simple roots have norm 2, and the form
has signature (rank-1, 1) exactly when the diagram is hyperbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from . import kernels, rational
from .diagram import Diagram
from .errors import DomainError, InvariantViolation

IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]
WeylWord = Tuple[int, ...]


def _check_vector(d: Diagram, v: Sequence) -> Tuple:
    if len(v) != d.rank:
        raise DomainError(f"vector length {len(v)} does not match rank {d.rank}")
    return tuple(v)


def inner(d: Diagram, v: Sequence, w: Sequence):
    """Inner product in the simple-root basis: v . gcm . w."""
    v = _check_vector(d, v)
    w = _check_vector(d, w)
    g = d.gcm
    total = 0
    for i, vi in enumerate(v):
        if vi:
            row = g[i]
            s = 0
            for j, wj in enumerate(w):
                if wj:
                    s += row[j] * wj
            total += vi * s
    return total


def norm(d: Diagram, v: Sequence):
    return inner(d, v, v)


def height(v: Sequence) -> int:
    """Sum of absolute coordinates; 1 exactly on simple roots and their
    negatives."""
    return sum(abs(x) for x in v)


def signature(d: Diagram) -> Tuple[int, int, int]:
    """Exact inertia (n_plus, n_minus, n_zero) of the root-lattice form."""
    return kernels.inertia(d.gcm)


def reflect(d: Diagram, i: int, v: Sequence) -> Tuple:
    """Simple reflection at node i: only coordinate i changes, by the
    pairing with the simple root there."""
    v = _check_vector(d, v)
    if not (0 <= i < d.rank):
        raise DomainError(f"node {i} out of range")
    c = sum(d.gcm[i][j] * v[j] for j in range(d.rank) if v[j])
    if c == 0:
        return v
    out = list(v)
    out[i] = out[i] - c
    return tuple(out)


def apply_word(d: Diagram, word: Sequence[int], v: Sequence) -> Tuple:
    """Apply simple reflections in list order (word[0] acts first)."""
    out = _check_vector(d, v)
    for i in word:
        out = reflect(d, i, out)
    return out


@lru_cache(maxsize=None)
def fundamental_weights(d: Diagram) -> Tuple[RatVector, ...]:
    """Weights w_i with <w_i, alpha_j> = -delta_ij, as columns of -gcm^-1.

    The sign convention makes each weight pair nonpositively with every
    simple root, so the weights span the closed dominant chamber. Affine
    diagrams have a singular form and no weights (error).
    """
    try:
        inv = rational.inverse(d.gcm)
    except rational.SingularMatrixError:
        raise DomainError("fundamental weights need a nondegenerate form")
    r = d.rank
    return tuple(tuple(-inv[i][j] for i in range(r)) for j in range(r))


@lru_cache(maxsize=None)
def rho_star(d: Diagram) -> RatVector:
    """Sum of the fundamental weights: interior point of the dominant
    chamber; timelike for every hyperbolic diagram, where it orients the
    future light cone."""
    ws = fundamental_weights(d)
    v = tuple(sum(col) for col in zip(*ws))
    _, neg, zero = signature(d)
    if neg != 1 or zero != 0:
        raise DomainError("future cone needs Lorentzian signature")
    if not norm(d, v) < 0:
        raise DomainError("dominant chamber is not timelike for this diagram")
    return v


def in_future_cone(d: Diagram, v: Sequence) -> bool:
    """True iff v is timelike and on the chamber side of the light cone."""
    v = _check_vector(d, v)
    return norm(d, v) < 0 and inner(d, v, rho_star(d)) < 0


def in_chamber(d: Diagram, v: Sequence) -> bool:
    """True iff v pairs nonpositively with every simple root."""
    v = _check_vector(d, v)
    return all(inner_simple(d, v, i) <= 0 for i in range(d.rank))


def inner_simple(d: Diagram, v: Sequence, i: int):
    return sum(d.gcm[i][j] * v[j] for j in range(d.rank) if v[j])


@dataclass(frozen=True)
class ChamberReduction:
    vector: Tuple
    word: WeylWord
    negated: bool


def weyl_reduce_to_chamber(d: Diagram, v: Sequence) -> ChamberReduction:
    """Reflect a causal vector into the closed dominant chamber.

    Past-cone inputs are negated first (flagged in the result). The word
    w satisfies apply_word(d, w, input) == vector, reading reflections
    left to right; reversing the word inverts the map.

    Termination is certified: each step increases v . rho_star by the
    (positive) pairing used, the values lie in a discrete lattice, and
    they are bounded above by 0 on the future cone.
    """
    v = _check_vector(d, v)
    n = norm(d, v)
    if n > 0:
        raise DomainError("spacelike vectors cannot be chamber-reduced")
    if all(x == 0 for x in v):
        return ChamberReduction(v, (), False)
    rs = rho_star(d)
    s = inner(d, v, rs)
    negated = False
    if s > 0:
        v = tuple(-x for x in v)
        negated = True
    elif s == 0:
        raise InvariantViolation("nonzero causal vector orthogonal to rho_star")
    word: List[int] = []
    while True:
        i = next((k for k in range(d.rank) if inner_simple(d, v, k) > 0), None)
        if i is None:
            return ChamberReduction(v, tuple(word), negated)
        v = reflect(d, i, v)
        word.append(i)


def is_real_root(d: Diagram, v: Sequence) -> bool:
    """True iff v is in the reflection orbit of the simple roots.

    Real roots have norm 2, never mix coordinate signs, and descend to a
    simple root by always reflecting at the lowest node with positive
    pairing.
    """
    v = _check_vector(d, v)
    if any(not isinstance(x, int) for x in v):
        return False
    has_pos = any(x > 0 for x in v)
    has_neg = any(x < 0 for x in v)
    if has_pos and has_neg or not (has_pos or has_neg):
        return False
    if norm(d, v) != 2:
        return False
    w = v if has_pos else tuple(-x for x in v)
    return kernels.positive_root_test(d.gcm, w)


def real_roots_up_to_height(d: Diagram, h: int) -> List[IntVector]:
    """All real roots of height <= h, sorted; symmetric under negation."""
    if h < 0:
        raise DomainError("height bound must be nonnegative")
    return kernels.roots_up_to_height(d.gcm, h)

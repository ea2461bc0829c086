"""Hyperboloid-model geometry over exact Gram data.

A symmetric matrix of signature (n-1, 1) makes the timelike vectors a
two-sheeted cone; points of hyperbolic space are timelike rays, and
cosh^2 of the distance between two rays is (x.y)^2 / (x.x * y.y), an
exact rational number whenever the inputs are. All functions take the
Gram matrix explicitly so they work both on a diagram's root form and on
small abstract models.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import kernels, rational
from .diagram import Diagram
from .errors import DomainError, InvariantViolation
from .lattice import fundamental_weights

BOUND = Fraction(4, 3)

Form = Sequence[Sequence]


def form_inner(form: Form, v: Sequence, w: Sequence) -> Fraction:
    n = len(form)
    if len(v) != n or len(w) != n:
        raise DomainError("vector length does not match the form")
    total = Fraction(0)
    for i in range(n):
        if v[i]:
            row = form[i]
            s = sum(Fraction(row[j]) * w[j] for j in range(n) if w[j])
            total += Fraction(v[i]) * s
    return total


def project_orthogonal(form: Form, v: Sequence, span: Sequence[Sequence]) -> Tuple[Fraction, ...]:
    """Component of v orthogonal to every vector in span.

    Solves the span's Gram system exactly; requires the span vectors to be
    linearly independent with nondegenerate Gram matrix.
    """
    if not span:
        return tuple(Fraction(x) for x in v)
    gram = [[form_inner(form, a, b) for b in span] for a in span]
    rhs = [form_inner(form, v, a) for a in span]
    try:
        coeffs = rational.solve(gram, rhs)
    except rational.SingularMatrixError:
        raise DomainError("span has a degenerate Gram matrix")
    out = [Fraction(x) for x in v]
    for c, vec in zip(coeffs, span):
        if c:
            for i in range(len(out)):
                out[i] -= c * vec[i]
    return tuple(out)


def cosh2_point_distance(form: Form, x: Sequence, y: Sequence) -> Fraction:
    """cosh^2 of the hyperbolic distance between two timelike rays on the
    same sheet of the cone."""
    xx = form_inner(form, x, x)
    yy = form_inner(form, y, y)
    if xx >= 0 or yy >= 0:
        raise DomainError("cosh2_point_distance needs timelike vectors")
    xy = form_inner(form, x, y)
    if xy >= 0:
        raise DomainError("points lie on opposite sheets of the cone")
    value = xy * xy / (xx * yy)
    if value < 1:
        raise InvariantViolation("cosh^2 below 1 for a point distance")
    return value


def cosh2_point_to_subspace(form: Form, x: Sequence, normals: Sequence[Sequence]) -> Fraction:
    """cosh^2 of the distance from a timelike ray to the hyperbolic locus
    orthogonal to all the given normal vectors.

    The orthogonal part x* of x against the normals is the closest-point
    direction; cosh^2 equals x*.x* / x.x and is 1 exactly when x already
    lies in the locus.
    """
    xx = form_inner(form, x, x)
    if xx >= 0:
        raise DomainError("cosh2_point_to_subspace needs a timelike point")
    xs = project_orthogonal(form, x, normals)
    ss = form_inner(form, xs, xs)
    if ss >= 0:
        raise DomainError("projection left the timelike cone; distance undefined")
    value = ss / xx
    if value < 1:
        raise InvariantViolation("cosh^2 below 1 for a subspace distance")
    return value


@dataclass(frozen=True)
class FacetEntry:
    node: int
    neighbor: int
    cosh2: Fraction
    attains_bound: bool


@dataclass(frozen=True)
class FacetReport:
    diagram: str
    entries: Tuple[FacetEntry, ...]
    max_cosh2: Fraction
    bound_holds: bool

    @property
    def equality_pairs(self) -> List[Tuple[int, int]]:
        return [(e.node, e.neighbor) for e in self.entries if e.attains_bound]


def facet_check(d: Diagram) -> FacetReport:
    """Distance bound between a facet's weight point and its neighbor walls.

    For each node i, q = sum of the fundamental weights of i's neighbors
    is a timelike point on wall i; for each neighbor j, the distance from
    q to the codimension-2 locus orthogonal to both walls satisfies
    cosh^2 <= 4/3, with equality flagged. Violation of the bound is an
    invariant failure, not bad input.
    """
    weights = fundamental_weights(d)
    form = d.gcm
    entries = []
    simple = [tuple(int(a == b) for b in range(d.rank)) for a in range(d.rank)]
    for i in range(d.rank):
        nbrs = sorted(d.neighbor_sets[i])
        if not nbrs:
            continue
        q = tuple(sum(weights[j][t] for j in nbrs) for t in range(d.rank))
        if form_inner(form, q, simple[i]) != 0:
            raise InvariantViolation("facet point escaped its wall")
        for j in nbrs:
            value = cosh2_point_to_subspace(form, q, [simple[i], simple[j]])
            if value > BOUND:
                raise InvariantViolation(
                    f"facet bound exceeded at ({d.name or d.rank}, {i}, {j}): {value}"
                )
            entries.append(FacetEntry(i, j, value, value == BOUND))
    report = FacetReport(
        diagram=d.name or f"rank{d.rank}",
        entries=tuple(entries),
        max_cosh2=max(e.cosh2 for e in entries),
        bound_holds=all(e.cosh2 <= BOUND for e in entries),
    )
    return report


def _pq_gram(k: int, m: int) -> Tuple[Tuple[int, ...], ...]:
    return ((2, 1, k), (1, 2, m), (k, m, 2))


def _pq_check_domain(k: int, m: int) -> None:
    if k < 3:
        raise DomainError("the two-root configuration needs pairing k >= 3")
    g = _pq_gram(k, m)
    if kernels.inertia(g) != (2, 1, 0):
        raise DomainError("Gram matrix does not have signature (2,1)")


def pq_cosh2(k: int, m: int) -> Fraction:
    """Closed form for cosh^2 of the distance used to separate a height-
    reduction candidate from the base root pair.

    Exact value (4/3) * (3 + k*m - k^2 - m^2) / (4 - k^2) on the signature
    (2,1) domain; stays above 4/3 and approaches it as k grows.
    """
    _pq_check_domain(k, m)
    return Fraction(4, 3) * Fraction(3 + k * m - k * k - m * m, 4 - k * k)


def pq_cosh2_via_projection(k: int, m: int) -> Fraction:
    """Same quantity computed through the generic projection machinery in
    the abstract rank-3 Gram model; cross-checks the closed form.

    With basis vectors a, a', b (pairings a.a' = 1, a.b = k, a'.b = m),
    p is b made orthogonal to a, e = a - 2a' has norm 6, and q is p made
    orthogonal to e; the value is cosh^2 d(p, q).
    """
    _pq_check_domain(k, m)
    form = _pq_gram(k, m)
    a = (1, 0, 0)
    aprime = (0, 1, 0)
    b = (0, 0, 1)
    p = project_orthogonal(form, b, [a])
    e = tuple(x - 2 * y for x, y in zip(a, aprime))
    if form_inner(form, e, e) != 6:
        raise InvariantViolation("norm of the splitting direction is not 6")
    q = project_orthogonal(form, p, [e])
    return cosh2_point_distance(form, p, q)

"""Facet distance reports and the closed-form separation distance."""

import math
import random
from fractions import Fraction

import pytest

from kmx.diagram import catalog, diagram_by_name
from kmx.errors import DomainError
from kmx.geometry import (
    BOUND,
    cosh2_point_distance,
    cosh2_point_to_subspace,
    facet_check,
    form_inner,
    pq_cosh2,
    pq_cosh2_via_projection,
    project_orthogonal,
)


def test_form_inner_is_the_gcm_pairing():
    d = diagram_by_name("rank4-1")
    rng = random.Random(7)
    for _ in range(30):
        v = tuple(rng.randint(-3, 3) for _ in range(4))
        w = tuple(rng.randint(-3, 3) for _ in range(4))
        direct = sum(d.gcm[i][j] * v[i] * w[j] for i in range(4) for j in range(4))
        assert form_inner(d.gcm, v, w) == direct
        assert form_inner(d.gcm, v, w) == form_inner(d.gcm, w, v)


def test_project_orthogonal_kills_the_span_components():
    d = diagram_by_name("E10")
    rng = random.Random(17)
    simple = [tuple(int(a == b) for b in range(10)) for a in range(10)]
    for _ in range(20):
        v = tuple(rng.randint(-3, 3) for _ in range(10))
        span = [simple[rng.randrange(10)], simple[rng.randrange(10)]]
        if form_inner(d.gcm, span[0], span[1]) ** 2 == 4:  # parallel pair
            continue
        p = project_orthogonal(d.gcm, v, span)
        for s in span:
            assert form_inner(d.gcm, p, s) == 0
        again = project_orthogonal(d.gcm, p, span)
        assert again == p


def test_cosh2_point_distance_basics():
    # signature (1,1) toy plane: rational (cosh t, sinh t) points, norm -1
    form = ((-1, 0), (0, 1))
    p = (Fraction(5, 4), Fraction(3, 4))
    q = (Fraction(5, 3), Fraction(4, 3))
    assert form_inner(form, p, p) == -1
    assert form_inner(form, q, q) == -1
    assert cosh2_point_distance(form, p, p) == 1
    d2 = cosh2_point_distance(form, p, q)
    assert d2 == Fraction(169, 144)  # (13/12)^2 via the pairing
    with pytest.raises(DomainError):
        cosh2_point_distance(form, (1, 1), (2, 1))  # null first point


def test_facet_reports_all_catalog_diagrams():
    global_max = Fraction(0)
    for d in catalog():
        rep = facet_check(d)
        assert rep.bound_holds
        assert rep.max_cosh2 <= BOUND
        assert rep.equality_pairs, d.name  # the bound is attained in every diagram
        global_max = max(global_max, rep.max_cosh2)
    assert global_max == BOUND == Fraction(4, 3)


def test_facet_values_rank4_3_frozen():
    rep = facet_check(diagram_by_name("rank4-3"))
    values = {(e.node, e.neighbor): e.cosh2 for e in rep.entries}
    assert values[(0, 1)] == Fraction(16, 15)
    assert values[(0, 2)] == Fraction(16, 15)
    assert values[(0, 3)] == Fraction(16, 15)
    assert values[(1, 0)] == Fraction(12, 11)
    assert values[(1, 2)] == Fraction(12, 11)
    assert values[(2, 0)] == Fraction(12, 11)
    assert values[(2, 1)] == Fraction(12, 11)
    assert values[(3, 0)] == Fraction(4, 3)
    assert rep.equality_pairs == [(3, 0)]
    assert len(rep.entries) == 8


def test_bound_float_rendering():
    angle = math.acosh(math.sqrt(4 / 3))
    assert abs(angle - 0.549) <= 1e-3
    assert abs(angle - 0.5493061443340548) < 1e-15


def test_pq_closed_form_known_value_and_dual_route():
    assert pq_cosh2(3, 0) == Fraction(8, 5)
    assert pq_cosh2(3, 0) - BOUND == Fraction(4, 15)
    for k in range(3, 13):
        for m in range(-6, 1):
            v1 = pq_cosh2(k, m)
            v2 = pq_cosh2_via_projection(k, m)
            assert v1 == v2, (k, m)
            assert v1 > BOUND


def test_pq_monotone_toward_the_bound():
    for m in range(-6, 1):
        for k in range(3, 12):
            assert pq_cosh2(k + 1, m) < pq_cosh2(k, m)
    for k in range(3, 13):
        for m in range(-6, 0):
            assert pq_cosh2(k, m + 1) <= pq_cosh2(k, m)
    gap = pq_cosh2(200, 0) - BOUND
    assert Fraction(0) < gap < Fraction(1, 100)
    assert pq_cosh2(200, 0) == pq_cosh2_via_projection(200, 0)


def test_pq_domain_errors():
    with pytest.raises(DomainError):
        pq_cosh2(2, 0)
    with pytest.raises(DomainError):
        pq_cosh2_via_projection(1, -1)


def test_cosh2_point_to_subspace_matches_float_linear_algebra():
    """Independent numeric cross-check of the exact subspace distance."""
    d = diagram_by_name("rank4-3")
    rep = facet_check(d)
    form = d.gcm

    def finner(v, w):
        return sum(form[i][j] * v[i] * w[j] for i in range(4) for j in range(4))

    from kmx.lattice import fundamental_weights
    weights = fundamental_weights(d)
    simple = [tuple(int(a == b) for b in range(4)) for a in range(4)]
    for e in rep.entries:
        nbrs = sorted(d.neighbor_sets[e.node])
        q = tuple(float(sum(weights[j][t] for j in nbrs)) for t in range(4))
        normals = [simple[e.node], simple[e.neighbor]]
        # Gram-Schmidt in floats, then cosh^2 = qq' / qq with q' the part
        # of q orthogonal to both walls
        b0 = [float(x) for x in normals[0]]
        c = finner(normals[1], b0) / finner(b0, b0)
        b1 = [float(x) - c * y for x, y in zip(normals[1], b0)]
        p = list(q)
        for b in (b0, b1):
            coef = finner(p, b) / finner(b, b)
            p = [x - coef * y for x, y in zip(p, b)]
        numeric = finner(p, p) / finner(q, q)
        assert abs(numeric - float(e.cosh2)) < 1e-9
        exact = cosh2_point_to_subspace(form, tuple(
            Fraction(sum(weights[j][t] for j in nbrs)) for t in range(4)), normals)
        assert exact == e.cosh2

"""Diagram classification, the hyperbolicity test, and the enumeration."""

import random

import pytest

from kmx.diagram import (
    DiagramType,
    build_diagram,
    canonical_mask,
    catalog,
    catalog_aliases,
    catalog_names,
    classify,
    components,
    diagram_by_name,
    diagram_canonical_key,
    enumerate_hyperbolic,
    induced_subdiagram,
    is_connected,
    is_hyperbolic,
    is_isomorphic,
    relabel,
)
from kmx.errors import DomainError
from kmx.kernels import mask_from_edges
from kmx.lattice import signature


def path(n):
    return build_diagram(n, [(i, i + 1) for i in range(n - 1)], f"path{n}")


def cycle(n):
    return build_diagram(n, [(i, (i + 1) % n) for i in range(n)], f"cycle{n}")


def test_classify_trichotomy_on_known_families():
    for n in range(1, 9):
        assert classify(path(n)) is DiagramType.FINITE
    for n in range(3, 9):
        assert classify(cycle(n)) is DiagramType.AFFINE
    star = build_diagram(5, [(0, i) for i in range(1, 5)], "star")
    assert classify(star) is DiagramType.AFFINE  # four legs of length one
    assert classify(diagram_by_name("E10")) is DiagramType.INDEFINITE
    two_pieces = build_diagram(4, [(0, 1), (2, 3)])
    with pytest.raises(DomainError):
        classify(two_pieces)


def test_catalog_is_hyperbolic_with_lorentzian_signature():
    names = catalog_names()
    assert len(names) == 18
    for d in catalog():
        assert is_hyperbolic(d), d.name
        assert signature(d) == (d.rank - 1, 1, 0), d.name
    assert catalog_aliases() == {"E10": "rank10-2"}
    assert diagram_by_name("E10").name == "rank10-2"
    with pytest.raises(DomainError):
        diagram_by_name("rank99-1")


def test_is_hyperbolic_rejects_non_examples():
    assert not is_hyperbolic(path(5))
    assert not is_hyperbolic(cycle(6))
    assert not is_hyperbolic(build_diagram(4, [(0, 1), (2, 3)]))
    # a pendant node on E10 leaves an indefinite proper subdiagram
    e10 = diagram_by_name("E10")
    bigger = build_diagram(11, list(e10.edges) + [(9, 10)])
    assert classify(bigger) is DiagramType.INDEFINITE
    assert not is_hyperbolic(bigger)


def test_enumeration_matches_catalog_up_to_isomorphism():
    expected = {4: 3, 5: 2, 6: 3, 7: 2}
    for rank, count in expected.items():
        found = enumerate_hyperbolic(rank)
        assert len(found) == count, (rank, len(found))
        catalog_keys = {diagram_canonical_key(d) for d in catalog() if d.rank == rank}
        found_keys = {diagram_canonical_key(d) for d in found}
        assert found_keys == catalog_keys


def test_relabel_invariance_under_permutation():
    rng = random.Random(19)
    for d in (diagram_by_name("rank4-1"), diagram_by_name("rank6-2"),
              diagram_by_name("E10")):
        for _ in range(6):
            perm = list(range(d.rank))
            rng.shuffle(perm)
            e = relabel(d, perm)
            assert classify(e) is classify(d)
            assert is_hyperbolic(e) == is_hyperbolic(d)
            assert is_isomorphic(d, e)
            assert diagram_canonical_key(d) == diagram_canonical_key(e)


def test_catalog_entries_pairwise_non_isomorphic():
    ds = catalog()
    for i, a in enumerate(ds):
        for b in ds[i + 1:]:
            assert not is_isomorphic(a, b), (a.name, b.name)


def test_canonical_mask_is_permutation_invariant_minimum():
    rng = random.Random(3)
    d = diagram_by_name("rank4-2")
    base = mask_from_edges(d.rank, d.edges)
    canon = canonical_mask(d.rank, base)
    assert canon <= base
    for _ in range(10):
        perm = list(range(d.rank))
        rng.shuffle(perm)
        shuffled = mask_from_edges(
            d.rank, [(perm[i], perm[j]) for i, j in d.edges])
        assert canonical_mask(d.rank, shuffled) == canon


def test_components_and_induced_subdiagram():
    d = build_diagram(5, [(0, 1), (1, 2), (3, 4)])
    assert components(d) == [(0, 1, 2), (3, 4)]
    assert not is_connected(d)
    sub = induced_subdiagram(d, (0, 1, 3))
    assert sub.rank == 3
    assert sorted(sub.edges) == [(0, 1)]
    assert induced_subdiagram(d, (1, 0, 1)).rank == 2  # duplicates collapse
    with pytest.raises(DomainError):
        induced_subdiagram(d, (0, 9))
    with pytest.raises(DomainError):
        induced_subdiagram(d, ())


def test_build_diagram_validation():
    with pytest.raises(DomainError):
        build_diagram(0, [])
    with pytest.raises(DomainError):
        build_diagram(3, [(0, 0)])
    with pytest.raises(DomainError):
        build_diagram(3, [(0, 3)])
    with pytest.raises(DomainError):
        build_diagram(3, [(0, 1, 2)])
    d = build_diagram(3, [(1, 0), (0, 1)])
    assert sorted(d.edges) == [(0, 1)]


def test_gcm_shape():
    d = diagram_by_name("rank4-3")
    for i in range(d.rank):
        for j in range(d.rank):
            expected = 2 if i == j else (-1 if (min(i, j), max(i, j)) in d.edges else 0)
            assert d.gcm[i][j] == expected

"""Root-lattice arithmetic: pairings, reflections, chamber reduction, roots."""

import random
from fractions import Fraction

import pytest

from conftest import E10_NULL
from kmx.diagram import build_diagram, diagram_by_name
from kmx.errors import DomainError
from kmx.lattice import (
    apply_word,
    fundamental_weights,
    height,
    in_chamber,
    in_future_cone,
    inner,
    is_real_root,
    norm,
    real_roots_up_to_height,
    reflect,
    rho_star,
    signature,
    weyl_reduce_to_chamber,
)


def simple(d, i):
    return tuple(int(i == j) for j in range(d.rank))


def test_inner_and_norm_on_simple_roots():
    d = diagram_by_name("E10")
    for i in range(d.rank):
        assert norm(d, simple(d, i)) == 2
        for j in range(d.rank):
            expected = d.gcm[i][j]
            assert inner(d, simple(d, i), simple(d, j)) == expected
    with pytest.raises(DomainError):
        inner(d, (1, 0, 0), (0,) * 10)


def test_reflections_preserve_the_form():
    rng = random.Random(29)
    for name in ("rank4-1", "rank6-3", "E10"):
        d = diagram_by_name(name)
        for _ in range(40):
            v = tuple(rng.randint(-4, 4) for _ in range(d.rank))
            w = tuple(rng.randint(-4, 4) for _ in range(d.rank))
            i = rng.randrange(d.rank)
            assert inner(d, reflect(d, i, v), reflect(d, i, w)) == inner(d, v, w)
            assert reflect(d, i, reflect(d, i, v)) == v


def test_apply_word_composes_left_to_right():
    d = diagram_by_name("rank4-3")
    rng = random.Random(13)
    v = (1, 0, 0, 0)
    word = tuple(rng.randrange(d.rank) for _ in range(9))
    step = v
    for i in word:
        step = reflect(d, i, step)
    assert apply_word(d, word, v) == step
    assert apply_word(d, (), v) == v
    back = tuple(reversed(word))
    assert apply_word(d, back, apply_word(d, word, v)) == v


def test_fundamental_weights_pair_negatively_with_simples():
    for name in ("rank4-2", "E10"):
        d = diagram_by_name(name)
        ws = fundamental_weights(d)
        for i in range(d.rank):
            for j in range(d.rank):
                expected = Fraction(-1 if i == j else 0)
                assert inner(d, ws[i], simple(d, j)) == expected


def test_rho_star_is_a_timelike_chamber_point():
    d = diagram_by_name("E10")
    r = rho_star(d)
    assert norm(d, r) < 0
    assert in_chamber(d, r)
    assert in_future_cone(d, r)
    assert not in_future_cone(d, tuple(-x for x in r))
    assert not in_future_cone(d, simple(d, 0))  # spacelike
    hyperbolic4 = diagram_by_name("rank4-3")
    assert signature(hyperbolic4) == (3, 1, 0)
    with pytest.raises(DomainError):
        rho_star(build_diagram(3, [(0, 1), (1, 2)]))  # positive definite


def test_weyl_reduce_to_chamber_round_trips():
    d = diagram_by_name("E10")
    rng = random.Random(97)
    r = rho_star(d)
    for trial in range(12):
        word = tuple(rng.randrange(d.rank) for _ in range(rng.randint(0, 10)))
        moved = apply_word(d, word, r)
        if trial % 2:
            moved = tuple(-x for x in moved)
        red = weyl_reduce_to_chamber(d, moved)
        assert red.vector == r
        assert red.negated == bool(trial % 2)
        expect = tuple(-x for x in moved) if red.negated else moved
        assert apply_word(d, red.word, expect) == red.vector
    with pytest.raises(DomainError):
        weyl_reduce_to_chamber(d, simple(d, 3))  # spacelike
    zero = (0,) * d.rank
    assert weyl_reduce_to_chamber(d, zero).vector == zero


def test_null_vector_is_causal_but_not_a_root():
    d = diagram_by_name("E10")
    assert norm(d, E10_NULL) == 0
    assert not is_real_root(d, E10_NULL)
    red = weyl_reduce_to_chamber(d, E10_NULL)
    assert norm(d, red.vector) == 0
    for i in range(d.rank):
        # chamber side: nonpositive pairing with every simple root
        assert inner(d, red.vector, simple(d, i)) <= 0


def test_real_root_membership():
    d = diagram_by_name("E10")
    roots = real_roots_up_to_height(d, 8)
    assert len(roots) == 150
    for v in roots:
        assert is_real_root(d, v)
        assert norm(d, v) == 2
        assert is_real_root(d, tuple(-x for x in v))
    assert not is_real_root(d, (1, 0, 1) + (0,) * 7)   # disconnected support
    assert not is_real_root(d, (1, -1) + (0,) * 8)     # mixed signs
    assert not is_real_root(d, (0,) * 10)
    mixed_type = tuple(2 * x for x in roots[0])
    assert not is_real_root(d, mixed_type)             # norm 8
    with pytest.raises(DomainError):
        real_roots_up_to_height(d, -1)
    assert real_roots_up_to_height(d, 0) == []


def test_height_is_signed_coordinate_sum_magnitude():
    assert height((1, 2, 0, 1)) == 4
    assert height((-1, -2, 0, -1)) == 4
    d = diagram_by_name("rank4-1")
    for v in real_roots_up_to_height(d, 4):
        assert 1 <= height(v) <= 4

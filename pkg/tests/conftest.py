"""Shared helpers: deterministic construction of high-pairing root pairs."""

from __future__ import annotations

from kmx.diagram import diagram_by_name
from kmx.lattice import apply_word, inner, is_real_root, norm, real_roots_up_to_height

# Null direction of the affine subdiagram of E10 obtained by deleting the
# short-branch node 8: marks 2,4,6,5,4,3,2,1 along the long path and 3 on
# the degree-3 node. Pairing a translate of a real root against a root
# outside the affine support produces any pairing value on demand.
E10_NULL = (2, 4, 6, 5, 4, 3, 2, 1, 0, 3)


def e10_pair(k, rng=None, word_length=0):
    """A pair of E10 real roots with pairing exactly k >= 2, optionally
    transported by a random Weyl word (the pairing is invariant)."""
    d = diagram_by_name("E10")
    assert norm(d, E10_NULL) == 0
    if k == 2:
        b = tuple(int(i == 0) for i in range(10))
        a = tuple(p + q for p, q in zip(b, E10_NULL))
    else:
        seed = tuple(int(i == 7) for i in range(10))
        m = -1 - k
        a = tuple(p + m * q for p, q in zip(seed, E10_NULL))
        b = tuple(int(i == 8) for i in range(10))
    if rng is not None and word_length:
        w = tuple(rng.randrange(10) for _ in range(word_length))
        a = apply_word(d, w, a)
        b = apply_word(d, w, b)
    assert is_real_root(d, a) and is_real_root(d, b)
    assert inner(d, a, b) == k
    return a, b


def pairs_with_pairing(d, k, height=8):
    """All unordered pairs of distinct real roots of height <= `height`
    with pairing exactly k, in deterministic order."""
    roots = real_roots_up_to_height(d, height)
    out = []
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            if inner(d, a, b) == k:
                out.append((a, b))
    return out

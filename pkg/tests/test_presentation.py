"""Relation emission, counting conventions, locality, serialization."""

import dataclasses

import pytest

from kmx.diagram import diagram_by_name
from kmx.errors import DomainError
from kmx.presentation import (
    _Letters,
    check_locality,
    commutator_word,
    expected_relation_count,
    htilde_word,
    kac_moody_presentation,
    parse_presentation,
    serialize_presentation,
    steinberg_presentation,
    stilde_word,
    windowed_relations,
    word_inverse,
    word_str,
)
from kmx.ring import IntegerRing, PrimeField, ResidueRing, galois4, ring_from_string

E10_Z_SCHEMA_COUNTS = {
    "braid": 9,
    "s2_commutes_x": 10,
    "s2_inverts_s": 9,
    "s2_inverts_x": 9,
    "s_commute": 36,
    "s_from_x": 10,
    "s_x_commute": 36,
    "x_conj_commute": 9,
    "x_slide": 9,
    "x_x_chevalley": 9,
    "x_x_commute": 36,
}


def test_e10_integer_counts_frozen():
    d = diagram_by_name("E10")
    Z = IntegerRing()
    st = steinberg_presentation(d, Z)
    km = kac_moody_presentation(d, Z)
    assert st.count == 182 and km.count == 183
    assert st.counts_by_schema() == E10_Z_SCHEMA_COUNTS
    assert km.counts_by_schema() == dict(E10_Z_SCHEMA_COUNTS, torus=1)
    assert "torus" not in st.counts_by_schema()
    assert km.relations[-1].schema == "torus"


def test_rank4_counts_frozen():
    d = diagram_by_name("rank4-3")
    Z = IntegerRing()
    Z2 = ResidueRing(2)
    assert steinberg_presentation(d, Z).count == 38
    assert kac_moody_presentation(d, Z).count == 39
    assert steinberg_presentation(d, Z2).count == 154
    km2 = kac_moody_presentation(d, Z2)
    assert km2.count == 158
    assert km2.counts_by_schema()["torus"] == 4   # one unit, four nodes
    by = steinberg_presentation(d, Z2).counts_by_schema()
    assert by["additivity"] == 16 and by["x_x_chevalley"] == 32


def test_closed_form_matches_emission_everywhere():
    rings = [IntegerRing(), ResidueRing(2), ResidueRing(3), PrimeField(5), galois4()]
    for name in ("rank4-1", "rank5-1", "rank6-1", "E10"):
        d = diagram_by_name(name)
        for ring in rings:
            for kind, emit in (("steinberg", steinberg_presentation),
                               ("kac_moody", kac_moody_presentation)):
                pres = emit(d, ring)
                assert pres.count == expected_relation_count(d, ring, kind), (
                    name, ring.name, kind)


def test_check_locality_accepts_emitted_presentations():
    for name in ("rank4-3", "E10"):
        d = diagram_by_name(name)
        for ring in (IntegerRing(), ResidueRing(3), galois4()):
            for emit in (steinberg_presentation, kac_moody_presentation):
                pres = emit(d, ring)
                res = check_locality(d, pres, ring)
                assert res.ok, (name, ring.name, res.violation)


def test_check_locality_rejects_tampering():
    d = diagram_by_name("rank4-3")
    Z = IntegerRing()
    pres = steinberg_presentation(d, Z)

    def with_relation(idx, **changes):
        rels = list(pres.relations)
        rels[idx] = dataclasses.replace(rels[idx], **changes)
        return dataclasses.replace(pres, relations=tuple(rels))

    # a relation claiming the wrong node
    assert pres.relations[0].schema == "s2_commutes_x"
    res = check_locality(d, with_relation(0, nodes=(1,)), Z)
    assert not res.ok and "touches nodes" in res.violation

    # an edge schema relabeled onto a non-edge pair
    idx = next(i for i, r in enumerate(pres.relations) if r.schema == "s_commute")
    res = check_locality(d, with_relation(idx, schema="braid"), Z)
    assert not res.ok and "needs an edge" in res.violation

    # a non-edge schema relabeled onto an edge pair
    jdx = next(i for i, r in enumerate(pres.relations) if r.schema == "braid")
    res = check_locality(d, with_relation(jdx, schema="s_commute"), Z)
    assert not res.ok and "needs a non-edge" in res.violation

    # an unknown schema name
    res = check_locality(d, with_relation(0, schema="bogus"), Z)
    assert not res.ok and "unknown schema" in res.violation

    # a dropped relation breaks the closed-form count
    shorter = dataclasses.replace(pres, relations=pres.relations[:-1])
    res = check_locality(d, shorter, Z)
    assert not res.ok and "closed form" in res.violation


def test_commutator_word_conventions():
    u = ((("S", 0), 1),)
    v = ((("S", 1), 1),)
    assert commutator_word(u, v) == (
        (("S", 0), 1), (("S", 1), 1), (("S", 0), -1), (("S", 1), -1))
    assert commutator_word(u, v, "flipped") == (
        (("S", 1), 1), (("S", 0), 1), (("S", 1), -1), (("S", 0), -1))
    with pytest.raises(DomainError):
        commutator_word(u, v, "inverse")
    long_u = u + v
    inv = word_inverse(long_u)
    assert inv == ((("S", 1), -1), (("S", 0), -1))
    assert word_inverse(()) == ()


def test_reflection_and_torus_word_shapes():
    FZ = _Letters(IntegerRing())
    s = stilde_word(FZ, 0, 1)
    assert s == (
        (("X", 0), 1), (("S", 0), 1), (("X", 0), 1), (("S", 0), -1), (("X", 0), 1))
    h = htilde_word(FZ, 0, -1)
    assert h[:5] == (
        (("X", 0), -1), (("S", 0), 1), (("X", 0), -1), (("S", 0), -1), (("X", 0), -1))
    assert len(h) == 10
    F4 = _Letters(galois4())
    a = F4.ring.el_parse("a")
    sa = stilde_word(F4, 2, a)
    assert sa == (
        (("X", 2, "a"), 1), (("S", 2), 1), (("X", 2, "b"), 1),
        (("S", 2), -1), (("X", 2, "a"), 1))
    assert word_str(()) == "1"
    assert word_str(s) == "X0(1) S0 X0(1) S0^-1 X0(1)"


def test_serialization_round_trip_and_formats():
    d = diagram_by_name("rank4-3")
    for ring in (IntegerRing(), ResidueRing(2)):
        for emit in (steinberg_presentation, kac_moody_presentation):
            pres = emit(d, ring)
            text = serialize_presentation(pres, "json")
            back = parse_presentation(text)
            assert back == pres
            assert serialize_presentation(back, "json") == text
            assert serialize_presentation(emit(d, ring), "json") == text

    pres = kac_moody_presentation(d, IntegerRing())
    txt = serialize_presentation(pres, "text")
    first = txt.splitlines()[0]
    assert "kac_moody" in first and "relations=39" in first
    assert any(line.startswith("braid(") for line in txt.splitlines())
    assert "equivalent to S^4 = 1" in txt

    gap = serialize_presentation(pres, "gap_style")
    lines = gap.splitlines()
    assert lines[1].startswith("F := FreeGroup(")
    assert lines[1].count('"') == 2 * 8   # S0..S3 and X0..X3
    assert "rels := [" in lines
    assert lines[-1] == "];"
    with pytest.raises(DomainError):
        serialize_presentation(pres, "latex")


def test_windowed_relations_counts_frozen():
    d = diagram_by_name("rank4-3")
    rels2 = windowed_relations(d, 2)
    rels3 = windowed_relations(d, 3)
    assert len(rels2) == 670
    assert len(rels3) == 1246
    schemas = {r.schema for r in rels2}
    assert schemas == {"additivity", "s2_commutes_x", "s_x_commute", "x_x_commute",
                       "x_slide", "s2_inverts_x", "x_conj_commute", "x_x_chevalley"}
    with pytest.raises(DomainError):
        windowed_relations(d, 0)


def test_parse_presentation_from_ring_string_emission():
    d = diagram_by_name("rank4-1")
    ring = ring_from_string("F4")
    pres = steinberg_presentation(d, ring)
    text = serialize_presentation(pres, "json")
    back = parse_presentation(text)
    assert back.ring_name == "F4"
    assert back.count == pres.count == expected_relation_count(d, ring, "steinberg")
    assert back.relations == pres.relations

"""Exact ring arithmetic, table validation, and ring parsing."""

import json

import pytest

from kmx.errors import DomainError
from kmx.ring import (
    IntegerRing,
    PrimeField,
    ResidueRing,
    TableRing,
    galois4,
    ring_from_string,
    table_ring_from_dict,
)

F4_TABLE = {
    "elements": ["0", "1", "a", "b"],
    "add": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    "mul": [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]],
}


def test_integer_ring_basics():
    Z = IntegerRing()
    assert Z.name == "Z" and not Z.is_finite and Z.size is None
    assert Z.add(Z.from_int(3), Z.from_int(-5)) == -2
    assert Z.mul(7, 6) == 42
    assert Z.sub(4, 9) == -5
    assert Z.zero == 0 and Z.one == 1
    assert Z.units() == [1, -1]
    assert Z.is_unit(-1) and not Z.is_unit(2)
    assert Z.inv(-1) == -1
    with pytest.raises(DomainError):
        Z.inv(3)
    with pytest.raises(DomainError):
        Z.elements()
    assert Z.el_parse(Z.el_str(-17)) == -17


def test_residue_ring_arithmetic_and_units():
    R = ResidueRing(6)
    assert R.name == "Z/6" and R.is_finite and R.size == 6
    assert R.elements() == [0, 1, 2, 3, 4, 5]
    assert R.from_int(-1) == 5
    assert R.add(4, 5) == 3 and R.mul(4, 5) == 2 and R.neg(2) == 4
    assert R.sub(1, 5) == 2
    assert sorted(R.units()) == [1, 5]
    assert R.is_unit(5) and not R.is_unit(3)
    assert R.inv(5) == 5
    with pytest.raises(DomainError):
        R.inv(2)
    assert R.el_parse("11") == 5


def test_zero_ring_and_bad_modulus():
    R = ResidueRing(1)
    assert R.size == 1 and R.elements() == [0]
    assert R.zero == R.one == 0
    assert R.units() == [0]
    with pytest.raises(DomainError):
        ResidueRing(0)
    with pytest.raises(DomainError):
        ResidueRing(-3)


def test_prime_field():
    F = PrimeField(7)
    assert F.name == "F7" and F.size == 7
    assert sorted(F.units()) == [1, 2, 3, 4, 5, 6]
    assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 7))
    for bad in (6, 1, 0, -5, 9):
        with pytest.raises(DomainError):
            PrimeField(bad)


def test_galois4_field_structure():
    F = galois4()
    assert F.size == 4 and F.is_finite
    assert F.el_str(F.zero) == "0" and F.el_str(F.one) == "1"
    a = F.el_parse("a")
    assert F.add(a, a) == F.zero            # characteristic 2
    assert F.from_int(2) == F.zero
    assert F.mul(a, a) == F.el_parse("b")   # a^2 = b
    assert F.mul(a, F.mul(a, a)) == F.one   # a^3 = 1
    assert sorted(F.el_str(u) for u in F.units()) == ["1", "a", "b"]
    assert F.inv(a) == F.el_parse("b")
    for x in F.elements():
        assert F.el_parse(F.el_str(x)) == x
    with pytest.raises(DomainError):
        F.el_parse("c")


def test_table_ring_rejects_corrupted_tables():
    good = table_ring_from_dict(F4_TABLE)
    assert good.size == 4

    ragged = json.loads(json.dumps(F4_TABLE))
    ragged["add"][2] = [2, 3, 0]
    with pytest.raises(DomainError, match="4x4"):
        table_ring_from_dict(ragged)

    out_of_range = json.loads(json.dumps(F4_TABLE))
    out_of_range["mul"][1][1] = 9
    with pytest.raises(DomainError, match="out of range"):
        table_ring_from_dict(out_of_range)

    noncomm = json.loads(json.dumps(F4_TABLE))
    noncomm["mul"][2][3] = 2
    with pytest.raises(DomainError, match="not commutative"):
        table_ring_from_dict(noncomm)

    nonassoc = json.loads(json.dumps(F4_TABLE))
    nonassoc["add"][2][2] = 1
    nonassoc["add"][2][0] = 0
    nonassoc["add"][0][2] = 0
    with pytest.raises(DomainError, match="associative|identity|inverse"):
        table_ring_from_dict(nonassoc)

    no_one = json.loads(json.dumps(F4_TABLE))
    no_one["mul"][1] = [0, 0, 0, 0]
    no_one["mul"][0][1] = 0
    no_one["mul"][2][1] = 0
    no_one["mul"][3][1] = 0
    with pytest.raises(DomainError, match="identity|commutative|associative"):
        table_ring_from_dict(no_one)

    nondist = json.loads(json.dumps(F4_TABLE))
    nondist["mul"][2][2] = 2
    with pytest.raises(DomainError, match="distributive|commutative|associative"):
        table_ring_from_dict(nondist)

    dup = json.loads(json.dumps(F4_TABLE))
    dup["elements"] = ["0", "1", "a", "a"]
    with pytest.raises(DomainError, match="distinct"):
        table_ring_from_dict(dup)


def test_table_ring_from_int_walks_the_characteristic():
    F = galois4()
    assert [F.from_int(k) for k in range(-2, 5)] == [
        F.zero, F.one, F.zero, F.one, F.zero, F.one, F.zero
    ]
    R = TableRing(["0", "1", "2"],
                  [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
                  [[0, 0, 0], [0, 1, 2], [0, 2, 1]])
    assert R.from_int(5) == R.el_parse("2")
    assert R.from_int(-1) == R.el_parse("2")


def test_ring_from_string_forms(tmp_path):
    assert ring_from_string("Z").name == "Z"
    assert ring_from_string("Z/12").name == "Z/12"
    assert ring_from_string("F5").name == "F5"
    f4 = ring_from_string("F4")
    assert isinstance(f4, TableRing) and f4.size == 4
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(dict(F4_TABLE, name="custom4")))
    loaded = ring_from_string(str(path))
    assert loaded.name == "custom4" and loaded.size == 4
    for bad in ("F6", "Z/0", "Q", "Z/", "F", "z"):
        with pytest.raises(DomainError):
            ring_from_string(bad)

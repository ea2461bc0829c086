"""Exact commutative rings for presentations and matrix checks.

Ring elements are plain Python values: arbitrary integers over the
integers, residues 0..n-1 modulo n, and table indices for rings given by
explicit addition and multiplication tables. Table rings verify the full
commutative-ring axioms on construction, so a bad table is rejected up
front rather than producing wrong group relations later.
"""

from __future__ import annotations

import json
import re
from typing import List, Optional, Sequence

from .errors import DomainError


class Ring:
    name: str = "?"
    is_finite: bool = False
    size: Optional[int] = None

    def elements(self) -> List[object]:
        raise DomainError(f"{self.name} is not finite; cannot enumerate elements")

    def from_int(self, k: int) -> object:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def units(self) -> List[object]:
        one = self.one
        return [a for a in self.elements() if any(self.mul(a, b) == one for b in self.elements())]

    def is_unit(self, a) -> bool:
        one = self.one
        return any(self.mul(a, b) == one for b in self.elements())

    def inv(self, a):
        one = self.one
        for b in self.elements():
            if self.mul(a, b) == one:
                return b
        raise DomainError(f"{self.el_str(a)} is not a unit in {self.name}")

    def el_str(self, a) -> str:
        return str(a)

    def el_parse(self, s: str):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self.name}>"


class IntegerRing(Ring):
    name = "Z"
    is_finite = False
    size = None

    def from_int(self, k: int) -> int:
        return int(k)

    def add(self, a: int, b: int) -> int:
        return a + b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def units(self) -> List[int]:
        return [1, -1]

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def inv(self, a: int) -> int:
        if a in (1, -1):
            return a
        raise DomainError(f"{a} is not a unit in Z")

    def el_parse(self, s: str) -> int:
        return int(s)


class ResidueRing(Ring):
    """Integers modulo n >= 1; n = 1 is the zero ring."""

    def __init__(self, n: int):
        n = int(n)
        if n < 1:
            raise DomainError("modulus must be at least 1")
        self.n = n
        self.name = f"Z/{n}"
        self.is_finite = True
        self.size = n

    def elements(self) -> List[int]:
        return list(range(self.n))

    def from_int(self, k: int) -> int:
        return int(k) % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def neg(self, a: int) -> int:
        return (-a) % self.n

    def el_parse(self, s: str) -> int:
        return self.from_int(int(s))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


class PrimeField(ResidueRing):
    def __init__(self, p: int):
        if not _is_prime(int(p)):
            raise DomainError(f"{p} is not prime")
        super().__init__(p)
        self.name = f"F{p}"


class TableRing(Ring):
    """Finite commutative ring from explicit operation tables.

    Elements are indices into the label list; tables are size x size
    index matrices. All ring axioms are checked on construction.
    """

    def __init__(self, labels: Sequence[str], add: Sequence[Sequence[int]],
                 mul: Sequence[Sequence[int]], name: str = ""):
        self.labels = [str(x) for x in labels]
        n = len(self.labels)
        if n == 0 or len(set(self.labels)) != n:
            raise DomainError("table ring needs distinct, nonempty labels")
        self._add = [[int(x) for x in row] for row in add]
        self._mul = [[int(x) for x in row] for row in mul]
        self.name = name or "table:" + ",".join(self.labels)
        self.is_finite = True
        self.size = n
        self._verify()

    def _verify(self) -> None:
        n = self.size
        for tbl, op in ((self._add, "+"), (self._mul, "*")):
            if len(tbl) != n or any(len(row) != n for row in tbl):
                raise DomainError(f"{op} table is not {n}x{n}")
            for row in tbl:
                for x in row:
                    if not 0 <= x < n:
                        raise DomainError(f"{op} table entry {x} out of range")
            for i in range(n):
                for j in range(n):
                    if tbl[i][j] != tbl[j][i]:
                        raise DomainError(f"{op} table is not commutative")
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if tbl[tbl[i][j]][k] != tbl[i][tbl[j][k]]:
                            raise DomainError(f"{op} table is not associative")
        zero = self._identity(self._add, "additive")
        one = self._identity(self._mul, "multiplicative")
        self._zero_idx, self._one_idx = zero, one
        for i in range(n):
            if zero not in self._add[i]:
                raise DomainError(f"{self.labels[i]} has no additive inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self._mul[i][self._add[j][k]] != self._add[self._mul[i][j]][self._mul[i][k]]:
                        raise DomainError("tables are not distributive")
        if n > 1 and zero == one:
            raise DomainError("0 = 1 in a ring with more than one element")

    def _identity(self, tbl, kind: str) -> int:
        for e in range(self.size):
            if all(tbl[e][i] == i for i in range(self.size)):
                return e
        raise DomainError(f"table ring has no {kind} identity")

    def elements(self) -> List[int]:
        return list(range(self.size))

    def from_int(self, k: int) -> int:
        out = self._zero_idx
        step = self._one_idx if k >= 0 else self.neg(self._one_idx)
        for _ in range(abs(int(k))):
            out = self._add[out][step]
        return out

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        for b in range(self.size):
            if self._add[a][b] == self._zero_idx:
                return b
        raise DomainError("unreachable: verified ring lost an additive inverse")

    def el_str(self, a) -> str:
        return self.labels[a]

    def el_parse(self, s: str) -> int:
        try:
            return self.labels.index(s)
        except ValueError:
            raise DomainError(f"{s!r} is not an element of {self.name}") from None


def table_ring_from_dict(data: dict, name: str = "") -> TableRing:
    return TableRing(data["elements"], data["add"], data["mul"],
                     name or data.get("name", ""))


def galois4() -> TableRing:
    """The four-element field, loaded from the packaged table."""
    from importlib.resources import files

    data = json.loads(files("kmx.data").joinpath("f4.json").read_text())
    return table_ring_from_dict(data)


def ring_from_string(spec: str) -> Ring:
    """Parse "Z", "Z/<n>", "F<p>", "F4", or a path to a JSON table file."""
    spec = spec.strip()
    if spec == "Z":
        return IntegerRing()
    m = re.fullmatch(r"Z/(\d+)", spec)
    if m:
        return ResidueRing(int(m.group(1)))
    m = re.fullmatch(r"F(\d+)", spec)
    if m:
        q = int(m.group(1))
        if q == 4:
            return galois4()
        return PrimeField(q)
    if spec.endswith(".json"):
        with open(spec) as fh:
            return table_ring_from_dict(json.load(fh))
    raise DomainError(f"unrecognized ring {spec!r}")

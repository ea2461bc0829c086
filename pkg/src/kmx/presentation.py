"""Group presentations attached to a simply laced diagram over a ring.

Generators are S_i (a fixed lift of the reflection at node i) and the
root group elements x_i(t). Words are tuples of (symbol, exponent)
letters. Over the integers the x-letters fold the ring argument into the
exponent slot, x_i(t) = x_i(1)^t, so one letter ("X", i) with exponent t
stands for x_i(t); over a finite ring each x_i(r) is its own symbol
("X", i, label) and the exponent is an ordinary formal power.

Relation counting follows a fixed convention: over the integers each
schema is emitted once per node or per unordered pair; over a finite
ring every schema is instantiated at every choice of ring arguments, and
schemas whose two nodes play asymmetric roles are emitted in both
orders. The torus relations distinguish the two presentation kinds: the
Steinberg presentation omits them, the Kac-Moody one adds them.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .diagram import Diagram
from .errors import DomainError
from .pairs import CheckResult
from .ring import Ring

Symbol = Tuple
Letter = Tuple[Symbol, int]
Word = Tuple[Letter, ...]

NODE_SCHEMAS = ("additivity", "s2_commutes_x", "s_from_x")
UNJOINED_SCHEMAS = ("s_commute", "s_x_commute", "x_x_commute")
JOINED_SCHEMAS = ("braid", "s2_inverts_s", "x_slide", "s2_inverts_x",
                  "x_conj_commute", "x_x_chevalley")
TORUS_SCHEMA = "torus"
CONVENTIONS = ("standard", "flipped")


@dataclass(frozen=True)
class Relation:
    schema: str
    nodes: Tuple[int, ...]
    lhs: Word
    rhs: Word
    note: str = ""


@dataclass(frozen=True)
class Presentation:
    kind: str  # "steinberg" | "kac_moody"
    diagram_name: str
    rank: int
    edges: Tuple[Tuple[int, int], ...]
    ring_name: str
    relations: Tuple[Relation, ...]

    @property
    def count(self) -> int:
        return len(self.relations)

    def counts_by_schema(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for r in self.relations:
            out[r.schema] = out.get(r.schema, 0) + 1
        return out


class _Letters:
    """Letter factory binding the word encoding to the ring."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.finite = ring.is_finite

    def S(self, i: int, exp: int = 1) -> Letter:
        return (("S", i), exp)

    def X(self, i: int, val, exp: int = 1) -> Letter:
        if self.finite:
            return (("X", i, self.ring.el_str(val)), exp)
        return (("X", i), int(val) * exp)


def word_inverse(w: Word) -> Word:
    return tuple((sym, -e) for sym, e in reversed(w))


def commutator_word(u: Word, v: Word, convention: str = "standard") -> Word:
    """Commutator of two words; "standard" is u v u^-1 v^-1 and "flipped"
    is the reversed form v u v^-1 u^-1. The two differ by inverting the
    commutator, which flips the sign of its value, so relations built
    with the wrong convention fail wherever 2 is not zero."""
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown commutator convention {convention!r}")
    if convention == "standard":
        return u + v + word_inverse(u) + word_inverse(v)
    return v + u + word_inverse(v) + word_inverse(u)


def stilde_word(F: _Letters, i: int, a) -> Word:
    """Lift of the reflection at node i twisted by the unit a."""
    r = F.ring
    ai = r.inv(a)
    return (F.X(i, a), F.S(i), F.X(i, ai), F.S(i, -1), F.X(i, a))


def htilde_word(F: _Letters, i: int, a) -> Word:
    """Torus element at node i for the unit a."""
    r = F.ring
    return stilde_word(F, i, a) + stilde_word(F, i, r.from_int(-1))


def _node_relations(F: _Letters, d: Diagram, i: int,
                    convention: str) -> List[Relation]:
    r = F.ring
    out = []
    if F.finite:
        for t in r.elements():
            for u in r.elements():
                out.append(Relation(
                    "additivity", (i,),
                    (F.X(i, t), F.X(i, u)),
                    (F.X(i, r.add(t, u)),),
                ))
        args = r.elements()
    else:
        args = [1]
    for t in args:
        out.append(Relation(
            "s2_commutes_x", (i,),
            (F.S(i, 2), F.X(i, t), F.S(i, -2)),
            (F.X(i, t),),
        ))
    one = r.from_int(1)
    out.append(Relation(
        "s_from_x", (i,),
        (F.S(i),),
        (F.X(i, one), F.S(i), F.X(i, one), F.S(i, -1), F.X(i, one)),
    ))
    return out


def _unjoined_relations(F: _Letters, i: int, j: int,
                        convention: str) -> List[Relation]:
    r = F.ring
    out = [Relation("s_commute", (i, j),
                    (F.S(i), F.S(j)), (F.S(j), F.S(i)))]
    orders = ((i, j), (j, i)) if F.finite else ((i, j),)
    args = r.elements() if F.finite else [1]
    for p, q in orders:
        for t in args:
            out.append(Relation(
                "s_x_commute", (p, q),
                (F.S(p), F.X(q, t), F.S(p, -1)),
                (F.X(q, t),),
            ))
    for t in args:
        for u in args:
            out.append(Relation(
                "x_x_commute", (i, j),
                commutator_word((F.X(i, t),), (F.X(j, u),), convention),
                (),
            ))
    return out


def _joined_relations(F: _Letters, i: int, j: int,
                      convention: str) -> List[Relation]:
    r = F.ring
    out = [Relation("braid", (i, j),
                    (F.S(i), F.S(j), F.S(i)), (F.S(j), F.S(i), F.S(j)))]
    orders = ((i, j), (j, i)) if F.finite else ((i, j),)
    args = r.elements() if F.finite else [1]
    for p, q in orders:
        out.append(Relation(
            "s2_inverts_s", (p, q),
            (F.S(p, 2), F.S(q), F.S(p, -2)),
            (F.S(q, -1),),
        ))
    for p, q in orders:
        for t in args:
            out.append(Relation(
                "x_slide", (p, q),
                (F.S(p), F.X(q, t), F.S(p, -1)),
                (F.S(q), F.X(p, r.neg(t)), F.S(q, -1)),
            ))
    for p, q in orders:
        for t in args:
            out.append(Relation(
                "s2_inverts_x", (p, q),
                (F.S(p, 2), F.X(q, t), F.S(p, -2)),
                (F.X(q, r.neg(t)),),
            ))
    for p, q in orders:
        for t in args:
            for u in args:
                conj = (F.S(p), F.X(q, u), F.S(p, -1))
                out.append(Relation(
                    "x_conj_commute", (p, q),
                    commutator_word((F.X(p, t),), conj, convention),
                    (),
                ))
    for p, q in orders:
        for t in args:
            for u in args:
                out.append(Relation(
                    "x_x_chevalley", (p, q),
                    commutator_word((F.X(p, t),), (F.X(q, u),), convention),
                    (F.S(p), F.X(q, r.mul(t, u)), F.S(p, -1)),
                ))
    return out


def _torus_relations(F: _Letters, d: Diagram) -> List[Relation]:
    r = F.ring
    if not F.finite:
        m1 = -1
        return [Relation(
            TORUS_SCHEMA, (0,),
            htilde_word(F, 0, m1) + htilde_word(F, 0, m1),
            (),
            note="equivalent to S^4 = 1 given the other relations",
        )]
    out = []
    units = r.units()
    for i in range(d.rank):
        for u in units:
            for v in units:
                out.append(Relation(
                    TORUS_SCHEMA, (i,),
                    htilde_word(F, i, u) + htilde_word(F, i, v),
                    htilde_word(F, i, r.mul(u, v)),
                ))
    return out


def _pairs(d: Diagram):
    joined = sorted(tuple(sorted(e)) for e in d.edges)
    unjoined = [
        (i, j)
        for i in range(d.rank)
        for j in range(i + 1, d.rank)
        if (i, j) not in set(joined)
    ]
    return unjoined, joined


def steinberg_presentation(d: Diagram, ring: Ring,
                           convention: str = "standard") -> Presentation:
    """All defining relations except the torus ones."""
    F = _Letters(ring)
    rels: List[Relation] = []
    for i in range(d.rank):
        rels.extend(_node_relations(F, d, i, convention))
    unjoined, joined = _pairs(d)
    for i, j in unjoined:
        rels.extend(_unjoined_relations(F, i, j, convention))
    for i, j in joined:
        rels.extend(_joined_relations(F, i, j, convention))
    return Presentation("steinberg", d.name or "", d.rank,
                        tuple(tuple(sorted(e)) for e in sorted(d.edges)),
                        ring.name, tuple(rels))


def kac_moody_presentation(d: Diagram, ring: Ring,
                           convention: str = "standard") -> Presentation:
    """Steinberg relations plus the torus relations."""
    base = steinberg_presentation(d, ring, convention)
    F = _Letters(ring)
    rels = base.relations + tuple(_torus_relations(F, d))
    return Presentation("kac_moody", base.diagram_name, base.rank,
                        base.edges, base.ring_name, rels)


def expected_relation_count(d: Diagram, ring: Ring, kind: str) -> int:
    """Closed-form relation count for the emission convention."""
    n = d.rank
    e = len(d.edges)
    u = n * (n - 1) // 2 - e
    if not ring.is_finite:
        total = 2 * n + 3 * u + 6 * e
        return total + 1 if kind == "kac_moody" else total
    q = ring.size
    total = n * (q * q + q + 1) + u * (q * q + 2 * q + 1) + e * (4 * q * q + 4 * q + 3)
    if kind == "kac_moody":
        w = len(ring.units())
        total += n * w * w
    return total


def check_locality(d: Diagram, pres: Presentation, ring: Ring) -> CheckResult:
    """Validate that each relation touches only its declared nodes, that
    pair schemas sit on pairs of the right kind, and that the per-schema
    counts match the closed forms."""
    edge_set = {tuple(sorted(e)) for e in d.edges}
    node_only = set(NODE_SCHEMAS) | {TORUS_SCHEMA}
    for r in pres.relations:
        touched = {sym[1] for sym, _ in r.lhs + r.rhs}
        if not touched <= set(r.nodes):
            return CheckResult(
                False, f"{r.schema} at {r.nodes} touches nodes {sorted(touched)}")
        if r.schema in node_only:
            if len(r.nodes) != 1:
                return CheckResult(False, f"{r.schema} must sit on one node")
        elif r.schema in UNJOINED_SCHEMAS or r.schema in JOINED_SCHEMAS:
            if len(r.nodes) != 2 or r.nodes[0] == r.nodes[1]:
                return CheckResult(False, f"{r.schema} must sit on two nodes")
            key = tuple(sorted(r.nodes))
            joined = key in edge_set
            if r.schema in JOINED_SCHEMAS and not joined:
                return CheckResult(False, f"{r.schema} at {r.nodes} needs an edge")
            if r.schema in UNJOINED_SCHEMAS and joined:
                return CheckResult(False, f"{r.schema} at {r.nodes} needs a non-edge")
        else:
            return CheckResult(False, f"unknown schema {r.schema!r}")
    expected = expected_relation_count(d, ring, pres.kind)
    if pres.count != expected:
        return CheckResult(
            False, f"relation count {pres.count} != closed form {expected}")
    return CheckResult(True)


def windowed_relations(d: Diagram, bound: int,
                       convention: str = "standard") -> List[Relation]:
    """Integer instances of every ring-argument schema with arguments
    running over [-bound, bound], for model checking beyond the single
    emitted instance per schema."""
    from .ring import IntegerRing

    if bound < 1:
        raise DomainError("window bound must be at least 1")
    r = IntegerRing()
    F = _Letters(r)
    window = list(range(-bound, bound + 1))
    out: List[Relation] = []
    for i in range(d.rank):
        for t in window:
            for u in window:
                out.append(Relation("additivity", (i,),
                                    (F.X(i, t), F.X(i, u)),
                                    (F.X(i, t + u),)))
        for t in window:
            out.append(Relation("s2_commutes_x", (i,),
                                (F.S(i, 2), F.X(i, t), F.S(i, -2)),
                                (F.X(i, t),)))
    unjoined, joined = _pairs(d)
    for i, j in unjoined:
        for p, q in ((i, j), (j, i)):
            for t in window:
                out.append(Relation("s_x_commute", (p, q),
                                    (F.S(p), F.X(q, t), F.S(p, -1)),
                                    (F.X(q, t),)))
        for t in window:
            for u in window:
                out.append(Relation(
                    "x_x_commute", (i, j),
                    commutator_word((F.X(i, t),), (F.X(j, u),), convention),
                    ()))
    for i, j in joined:
        for p, q in ((i, j), (j, i)):
            for t in window:
                out.append(Relation("x_slide", (p, q),
                                    (F.S(p), F.X(q, t), F.S(p, -1)),
                                    (F.S(q), F.X(p, -t), F.S(q, -1))))
                out.append(Relation("s2_inverts_x", (p, q),
                                    (F.S(p, 2), F.X(q, t), F.S(p, -2)),
                                    (F.X(q, -t),)))
            for t in window:
                for u in window:
                    conj = (F.S(p), F.X(q, u), F.S(p, -1))
                    out.append(Relation(
                        "x_conj_commute", (p, q),
                        commutator_word((F.X(p, t),), conj, convention), ()))
                    out.append(Relation(
                        "x_x_chevalley", (p, q),
                        commutator_word((F.X(p, t),), (F.X(q, u),), convention),
                        (F.S(p), F.X(q, t * u), F.S(p, -1))))
    return out


def _letter_str(letter: Letter) -> str:
    sym, e = letter
    if sym[0] == "S":
        base = f"S{sym[1]}"
        return base if e == 1 else f"{base}^{e}"
    if len(sym) == 3:
        base = f"X{sym[1]}({sym[2]})"
        return base if e == 1 else f"{base}^{e}"
    return f"X{sym[1]}({e})"


def word_str(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(_letter_str(l) for l in w)


def _gap_name(sym: Symbol) -> str:
    if sym[0] == "S":
        return f"S{sym[1]}"
    if len(sym) == 3:
        lab = re.sub(r"[^0-9A-Za-z]", "m", sym[2])
        return f"X{sym[1]}_{lab}"
    return f"X{sym[1]}"


def _gap_word(w: Word) -> str:
    # in the integer encoding an X letter with exponent e is x_i(1)^e,
    # which matches declaring the generator Xi = x_i(1)
    parts = []
    for sym, e in w:
        if e == 0:
            continue
        name = _gap_name(sym)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "One(F)"


def serialize_presentation(pres: Presentation, fmt: str = "json") -> str:
    """Render a presentation as a deterministic string; "json" round
    trips through parse_presentation, "text" and "gap_style" are
    write-only renderings."""
    if fmt == "json":
        def enc_word(w: Word):
            return [[list(sym), e] for sym, e in w]

        data = {
            "kind": pres.kind,
            "diagram": pres.diagram_name,
            "rank": pres.rank,
            "edges": [list(e) for e in pres.edges],
            "ring": pres.ring_name,
            "relations": [
                {
                    "schema": r.schema,
                    "nodes": list(r.nodes),
                    "lhs": enc_word(r.lhs),
                    "rhs": enc_word(r.rhs),
                    **({"note": r.note} if r.note else {}),
                }
                for r in pres.relations
            ],
        }
        return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "text":
        lines = [
            f"{pres.kind} diagram={pres.diagram_name} rank={pres.rank} "
            f"ring={pres.ring_name} relations={pres.count}"
        ]
        for r in pres.relations:
            nodes = ",".join(str(n) for n in r.nodes)
            line = f"{r.schema}({nodes}): {word_str(r.lhs)} = {word_str(r.rhs)}"
            if r.note:
                line += f"  [{r.note}]"
            lines.append(line)
        return "\n".join(lines) + "\n"
    if fmt == "gap_style":
        gens: List[str] = []
        seen = set()
        for r in pres.relations:
            for sym, _ in r.lhs + r.rhs:
                name = _gap_name(sym)
                if name not in seen:
                    seen.add(name)
                    gens.append(name)
        gens.sort()
        lines = [
            f"# {pres.kind} over {pres.ring_name} on {pres.diagram_name}",
            "F := FreeGroup(" + ", ".join(f'"{g}"' for g in gens) + ");",
        ]
        for g_i, g in enumerate(gens):
            lines.append(f"{g} := F.{g_i + 1};")
        rels = []
        for r in pres.relations:
            w = r.lhs + word_inverse(r.rhs)
            rels.append(_gap_word(w))
        lines.append("rels := [")
        for w in rels:
            lines.append(f"  {w},")
        lines.append("];")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown format {fmt!r}")


def parse_presentation(text: str) -> Presentation:
    """Inverse of the json serialization."""
    data = json.loads(text)

    def dec_word(lst) -> Word:
        return tuple((tuple(sym), int(e)) for sym, e in lst)

    rels = tuple(
        Relation(r["schema"], tuple(r["nodes"]), dec_word(r["lhs"]),
                 dec_word(r["rhs"]), r.get("note", ""))
        for r in data["relations"]
    )
    return Presentation(data["kind"], data["diagram"], int(data["rank"]),
                        tuple(tuple(e) for e in data["edges"]),
                        data["ring"], rels)

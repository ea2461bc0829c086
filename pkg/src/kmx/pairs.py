"""Prenilpotency of real-root pairs and reduction to classical pairs.

A pair of real roots is prenilpotent when some Weyl element makes both
positive and some other makes both negative. For distinct real roots
this is equivalent to the exact criterion inner(a, b) >= -1 (with the
pair {a, -a} always failing); pairs with pairing 0 or +-1, and equal
pairs, are the classical ones whose commutator is governed by a single
root or is trivial. Pairs with pairing k >= 2 split into lower-pairing
pairs, and iterating the split yields a finite certificate tree whose
leaves are classical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernels
from .diagram import Diagram, DiagramType, classify, induced_subdiagram, is_connected
from .errors import DomainError, InvariantViolation
from .lattice import (
    IntVector,
    WeylWord,
    apply_word,
    height,
    inner,
    is_real_root,
    real_roots_up_to_height,
    reflect,
    weyl_reduce_to_chamber,
)

DEFAULT_WORD_BOUND = 16
DEFAULT_NODE_BUDGET = 200000


def _check_root(d: Diagram, v: Sequence[int], label: str) -> IntVector:
    v = tuple(int(x) for x in v)
    if not is_real_root(d, v):
        raise DomainError(f"{label} = {v} is not a real root")
    return v


def is_prenilpotent(d: Diagram, a: Sequence[int], b: Sequence[int]) -> bool:
    """Exact pairing criterion: equal pairs yes, opposite pairs no,
    otherwise inner(a, b) >= -1."""
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    if a == b:
        return True
    if a == tuple(-x for x in b):
        return False
    return inner(d, a, b) >= -1


def is_classically_prenilpotent(d: Diagram, a: Sequence[int], b: Sequence[int]) -> bool:
    """Equal pairs, or pairs with pairing in {-1, 0, 1}."""
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    return a == b or inner(d, a, b) in (-1, 0, 1)


@dataclass(frozen=True)
class PrenilpotencyVerdict:
    status: str  # "prenilpotent" | "not_prenilpotent" | "inconclusive"
    method: str  # "criterion" | "weyl_search" | "span_scan"
    witness: Optional[dict] = None

    @property
    def conclusive(self) -> bool:
        return self.status != "inconclusive"


def oracle_weyl(
    d: Diagram,
    a: Sequence[int],
    b: Sequence[int],
    word_bound: int = DEFAULT_WORD_BOUND,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PrenilpotencyVerdict:
    """Definition-level check by bounded search over Weyl words.

    Looks for one word making both roots positive and another making both
    negative; found words are re-verified by replay before reporting.
    Exhausting the bounds is reported as inconclusive, never as a
    negative answer; the only conclusive negative is the opposite pair
    {a, -a}, which no Weyl element can align.
    """
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    if a == tuple(-x for x in b):
        return PrenilpotencyVerdict(
            "not_prenilpotent", "weyl_search", {"reason": "opposite roots"}
        )
    wp = kernels.pair_witness(d.gcm, a, b, word_bound, node_budget, +1)
    if wp is None:
        return PrenilpotencyVerdict("inconclusive", "weyl_search", {"missing": "positive"})
    wn = kernels.pair_witness(d.gcm, a, b, word_bound, node_budget, -1)
    if wn is None:
        return PrenilpotencyVerdict("inconclusive", "weyl_search", {"missing": "negative"})
    for word, sign in ((wp, 1), (wn, -1)):
        ia = apply_word(d, word, a)
        ib = apply_word(d, word, b)
        for img in (ia, ib):
            if any(sign * x < 0 for x in img):
                raise InvariantViolation("witness word failed replay")
    return PrenilpotencyVerdict(
        "prenilpotent",
        "weyl_search",
        {"to_positive": list(wp), "to_negative": list(wn)},
    )


@dataclass(frozen=True)
class SpanScan:
    roots: Tuple[IntVector, ...]
    provably_complete: bool


def roots_in_nonneg_span(
    d: Diagram, a: Sequence[int], b: Sequence[int], max_coeff: int = 12
) -> SpanScan:
    """Real roots of the form m*a + n*b with m, n >= 0, m + n > 0.

    For pairing k >= -1 the norm-2 condition confines (m, n) to a handful
    of small values, so the returned list is provably complete; for
    k <= -2 the scan up to max_coeff is a sample of an infinite family.
    """
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    k = inner(d, a, b)
    complete = k >= -1
    bound = 2 if complete else max_coeff
    found = []
    for m in range(bound + 1):
        for n in range(bound + 1):
            if m == 0 and n == 0:
                continue
            # norm of m*a + n*b is 2m^2 + 2kmn + 2n^2
            if m * m + k * m * n + n * n != 1:
                continue
            v = tuple(m * x + n * y for x, y in zip(a, b))
            if is_real_root(d, v):
                found.append(v)
    return SpanScan(tuple(sorted(set(found))), complete)


def _unbounded_family(d: Diagram, a: IntVector, b: IntVector, steps: int = 6):
    """Alternating reflections in b then a applied to a.

    For pairing k <= -2 each step strictly increases the larger of the
    two span coefficients (c < d gives the next coefficient |k|d - c > d),
    so the family of real roots in the nonnegative span never terminates.
    The produced prefix is verified to satisfy exactly that growth.
    """
    k = inner(d, a, b)
    if k > -2:
        raise InvariantViolation("unbounded family requires pairing <= -2")
    coeffs = (1, 0)
    family = [a]
    use_b = True
    for _ in range(steps):
        m, n = coeffs
        if use_b:
            # reflect m*a + n*b in b: n -> -(k*m + 2*n) + n... new n = -km - n
            coeffs = (m, -k * m - n)
        else:
            coeffs = (-k * n - m, n)
        use_b = not use_b
        m2, n2 = coeffs
        if min(m2, n2) < 0 or max(m2, n2) <= max(m, n):
            raise InvariantViolation("family growth check failed")
        family.append(tuple(m2 * x + n2 * y for x, y in zip(a, b)))
    for v in family:
        if not is_real_root(d, v):
            raise InvariantViolation("family member is not a real root")
    return family


def span_scan_verdict(
    d: Diagram, a: Sequence[int], b: Sequence[int], max_coeff: int = 12
) -> PrenilpotencyVerdict:
    """Verdict from the nonnegative-span evidence, independent of both the
    pairing criterion's derivation and the Weyl search.

    A provably complete finite list certifies prenilpotency (for a != -b);
    for pairing <= -2 an explicitly verified, strictly growing root family
    certifies the opposite.
    """
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    if a == tuple(-x for x in b):
        return PrenilpotencyVerdict(
            "not_prenilpotent", "span_scan", {"reason": "opposite roots"}
        )
    scan = roots_in_nonneg_span(d, a, b, max_coeff)
    if scan.provably_complete:
        return PrenilpotencyVerdict(
            "prenilpotent", "span_scan", {"roots": [list(r) for r in scan.roots]}
        )
    family = _unbounded_family(d, a, b)
    return PrenilpotencyVerdict(
        "not_prenilpotent",
        "span_scan",
        {"unbounded_family": [list(r) for r in family]},
    )


@dataclass(frozen=True)
class CommutatorForm:
    kind: str  # "trivial" | "single_root"
    root: Optional[IntVector] = None


def commutator_form(d: Diagram, a: Sequence[int], b: Sequence[int]) -> CommutatorForm:
    """Shape of the commutator of the two root groups of a classically
    prenilpotent pair of distinct roots.

    Pairing -1 concentrates the commutator on the single root a + b (the
    coefficient sign depends on a structure-constant choice and is not
    decided here); pairings 0 and 1 make the groups commute.
    """
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    if a == b:
        raise DomainError("commutator form needs two distinct roots")
    if not is_classically_prenilpotent(d, a, b):
        raise DomainError("pair is not classically prenilpotent")
    k = inner(d, a, b)
    if k == -1:
        s = tuple(x + y for x, y in zip(a, b))
        if not is_real_root(d, s):
            raise InvariantViolation("sum of a pairing -1 pair must be a real root")
        return CommutatorForm("single_root", s)
    return CommutatorForm("trivial")


@dataclass(frozen=True)
class Split:
    """Decomposition of one member of the pair into two real roots.

    With swapped False the parts sum to base[0] and each child pairs the
    part against base[1]; with swapped True the roles of the two roots are
    exchanged (the k = 2 construction orients the pair by its null
    difference and may have to decompose the second root instead)."""

    alpha_prime: IntVector
    alpha_dblprime: IntVector
    word: WeylWord
    swapped: bool
    base: Tuple[IntVector, IntVector]

    @property
    def other(self) -> IntVector:
        return self.base[0] if self.swapped else self.base[1]

    @property
    def children(self) -> Tuple[Tuple[IntVector, IntVector], Tuple[IntVector, IntVector]]:
        return ((self.alpha_prime, self.other), (self.alpha_dblprime, self.other))


def _simple_roots(d: Diagram) -> List[IntVector]:
    return [tuple(int(i == j) for j in range(d.rank)) for i in range(d.rank)]


def _reduce_to_simple_in(d: Diagram, nodes, v: IntVector) -> Tuple[int, WeylWord]:
    """Reduce a root supported on the given nodes to a simple root using
    reflections at those nodes only; returns (node, word)."""
    word: List[int] = []
    w = v
    if all(x <= 0 for x in w):
        neg = True
        w = tuple(-x for x in w)
    else:
        neg = False
    guard = 0
    while True:
        nz = [i for i in range(d.rank) if w[i]]
        if len(nz) == 1 and w[nz[0]] == 1:
            m = nz[0]
            break
        i = next(
            (i for i in nodes if sum(d.gcm[i][j] * w[j] for j in nz) > 0),
            None,
        )
        if i is None:
            raise InvariantViolation("root reduction stalled outside the subsystem")
        w = reflect(d, i, w)
        word.append(i)
        guard += 1
        if guard > 10000:
            raise InvariantViolation("root reduction did not terminate")
    if neg:
        # the original root was -w; one more reflection at m flips -m to +m
        word.append(m)
    return m, tuple(word)


def split_pair(d: Diagram, a: Sequence[int], b: Sequence[int]) -> Split:
    """Split a prenilpotent pair with pairing k >= 2 into two pairs of
    strictly smaller pairing against the same second root.

    k = 2: the difference nu = a - b is null; reduce it to the dominant
    chamber, where it is fixed exactly by the walls of an irreducible
    affine subdiagram. Transport the pair there, reduce the first root to
    a simple root m of that subdiagram, and split it as
    (alpha_m + alpha_j) + (-alpha_j) against a neighbor j of m inside the
    subdiagram; both parts pair to exactly 1 with the second root. The
    result is transported back through the inverse word.

    k >= 3: search enumerated real roots for alpha' with
    inner(alpha', a) = 1 and both inner(alpha', b), inner(a - alpha', b)
    in [1, k-1]; then a - alpha' is the reflection of a in alpha', hence a
    real root. Existence is guaranteed, so exhausting the height cap is an
    invariant failure.
    """
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    k = inner(d, a, b)
    if a == b or k < 2:
        raise DomainError("split_pair needs a distinct pair with pairing >= 2")

    if k == 2:
        return _split_k2(d, a, b)
    return _split_k3(d, a, b, k)


def _split_k2(d: Diagram, a: IntVector, b: IntVector) -> Split:
    base = (a, b)
    nu = tuple(x - y for x, y in zip(a, b))
    if inner(d, nu, nu) != 0:
        raise InvariantViolation("difference of a pairing-2 pair must be null")
    red = weyl_reduce_to_chamber(d, nu)
    swapped = red.negated
    if swapped:
        a, b = b, a
        nu = tuple(-x for x in nu)
    word = list(red.word)
    nu0 = red.vector
    sub_nodes = [
        i
        for i in range(d.rank)
        if sum(d.gcm[i][j] * nu0[j] for j in range(d.rank) if nu0[j]) == 0
    ]
    if len(sub_nodes) != d.rank - 1:
        raise InvariantViolation("chamber-reduced null vector has the wrong stabilizer")
    sub = induced_subdiagram(d, sub_nodes)
    if not is_connected(sub) or classify(sub) is not DiagramType.AFFINE:
        raise InvariantViolation("stabilizer subdiagram is not irreducible affine")
    at = apply_word(d, word, a)
    if any(at[i] for i in range(d.rank) if i not in sub_nodes):
        raise InvariantViolation("transported root is not supported on the stabilizer")
    m, wred = _reduce_to_simple_in(d, sub_nodes, at)
    word.extend(wred)
    j = next((n for n in sorted(d.neighbor_sets[m]) if n in sub_nodes), None)
    if j is None:
        raise InvariantViolation("stabilizer node has no neighbor in the subsystem")
    alpha_prime = tuple(int(i == m) + int(i == j) for i in range(d.rank))
    alpha_dbl = tuple(-int(i == j) for i in range(d.rank))
    back = tuple(reversed(word))
    ap = apply_word(d, back, alpha_prime)
    adp = apply_word(d, back, alpha_dbl)
    split = Split(ap, adp, tuple(word), swapped, base)
    _validate_split(d, split, 2)
    return split


def _split_k3(d: Diagram, a: IntVector, b: IntVector, k: int) -> Split:
    # Work where a is a simple root: transport the pair, pick the part
    # there, transport back. The conditions are Weyl invariant and the
    # candidate parts stay small in the transported frame.
    m, word = _reduce_to_simple_in(d, range(d.rank), a)
    bt = apply_word(d, word, b)
    found = None
    for j in sorted(d.neighbor_sets[m]):
        c = sum(d.gcm[j][i] * bt[i] for i in range(d.rank))
        if -(k - 1) <= c <= -1:
            # alpha' = -alpha_j pairs to 1 with alpha_m and to -c with bt
            found = tuple(-int(i == j) for i in range(d.rank))
            break
    if found is None:
        am = tuple(int(i == m) for i in range(d.rank))
        for cap in (8, 16, 32, 64):
            for r in sorted(real_roots_up_to_height(d, cap), key=lambda v: (height(v), v)):
                if inner(d, r, am) != 1:
                    continue
                if 1 <= inner(d, r, bt) <= k - 1:
                    found = r
                    break
            if found is not None:
                break
    if found is None:
        raise InvariantViolation(
            "no splitting root within height 64; contradicts the reduction theorem"
        )
    r2 = tuple(int(i == m) - x for i, x in enumerate(found))
    back = tuple(reversed(word))
    split = Split(
        apply_word(d, back, found), apply_word(d, back, r2), tuple(word), False, (a, b)
    )
    _validate_split(d, split, k)
    return split


def _validate_split(d: Diagram, s: Split, k: int) -> None:
    target = s.base[1] if s.swapped else s.base[0]
    if tuple(x + y for x, y in zip(s.alpha_prime, s.alpha_dblprime)) != target:
        raise InvariantViolation("split parts do not sum to the decomposed root")
    for part in (s.alpha_prime, s.alpha_dblprime):
        if not is_real_root(d, part):
            raise InvariantViolation("split part is not a real root")
        c = inner(d, part, s.other)
        if not (0 < c < k):
            raise InvariantViolation("split part pairing out of range")


@dataclass
class CertNode:
    a: IntVector
    b: IntVector
    k: int
    kind: str  # "leaf" | "split"
    alpha_prime: Optional[IntVector] = None
    alpha_dblprime: Optional[IntVector] = None
    word: WeylWord = ()
    swapped: bool = False
    children: List["CertNode"] = field(default_factory=list)

    def depth(self) -> int:
        if not self.children:
            return 0
        return 1 + max(c.depth() for c in self.children)


@dataclass
class Certificate:
    diagram_name: str
    rank: int
    root: CertNode


def reduce_to_certificate(d: Diagram, a: Sequence[int], b: Sequence[int]) -> Certificate:
    """Full reduction tree of a prenilpotent pair down to classical leaves.

    Splitting strictly decreases the pairing of every child pair, so the
    tree depth never exceeds max(1, inner(a, b)).
    """
    a = _check_root(d, a, "alpha")
    b = _check_root(d, b, "beta")
    if not is_prenilpotent(d, a, b):
        raise DomainError("pair is not prenilpotent; nothing to reduce")
    root = _build_node(d, a, b)
    cert = Certificate(d.name or "", d.rank, root)
    k0 = inner(d, a, b)
    if root.depth() > max(1, k0):
        raise InvariantViolation("certificate deeper than the initial pairing")
    return cert


def _build_node(d: Diagram, a: IntVector, b: IntVector) -> CertNode:
    k = inner(d, a, b)
    if a == b or k in (-1, 0, 1):
        return CertNode(a, b, k, "leaf")
    s = split_pair(d, a, b)
    ea, eb = s.base
    node = CertNode(ea, eb, inner(d, ea, eb), "split", s.alpha_prime, s.alpha_dblprime,
                    s.word, s.swapped)
    for ca, cb in s.children:
        node.children.append(_build_node(d, ca, cb))
    return node


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    violation: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(d: Diagram, cert: Certificate) -> CheckResult:
    """Re-validate a certificate from scratch; never raises on bad data,
    returns ok=False with a diagnosed violation instead."""
    try:
        if cert.rank != d.rank:
            return CheckResult(False, "rank mismatch")
        return _verify_node(d, cert.root, None)
    except (DomainError, InvariantViolation) as e:
        return CheckResult(False, f"structural error: {e}")


def _verify_node(d: Diagram, node: CertNode, parent_k: Optional[int]) -> CheckResult:
    for v, label in ((node.a, "first"), (node.b, "second")):
        if not is_real_root(d, v):
            return CheckResult(False, f"{label} root of a node is not a real root")
    k = inner(d, node.a, node.b)
    if k != node.k:
        return CheckResult(False, "recorded pairing does not match the roots")
    if parent_k is not None and not (0 < k < parent_k):
        return CheckResult(False, "child pairing not strictly below the parent")
    if node.kind == "leaf":
        if not (node.a == node.b or k in (-1, 0, 1)):
            return CheckResult(False, "leaf not classically prenilpotent")
        if node.children:
            return CheckResult(False, "leaf with children")
        return CheckResult(True)
    if node.kind != "split":
        return CheckResult(False, f"unknown node kind {node.kind!r}")
    if k < 2:
        return CheckResult(False, "split node with pairing below 2")
    ap, adp = node.alpha_prime, node.alpha_dblprime
    if ap is None or adp is None:
        return CheckResult(False, "split node missing its parts")
    decomposed = node.b if node.swapped else node.a
    other = node.a if node.swapped else node.b
    if tuple(x + y for x, y in zip(ap, adp)) != decomposed:
        return CheckResult(False, "sum mismatch: parts do not add to the decomposed root")
    for part in (ap, adp):
        if not is_real_root(d, part):
            return CheckResult(False, "split part is not a real root")
    if len(node.children) != 2:
        return CheckResult(False, "split node needs exactly two children")
    expect = ((ap, other), (adp, other))
    for child, (ea, eb) in zip(node.children, expect):
        if child.a != ea or child.b != eb:
            return CheckResult(False, "child pair does not match the split parts")
        sub = _verify_node(d, child, k)
        if not sub:
            return sub
    return CheckResult(True)


def certificate_to_dict(cert: Certificate) -> dict:
    def node_dict(n: CertNode) -> dict:
        out = {
            "a": list(n.a),
            "b": list(n.b),
            "k": n.k,
            "kind": n.kind,
        }
        if n.kind == "split":
            out["alpha_prime"] = list(n.alpha_prime)
            out["alpha_dblprime"] = list(n.alpha_dblprime)
            out["word"] = list(n.word)
            out["swapped"] = n.swapped
            out["children"] = [node_dict(c) for c in n.children]
        return out

    return {
        "diagram": cert.diagram_name,
        "rank": cert.rank,
        "tree": node_dict(cert.root),
    }


def certificate_from_dict(data: dict) -> Certificate:
    def node_from(dd: dict) -> CertNode:
        node = CertNode(
            tuple(dd["a"]),
            tuple(dd["b"]),
            int(dd["k"]),
            dd["kind"],
        )
        if dd["kind"] == "split":
            node.alpha_prime = tuple(dd["alpha_prime"])
            node.alpha_dblprime = tuple(dd["alpha_dblprime"])
            node.word = tuple(dd.get("word", ()))
            node.swapped = bool(dd.get("swapped", False))
            node.children = [node_from(c) for c in dd.get("children", [])]
        return node

    return Certificate(data.get("diagram", ""), int(data["rank"]), node_from(data["tree"]))


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), sort_keys=True, separators=(",", ":"))


def certificate_from_json(text: str) -> Certificate:
    return certificate_from_dict(json.loads(text))

"""Simply laced Dynkin diagrams: construction, classification, hyperbolicity.

A diagram is an undirected simple graph on nodes 0..rank-1. Its
generalized Cartan matrix (2 on the diagonal, -1 on edges, 0 elsewhere)
doubles as the inner product matrix of the simple roots, so the
finite/affine/indefinite trichotomy is exactly definite/semidefinite/
indefinite for that symmetric form.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from . import kernels
from .errors import DomainError, InvariantViolation

Edge = Tuple[int, int]


class DiagramType(enum.Enum):
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Diagram:
    rank: int
    edges: FrozenSet[Edge]
    name: str = ""

    @cached_property
    def gcm(self) -> Tuple[Tuple[int, ...], ...]:
        g = [[2 if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]
        for i, j in self.edges:
            g[i][j] = g[j][i] = -1
        return tuple(tuple(row) for row in g)

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        nb = [set() for _ in range(self.rank)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    def edge_list(self) -> List[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        label = self.name or f"rank {self.rank}"
        return f"Diagram({label}, edges={self.edge_list()})"


def build_diagram(rank: int, edges: Iterable[Sequence[int]], name: str = "") -> Diagram:
    """Validated constructor; edges are unordered pairs of distinct nodes."""
    if rank < 1:
        raise DomainError("rank must be at least 1")
    norm = set()
    for e in edges:
        if len(e) != 2:
            raise DomainError(f"edge {e!r} is not a pair")
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise DomainError(f"loop edge at node {i}")
        if not (0 <= i < rank and 0 <= j < rank):
            raise DomainError(f"edge ({i},{j}) out of range for rank {rank}")
        norm.add((min(i, j), max(i, j)))
    return Diagram(rank=rank, edges=frozenset(norm), name=name)


def components(d: Diagram) -> List[Tuple[int, ...]]:
    """Connected components as sorted node tuples, in order of least node."""
    seen = set()
    out = []
    for start in range(d.rank):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in d.neighbor_sets[v]:
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def is_connected(d: Diagram) -> bool:
    return len(components(d)) == 1


def induced_subdiagram(d: Diagram, nodes: Sequence[int], name: str = "") -> Diagram:
    """Induced subdiagram on the given nodes, relabeled 0..k-1 in node order."""
    nodes = sorted(set(nodes))
    if not nodes:
        raise DomainError("empty node set")
    if nodes[0] < 0 or nodes[-1] >= d.rank:
        raise DomainError("node out of range")
    pos = {v: i for i, v in enumerate(nodes)}
    sub = [(pos[i], pos[j]) for i, j in d.edges if i in pos and j in pos]
    return build_diagram(len(nodes), sub, name=name)


def classify(d: Diagram) -> DiagramType:
    """Finite / affine / indefinite trichotomy of a connected diagram."""
    if not is_connected(d):
        raise DomainError("classify needs a connected diagram")
    _, neg, zero = kernels.inertia(d.gcm)
    if neg:
        return DiagramType.INDEFINITE
    return DiagramType.AFFINE if zero else DiagramType.FINITE


def proper_irreducible_subdiagrams(d: Diagram) -> List[Tuple[int, ...]]:
    """Node sets of all connected proper induced subdiagrams, sorted.

    Exponential in rank by nature; meant for ranks up to about 10.
    """
    out = []
    for mask in range(1, (1 << d.rank) - 1):
        nodes = tuple(i for i in range(d.rank) if (mask >> i) & 1)
        if is_connected(induced_subdiagram(d, nodes)):
            out.append(nodes)
    out.sort(key=lambda t: (len(t), t))
    return out


def is_hyperbolic(d: Diagram) -> bool:
    """Connected, indefinite, and every proper connected induced subdiagram
    finite or affine.

    Checked through vertex deletions: any proper connected induced
    subdiagram sits inside a component of some d minus v, and a
    restriction of a positive semidefinite form is positive semidefinite,
    so it is enough that no component of any d minus v is indefinite.
    """
    if d.rank < 2 or not is_connected(d):
        return False
    if classify(d) is not DiagramType.INDEFINITE:
        return False
    for v in range(d.rank):
        rest = [i for i in range(d.rank) if i != v]
        if not rest:
            continue
        sub = induced_subdiagram(d, rest)
        for comp in components(sub):
            piece = induced_subdiagram(sub, comp)
            if classify(piece) is DiagramType.INDEFINITE:
                return False
    return True


def _catalog_raw():
    with resources.files("kmx.data").joinpath("catalog.json").open("r") as f:
        return json.load(f)


@lru_cache(maxsize=1)
def catalog() -> Tuple[Diagram, ...]:
    """The 18 connected simply laced hyperbolic diagrams (ranks 4..10)."""
    raw = _catalog_raw()
    out = []
    for entry in raw["diagrams"]:
        d = build_diagram(entry["rank"], entry["edges"], name=entry["name"])
        if not is_hyperbolic(d):
            raise InvariantViolation(f"catalog entry {d.name} is not hyperbolic")
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=1)
def _alias_map():
    return dict(_catalog_raw()["aliases"])


def diagram_by_name(name: str) -> Diagram:
    """Catalog lookup by name or alias (e.g. 'rank10-2' or 'E10')."""
    target = _alias_map().get(name, name)
    for d in catalog():
        if d.name == target:
            return d
    raise DomainError(f"unknown diagram name: {name!r}")


def catalog_names() -> List[str]:
    return [d.name for d in catalog()]


def catalog_aliases() -> dict:
    return dict(_alias_map())


def relabel(d: Diagram, perm: Sequence[int]) -> Diagram:
    """Image of d under the node permutation perm (node i becomes perm[i])."""
    if sorted(perm) != list(range(d.rank)):
        raise DomainError("perm is not a permutation of the nodes")
    return build_diagram(d.rank, [(perm[i], perm[j]) for i, j in d.edges])


def _colex_bits(rank: int) -> int:
    return rank * (rank - 1) // 2


def canonical_mask(rank: int, mask: int) -> int:
    """Minimal colex-packed adjacency bitstring over all node permutations.

    Pairs are ordered (0,1),(0,2),(1,2),(0,3),... by (max, min); placing
    nodes one position at a time then determines a contiguous most
    significant prefix, which allows pruning against the best complete
    value found so far.
    """
    nbits = _colex_bits(rank)
    adj = [[0] * rank for _ in range(rank)]
    t = 0
    for i in range(rank):
        for j in range(i + 1, rank):
            if (mask >> kernels.pair_bit_index(rank, i, j)) & 1:
                adj[i][j] = adj[j][i] = 1
            t += 1
    best = [None]

    def place(chosen, used, value, bits_done):
        t = len(chosen)
        if t == rank:
            if best[0] is None or value < best[0]:
                best[0] = value
            return
        for cand in range(rank):
            if used & (1 << cand):
                continue
            newbits = 0
            row = adj[cand]
            for i in range(t):
                newbits = (newbits << 1) | row[chosen[i]]
            val2 = (value << t) | newbits
            done2 = bits_done + t
            if best[0] is not None and (best[0] >> (nbits - done2)) < val2:
                continue
            chosen.append(cand)
            place(chosen, used | (1 << cand), val2, done2)
            chosen.pop()

    place([], 0, 0, 0)
    return best[0]


def diagram_canonical_key(d: Diagram) -> Tuple[int, int]:
    return (d.rank, canonical_mask(d.rank, kernels.mask_from_edges(d.rank, d.edges)))


def is_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    if d1.rank != d2.rank or len(d1.edges) != len(d2.edges):
        return False
    deg1 = sorted(len(s) for s in d1.neighbor_sets)
    deg2 = sorted(len(s) for s in d2.neighbor_sets)
    if deg1 != deg2:
        return False
    return diagram_canonical_key(d1) == diagram_canonical_key(d2)


def enumerate_hyperbolic(rank: int) -> List[Diagram]:
    """All hyperbolic diagrams of the given rank up to isomorphism.

    Exhaustive scan over labeled graphs (feasible for rank <= 7), deduped
    by canonical form; representatives are the canonical labelings.
    """
    if not (2 <= rank <= 7):
        raise DomainError("enumerate_hyperbolic supports ranks 2..7")
    reps = {}
    for mask in kernels.scan_hyperbolic_masks(rank):
        canon = canonical_mask(rank, mask)
        if canon not in reps:
            # unpack the canonical colex bitstring back into edges
            edges = []
            t = 0
            nbits = _colex_bits(rank)
            for j in range(rank):
                for i in range(j):
                    if (canon >> (nbits - 1 - t)) & 1:
                        edges.append((i, j))
                    t += 1
            reps[canon] = build_diagram(rank, edges)
    return [reps[c] for c in sorted(reps)]

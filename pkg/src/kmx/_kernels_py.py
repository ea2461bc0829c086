"""Pure-Python compute kernels.

`kmx.kernels` exposes either this module or the compiled `kmx._kernels`
extension, whichever imports. Both implement the same five functions with
exact integer/rational arithmetic, so results are identical; only speed
differs. Keep the two in sync.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

BACKEND = "python"

FINITE, AFFINE, INDEFINITE = 0, 1, 2


def inertia(mat):
    """Exact inertia (n_plus, n_minus, n_zero) of a symmetric matrix.

    Symmetric congruence diagonalization over Fraction; congruence
    preserves inertia, so the signs of the produced diagonal entries are
    the answer. Handles zero diagonals by symmetric pivot swap and, when
    the whole remaining diagonal vanishes, by splitting off a hyperbolic
    [[0,c],[c,0]] block (inertia (1,1)).
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    idx = list(range(n))
    pos = neg = zero = 0
    while idx:
        k = next((i for i in idx if a[i][i] != 0), None)
        if k is not None:
            p = a[k][k]
            if p > 0:
                pos += 1
            else:
                neg += 1
            idx.remove(k)
            col = {u: a[u][k] for u in idx}
            for u in idx:
                cu = col[u]
                if cu:
                    for v in idx:
                        a[u][v] -= cu * col[v] / p
            continue
        kj = None
        for ii, u in enumerate(idx):
            for v in idx[ii + 1:]:
                if a[u][v] != 0:
                    kj = (u, v)
                    break
            if kj is not None:
                break
        if kj is None:
            zero += len(idx)
            break
        k, j = kj
        c = a[k][j]
        pos += 1
        neg += 1
        idx.remove(k)
        idx.remove(j)
        ck = {u: a[u][k] for u in idx}
        cj = {u: a[u][j] for u in idx}
        for u in idx:
            for v in idx:
                a[u][v] -= (ck[u] * cj[v] + cj[u] * ck[v]) / c
    return (pos, neg, zero)


def positive_root_test(gcm, v):
    """True iff the all-nonnegative integer vector v is a positive real root.

    Descends by reflecting at the lowest node pairing positively with the
    current vector; for a genuine root this walks down to a simple root
    without ever leaving the nonnegative orthant, and the height strictly
    drops each step so the loop always terminates.
    """
    n = len(gcm)
    w = list(v)
    while True:
        nz = [j for j in range(n) if w[j]]
        if len(nz) == 1 and w[nz[0]] == 1:
            return True
        k = -1
        c = 0
        for i in range(n):
            row = gcm[i]
            s = 0
            for j in nz:
                s += row[j] * w[j]
            if s > 0:
                k = i
                c = s
                break
        if k < 0:
            return False
        w[k] -= c
        if w[k] < 0:
            return False


def roots_up_to_height(gcm, h):
    """All real roots with height (sum of |coordinates|) <= h, sorted.

    Closure of the simple roots under simple reflections restricted to
    positive vectors of height <= h, then mirrored. Any positive root is
    reachable from a simple root through positive roots of strictly
    smaller height, so the restriction loses nothing.
    """
    n = len(gcm)
    if h < 1:
        return []
    seen = set(tuple(int(i == j) for j in range(n)) for i in range(n))
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            nz = [j for j in range(n) if v[j]]
            for i in range(n):
                row = gcm[i]
                c = 0
                for j in nz:
                    c += row[j] * v[j]
                if c == 0:
                    continue
                w = list(v)
                w[i] -= c
                if w[i] < 0:
                    continue
                tw = tuple(w)
                if tw in seen or sum(tw) > h:
                    continue
                seen.add(tw)
                nxt.append(tw)
        frontier = nxt
    out = []
    for v in seen:
        out.append(v)
        out.append(tuple(-x for x in v))
    out.sort()
    return out


def _badness(v, sign):
    s = 0
    for x in v:
        s += x
    s *= sign
    return -s if s < 0 else 0


def pair_witness(gcm, a, b, length_bound, budget, sign):
    """Best-first search for a Weyl word sending both roots to the positive
    (sign=+1) or negative (sign=-1) side.

    Returns the word as a list of node indexes applied left to right, or
    None if no witness was found within the word-length bound and the node
    budget. Priority is (combined wrong-side height, depth, insertion
    order), which makes the search deterministic and strongly directed.
    """
    n = len(gcm)
    a = tuple(a)
    b = tuple(b)
    start = (a, b)
    bad0 = _badness(a, sign) + _badness(b, sign)
    if bad0 == 0:
        return []
    states = [start]
    parent = [(-1, -1)]
    depth = [0]
    seen = {start}
    heap = [(bad0, 0, 0)]
    seq = 1
    pops = 0
    while heap:
        _, _, sid = heapq.heappop(heap)
        pops += 1
        if pops > budget:
            return None
        d = depth[sid]
        if d >= length_bound:
            continue
        va, vb = states[sid]
        for i in range(n):
            row = gcm[i]
            ca = 0
            cb = 0
            for j in range(n):
                if va[j]:
                    ca += row[j] * va[j]
                if vb[j]:
                    cb += row[j] * vb[j]
            if ca == 0 and cb == 0:
                continue
            wa = list(va)
            wa[i] -= ca
            wb = list(vb)
            wb[i] -= cb
            st = (tuple(wa), tuple(wb))
            if st in seen:
                continue
            seen.add(st)
            sid2 = len(states)
            states.append(st)
            parent.append((sid, i))
            depth.append(d + 1)
            nb = _badness(st[0], sign) + _badness(st[1], sign)
            if nb == 0:
                word = []
                cur = sid2
                while cur > 0:
                    pid, refl = parent[cur]
                    word.append(refl)
                    cur = pid
                word.reverse()
                return word
            heapq.heappush(heap, (nb, seq, sid2))
            seq += 1
    return None


def _classify_small(gcm):
    p, ng, z = inertia(gcm)
    if ng:
        return INDEFINITE
    return AFFINE if z else FINITE


def scan_hyperbolic_masks(rank):
    """Edge masks of every connected hyperbolic diagram on `rank` labeled
    nodes, ascending. Bit for pair (i,j), i<j, is at the lex pair index.

    A connected diagram is hyperbolic iff its form is indefinite and every
    component of every vertex-deleted subdiagram is finite or affine: any
    proper connected induced subdiagram sits inside such a component, and
    a restriction of a positive semidefinite form stays positive
    semidefinite. Each component of a vertex-deleted subdiagram is a tree
    or unicyclic (finite/affine), so m <= (n-1) + deg(v) edges for every
    v, giving the popcount prefilter m <= n(n-1)/(n-2).
    """
    n = rank
    nbits = n * (n - 1) // 2
    pairs = []
    bitidx = [[-1] * n for _ in range(n)]
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((i, j))
            bitidx[i][j] = bitidx[j][i] = t
            t += 1
    if n <= 3:
        max_edges = nbits
    else:
        max_edges = (n * (n - 1)) // (n - 2)
    full = (1 << n) - 1
    memo = {}

    def classify_nodes(nodes, mask):
        kk = len(nodes)
        if kk == 1:
            return FINITE
        sub = 0
        tt = 0
        for ii in range(kk):
            bi = bitidx[nodes[ii]]
            for jj in range(ii + 1, kk):
                if (mask >> bi[nodes[jj]]) & 1:
                    sub |= 1 << tt
                tt += 1
        key = (kk, sub)
        r = memo.get(key)
        if r is None:
            g = [[2 if ii == jj else 0 for jj in range(kk)] for ii in range(kk)]
            tt = 0
            for ii in range(kk):
                for jj in range(ii + 1, kk):
                    if (sub >> tt) & 1:
                        g[ii][jj] = g[jj][ii] = -1
                    tt += 1
            r = _classify_small(g)
            memo[key] = r
        return r

    out = []
    for mask in range(1 << nbits):
        m = mask.bit_count()
        if m < n - 1 or m > max_edges:
            continue
        adj = [0] * n
        mm = mask
        while mm:
            bit = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            i, j = pairs[bit]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        comp = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        if comp != full:
            continue
        ok = True
        for v in range(n):
            rem = full & ~(1 << v)
            while rem and ok:
                c = rem & -rem
                grow = c
                fr = c
                while fr:
                    nxt = 0
                    f = fr
                    while f:
                        u = (f & -f).bit_length() - 1
                        f &= f - 1
                        nxt |= adj[u]
                    nxt &= rem & ~grow
                    grow |= nxt
                    fr = nxt
                rem &= ~grow
                nodes = []
                g = grow
                while g:
                    nodes.append((g & -g).bit_length() - 1)
                    g &= g - 1
                if classify_nodes(nodes, mask) == INDEFINITE:
                    ok = False
            if not ok:
                break
        if not ok:
            continue
        if classify_nodes(list(range(n)), mask) != INDEFINITE:
            continue
        out.append(mask)
    return out

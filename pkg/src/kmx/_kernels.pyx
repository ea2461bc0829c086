# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels.

Mirror of `kmx._kernels_py`: same five functions, same exact results.
The fast paths run on C 64-bit integers; anything that could not be
reproduced exactly there (non-integer entries, magnitudes near the minor
bound, a zero diagonal block that is not wholly zero) is delegated to the
pure-Python module, so results never depend on C integer width. Keep the
two modules in sync.
"""

import heapq

from libc.math cimport log2

from . import _kernels_py

BACKEND = "cython"

FINITE, AFFINE, INDEFINITE = 0, 1, 2

# Stored search states and matrix entries are kept below these bounds so
# every intermediate product provably fits in a signed 64-bit integer.
cdef long long _COORD_LIM = 1125899906842624          # 2**50
cdef long long _ENTRY_LIM = 1152921504606846976       # 2**60


cdef inline int _popcount(unsigned long long x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _ctz(unsigned long long x) noexcept nogil:
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


cdef int _bareiss(long long * a, int n, int * pos, int * neg, int * zero) noexcept nogil:
    """Inertia of the symmetric matrix in `a` (row-major, destroyed).

    Fraction-free elimination with symmetric pivot swaps; the pivot
    sequence lists the leading principal minors of a symmetric reordering,
    so counting sign agreements and sign changes along (1, D_1, ..., D_r)
    gives the positive and negative square counts. Returns 0 on success
    and 1 when the remaining diagonal vanishes while off-diagonal entries
    survive, which needs the rational fallback.
    """
    cdef int k = 0, i, j, pidx, cur, last = 1
    cdef long long p, prev = 1, t
    pos[0] = neg[0] = zero[0] = 0
    while k < n:
        pidx = -1
        for i in range(k, n):
            if a[i * n + i] != 0:
                pidx = i
                break
        if pidx < 0:
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i * n + j] != 0:
                        return 1
            zero[0] += n - k
            return 0
        if pidx != k:
            for j in range(n):
                t = a[k * n + j]
                a[k * n + j] = a[pidx * n + j]
                a[pidx * n + j] = t
            for i in range(n):
                t = a[i * n + k]
                a[i * n + k] = a[i * n + pidx]
                a[i * n + pidx] = t
        p = a[k * n + k]
        cur = 1 if p > 0 else -1
        if cur == last:
            pos[0] += 1
        else:
            neg[0] += 1
        last = cur
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i * n + j] = (p * a[i * n + j] - a[i * n + k] * a[k * n + j]) // prev
        prev = p
        k += 1
    return 0


cdef bint _mat_fits(object mat, Py_ssize_t n, long long * buf, long long lim,
                    long long * bmax_out):
    """Copy an n x n all-int matrix into buf; False if it does not fit."""
    cdef Py_ssize_t i = 0, j
    cdef long long x, bmax = 0
    try:
        for row in mat:
            if i >= n or len(row) != n:
                return False
            j = 0
            for e in row:
                if j >= n or not isinstance(e, int):
                    return False
                if e > lim or e < -lim:
                    return False
                x = e
                buf[i * n + j] = x
                if x < 0:
                    x = -x
                if x > bmax:
                    bmax = x
                j += 1
            if j != n:
                return False
            i += 1
    except Exception:
        return False
    if i != n:
        return False
    bmax_out[0] = bmax
    return True


cdef bint _vec_fits(object v, Py_ssize_t n, long long * buf, long long lim):
    """Copy a length-n all-int vector into buf; False if it does not fit."""
    cdef Py_ssize_t j = 0
    try:
        for e in v:
            if j >= n or not isinstance(e, int):
                return False
            if e > lim or e < -lim:
                return False
            buf[j] = e
            j += 1
    except Exception:
        return False
    return j == n


def inertia(mat):
    """Exact inertia (n_plus, n_minus, n_zero) of a symmetric matrix.

    Fraction-free integer elimination whose pivots are leading principal
    minors; sign changes along the pivot sequence count the negative
    squares. Inputs outside the safe integer path (non-integer entries,
    magnitudes that could push a minor past 64 bits, nonsymmetric input,
    or a degenerate zero-diagonal block) go to the rational fallback.
    """
    cdef Py_ssize_t n = len(mat)
    cdef long long buf[1024]
    cdef long long bmax = 0
    cdef double b
    cdef int i, j, pos, neg, zero
    if n > 32 or not _mat_fits(mat, n, buf, _ENTRY_LIM, &bmax):
        return _kernels_py.inertia(mat)
    for i in range(<int> n):
        for j in range(i + 1, <int> n):
            if buf[i * n + j] != buf[j * n + i]:
                return _kernels_py.inertia(mat)
    if n >= 2:
        b = <double> bmax
        if b < 2:
            b = 2
        if 2.0 * (<double> n - 1) * (log2(b) + 0.5 * log2(<double> n)) > 61.0:
            return _kernels_py.inertia(mat)
    if _bareiss(buf, <int> n, &pos, &neg, &zero) != 0:
        return _kernels_py.inertia(mat)
    return (pos, neg, zero)


def positive_root_test(gcm, v):
    """True iff the all-nonnegative integer vector v is a positive real root.

    Descends by reflecting at the lowest node pairing positively with the
    current vector; for a genuine root this walks down to a simple root
    without ever leaving the nonnegative orthant, and the height strictly
    drops each step so the loop always terminates.
    """
    cdef Py_ssize_t n = len(gcm)
    cdef long long g[1024]
    cdef long long w[32]
    cdef long long bmax = 0, s, c
    cdef int i, j, k, nn, nzc, nzi
    if n > 32 or not _mat_fits(gcm, n, g, 8, &bmax):
        return _kernels_py.positive_root_test(gcm, v)
    if not _vec_fits(v, n, w, _COORD_LIM):
        return _kernels_py.positive_root_test(gcm, v)
    nn = <int> n
    while True:
        nzc = 0
        nzi = -1
        for j in range(nn):
            if w[j] != 0:
                nzc += 1
                nzi = j
        if nzc == 1 and w[nzi] == 1:
            return True
        k = -1
        c = 0
        for i in range(nn):
            s = 0
            for j in range(nn):
                if w[j] != 0:
                    s += g[i * nn + j] * w[j]
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
    cdef Py_ssize_t n = len(gcm)
    cdef long long g[1024]
    cdef long long v[32]
    cdef long long bmax = 0, c, s, hh
    cdef int i, j, nn
    if n > 32 or not _mat_fits(gcm, n, g, 8, &bmax):
        return _kernels_py.roots_up_to_height(gcm, h)
    if not isinstance(h, int) or h > 1000000:
        return _kernels_py.roots_up_to_height(gcm, h)
    if h < 1:
        return []
    hh = h
    nn = <int> n
    seen = set()
    frontier = []
    for i in range(nn):
        t = tuple(1 if i == j else 0 for j in range(nn))
        seen.add(t)
        frontier.append(t)
    while frontier:
        nxt = []
        for vt in frontier:
            s = 0
            for j in range(nn):
                v[j] = vt[j]
                s += v[j]
            for i in range(nn):
                c = 0
                for j in range(nn):
                    if v[j] != 0:
                        c += g[i * nn + j] * v[j]
                if c == 0:
                    continue
                if v[i] - c < 0 or s - c > hh:
                    continue
                tw = vt[:i] + (v[i] - c,) + vt[i + 1:]
                if tw in seen:
                    continue
                seen.add(tw)
                nxt.append(tw)
        frontier = nxt
    out = []
    for vt in seen:
        out.append(vt)
        out.append(tuple(-x for x in vt))
    out.sort()
    return out


def pair_witness(gcm, a, b, length_bound, budget, sign):
    """Best-first search for a Weyl word sending both roots to the positive
    (sign=+1) or negative (sign=-1) side.

    Returns the word as a list of node indexes applied left to right, or
    None if no witness was found within the word-length bound and the node
    budget. Priority is (combined wrong-side height, depth, insertion
    order), which makes the search deterministic and strongly directed.
    """
    cdef Py_ssize_t n = len(gcm)
    cdef long long g[1024]
    cdef long long va[32]
    cdef long long vb[32]
    cdef long long bmax = 0, ca, cb, suma, sumb, sgn, nb, bad0, na_i, nb_i
    cdef long long pops = 0, lbound, bud
    cdef int i, j, nn, d, sid, sid2
    if n > 32 or not _mat_fits(gcm, n, g, 8, &bmax):
        return _kernels_py.pair_witness(gcm, a, b, length_bound, budget, sign)
    if not _vec_fits(a, n, va, _COORD_LIM) or not _vec_fits(b, n, vb, _COORD_LIM):
        return _kernels_py.pair_witness(gcm, a, b, length_bound, budget, sign)
    if not isinstance(length_bound, int) or not isinstance(budget, int):
        return _kernels_py.pair_witness(gcm, a, b, length_bound, budget, sign)
    if not isinstance(sign, int) or sign > 4 or sign < -4:
        return _kernels_py.pair_witness(gcm, a, b, length_bound, budget, sign)
    if length_bound > 1000000 or budget > _ENTRY_LIM:
        return _kernels_py.pair_witness(gcm, a, b, length_bound, budget, sign)
    nn = <int> n
    sgn = sign
    lbound = length_bound if length_bound > 0 else 0
    bud = budget
    suma = 0
    sumb = 0
    for j in range(nn):
        suma += va[j]
        sumb += vb[j]
    bad0 = 0
    if suma * sgn < 0:
        bad0 -= suma * sgn
    if sumb * sgn < 0:
        bad0 -= sumb * sgn
    ta = tuple(a)
    tb = tuple(b)
    if bad0 == 0:
        return []
    start = (ta, tb)
    states = [start]
    parent = [(-1, -1)]
    depth = [0]
    seen = {start}
    heap = [(bad0, 0, 0)]
    seq = 1
    while heap:
        top = heapq.heappop(heap)
        sid = top[2]
        pops += 1
        if pops > bud:
            return None
        d = depth[sid]
        if d >= lbound:
            continue
        va_t, vb_t = states[sid]
        suma = 0
        sumb = 0
        for j in range(nn):
            va[j] = va_t[j]
            vb[j] = vb_t[j]
            suma += va[j]
            sumb += vb[j]
        for i in range(nn):
            ca = 0
            cb = 0
            for j in range(nn):
                if va[j] != 0:
                    ca += g[i * nn + j] * va[j]
                if vb[j] != 0:
                    cb += g[i * nn + j] * vb[j]
            if ca == 0 and cb == 0:
                continue
            na_i = va[i] - ca
            nb_i = vb[i] - cb
            if (na_i > _COORD_LIM or na_i < -_COORD_LIM or
                    nb_i > _COORD_LIM or nb_i < -_COORD_LIM):
                return _kernels_py.pair_witness(gcm, a, b, length_bound, budget, sign)
            st = (va_t[:i] + (na_i,) + va_t[i + 1:],
                  vb_t[:i] + (nb_i,) + vb_t[i + 1:])
            if st in seen:
                continue
            seen.add(st)
            sid2 = len(states)
            states.append(st)
            parent.append((sid, i))
            depth.append(d + 1)
            nb = 0
            if (suma - ca) * sgn < 0:
                nb -= (suma - ca) * sgn
            if (sumb - cb) * sgn < 0:
                nb -= (sumb - cb) * sgn
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


cdef int _classify_sub(int * nodes, int kk, unsigned long long mask,
                       int * bitidx, dict memo) except -1:
    """Classification constant for the labeled induced subdiagram."""
    cdef unsigned long long sub = 0
    cdef int ii, jj, tt, p, ng, z, res
    cdef long long g[1024]
    if kk == 1:
        return 0
    tt = 0
    for ii in range(kk):
        for jj in range(ii + 1, kk):
            if (mask >> bitidx[nodes[ii] * 32 + nodes[jj]]) & 1:
                sub |= (<unsigned long long> 1) << tt
            tt += 1
    key = (kk, sub)
    r = memo.get(key)
    if r is not None:
        return <int> r
    for ii in range(kk * kk):
        g[ii] = 0
    for ii in range(kk):
        g[ii * kk + ii] = 2
    tt = 0
    for ii in range(kk):
        for jj in range(ii + 1, kk):
            if (sub >> tt) & 1:
                g[ii * kk + jj] = -1
                g[jj * kk + ii] = -1
            tt += 1
    if _bareiss(g, kk, &p, &ng, &z) != 0:
        gl = [[2 if ii == jj else 0 for jj in range(kk)] for ii in range(kk)]
        tt = 0
        for ii in range(kk):
            for jj in range(ii + 1, kk):
                if (sub >> tt) & 1:
                    gl[ii][jj] = -1
                    gl[jj][ii] = -1
                tt += 1
        p, ng, z = _kernels_py.inertia(gl)
    if ng:
        res = 2
    elif z:
        res = 1
    else:
        res = 0
    memo[key] = res
    return res


cdef int _mask_survives(unsigned long long mask, int n, int max_edges,
                        unsigned int full, int * pi, int * pj, int * bitidx,
                        dict memo) except -1:
    """1 iff the edge mask is connected hyperbolic, else 0."""
    cdef unsigned int adj[32]
    cdef int nodes[32]
    cdef unsigned long long mm
    cdef unsigned int comp, frontier, nxt, f, rem, cbit, grow, fr, gbits
    cdef int m, i, j, v, u, bit, kk
    m = _popcount(mask)
    if m < n - 1 or m > max_edges:
        return 0
    for i in range(n):
        adj[i] = 0
    mm = mask
    while mm:
        bit = _ctz(mm)
        mm &= mm - 1
        i = pi[bit]
        j = pj[bit]
        adj[i] |= (<unsigned int> 1) << j
        adj[j] |= (<unsigned int> 1) << i
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = _ctz(f)
            f &= f - 1
            nxt |= adj[v]
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    if comp != full:
        return 0
    for v in range(n):
        rem = full & ~((<unsigned int> 1) << v)
        while rem:
            cbit = rem & (~rem + 1)
            grow = cbit
            fr = cbit
            while fr:
                nxt = 0
                f = fr
                while f:
                    u = _ctz(f)
                    f &= f - 1
                    nxt |= adj[u]
                nxt &= rem & ~grow
                grow |= nxt
                fr = nxt
            rem &= ~grow
            kk = 0
            gbits = grow
            while gbits:
                nodes[kk] = _ctz(gbits)
                kk += 1
                gbits &= gbits - 1
            if _classify_sub(nodes, kk, mask, bitidx, memo) == 2:
                return 0
    for v in range(n):
        nodes[v] = v
    if _classify_sub(nodes, n, mask, bitidx, memo) != 2:
        return 0
    return 1


def scan_hyperbolic_masks(rank):
    """Edge masks of every connected hyperbolic diagram on `rank` labeled
    nodes, ascending. Bit for pair (i, j), i<j, is at the lex pair index.

    A connected diagram is hyperbolic iff its form is indefinite and every
    component of every vertex-deleted subdiagram is finite or affine: any
    proper connected induced subdiagram sits inside such a component, and
    a restriction of a positive semidefinite form stays positive
    semidefinite. Each component of a vertex-deleted subdiagram is a tree
    or unicyclic (finite/affine), so m <= (n-1) + deg(v) edges for every
    v, giving the popcount prefilter m <= n(n-1)/(n-2).
    """
    cdef int bitidx[1024]
    cdef int pi[64]
    cdef int pj[64]
    cdef int n, nbits, i, j, t, max_edges
    cdef unsigned int full
    cdef unsigned long long mask, total
    if not isinstance(rank, int) or rank < 1 or rank > 11:
        return _kernels_py.scan_hyperbolic_masks(rank)
    n = rank
    nbits = n * (n - 1) // 2
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[t] = i
            pj[t] = j
            bitidx[i * 32 + j] = t
            bitidx[j * 32 + i] = t
            t += 1
    if n <= 3:
        max_edges = nbits
    else:
        max_edges = (n * (n - 1)) // (n - 2)
    full = (<unsigned int> 1 << n) - 1
    memo = {}
    out = []
    total = (<unsigned long long> 1) << nbits
    mask = 0
    while mask < total:
        if _mask_survives(mask, n, max_edges, full, pi, pj, bitidx, memo) == 1:
            out.append(mask)
        mask += 1
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the kernels in ``_purekernels``.

Bitsets cross the boundary as Python ints and are unpacked into rows of
64-bit words. Outputs match the pure-Python kernels exactly.
"""

from libc.stdint cimport uint64_t, int64_t, uint8_t
from libc.stdlib cimport malloc, calloc, free, qsort
from libc.string cimport memcpy

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

from . import _purekernels as _pure

BACKEND = "cython"


cdef uint64_t* _unpack(adj, Py_ssize_t nv, Py_ssize_t nw) except NULL:
    cdef uint64_t* buf = <uint64_t*>calloc(nv * nw + 1, sizeof(uint64_t))
    cdef Py_ssize_t v
    cdef bytes raw
    if buf == NULL:
        raise MemoryError()
    for v in range(nv):
        raw = (<object>adj[v]).to_bytes(nw * 8, "little")
        memcpy(&buf[v * nw], <char*>raw, nw * 8)
    return buf


cdef object _pack(uint64_t* row, Py_ssize_t nw):
    return int.from_bytes((<char*>row)[:nw * 8], "little")


def intersection_graph(masks, Py_ssize_t size):
    cdef Py_ssize_t nv = len(masks)
    if nv and max(masks).bit_length() > 64:
        return _pure.intersection_graph(masks, size)
    cdef Py_ssize_t nw = (nv + 63) // 64
    cdef Py_ssize_t i, j
    cdef uint64_t a
    cdef uint64_t* m = <uint64_t*>malloc((nv + 1) * sizeof(uint64_t))
    cdef uint64_t* buf = <uint64_t*>calloc(nv * nw + 1, sizeof(uint64_t))
    if m == NULL or buf == NULL:
        free(m)
        free(buf)
        raise MemoryError()
    try:
        for i in range(nv):
            m[i] = <uint64_t>masks[i]
        with nogil:
            for i in range(nv):
                a = m[i]
                for j in range(i + 1, nv):
                    if popcount64(a & m[j]) == size:
                        buf[i * nw + (j >> 6)] |= (<uint64_t>1) << (j & 63)
                        buf[j * nw + (i >> 6)] |= (<uint64_t>1) << (i & 63)
        return [_pack(&buf[i * nw], nw) for i in range(nv)]
    finally:
        free(m)
        free(buf)


cdef struct _BK:
    Py_ssize_t nw
    uint64_t* adj
    uint64_t* P
    uint64_t* X
    uint64_t* C
    int* r


cdef int _expand(_BK* s, Py_ssize_t depth, list out) except -1:
    cdef Py_ssize_t nw = s.nw
    cdef uint64_t* P = s.P + depth * nw
    cdef uint64_t* X = s.X + depth * nw
    cdef uint64_t* C = s.C + depth * nw
    cdef uint64_t* NP = s.P + (depth + 1) * nw
    cdef uint64_t* NX = s.X + (depth + 1) * nw
    cdef uint64_t* row
    cdef uint64_t word, bit, pempty = 0, xempty = 0
    cdef Py_ssize_t w, k, u, v, d
    cdef int c, best = -1
    cdef Py_ssize_t pivot = -1
    cdef object clique
    for w in range(nw):
        pempty |= P[w]
        xempty |= X[w]
    if pempty == 0:
        if xempty == 0:
            clique = 0
            for d in range(depth):
                clique |= (<object>1) << s.r[d]
            out.append(clique)
        return 0
    for w in range(nw):
        word = P[w] | X[w]
        while word:
            u = w * 64 + ctz64(word)
            word &= word - 1
            row = s.adj + u * nw
            c = 0
            for k in range(nw):
                c += popcount64(P[k] & row[k])
            if c > best:
                best = c
                pivot = u
    row = s.adj + pivot * nw
    for w in range(nw):
        C[w] = P[w] & ~row[w]
    for w in range(nw):
        word = C[w]
        while word:
            bit = word & (~word + 1)
            v = w * 64 + ctz64(word)
            word &= word - 1
            row = s.adj + v * nw
            for k in range(nw):
                NP[k] = P[k] & row[k]
                NX[k] = X[k] & row[k]
            s.r[depth] = <int>v
            _expand(s, depth + 1, out)
            P[w] &= ~bit
            X[w] |= bit
    return 0


def maximal_cliques(adj):
    cdef Py_ssize_t nv = len(adj)
    cdef Py_ssize_t nw = (nv + 63) // 64
    cdef Py_ssize_t levels = nv + 2
    cdef _BK s
    cdef Py_ssize_t v
    cdef list out = []
    if nv == 0:
        return out
    s.nw = nw
    s.adj = _unpack(adj, nv, nw)
    s.P = <uint64_t*>calloc(levels * nw, sizeof(uint64_t))
    s.X = <uint64_t*>calloc(levels * nw, sizeof(uint64_t))
    s.C = <uint64_t*>calloc(levels * nw, sizeof(uint64_t))
    s.r = <int*>calloc(levels, sizeof(int))
    try:
        if s.P == NULL or s.X == NULL or s.C == NULL or s.r == NULL:
            raise MemoryError()
        for v in range(nv):
            s.P[v >> 6] |= (<uint64_t>1) << (v & 63)
        _expand(&s, 0, out)
        return out
    finally:
        free(s.adj)
        free(s.P)
        free(s.X)
        free(s.C)
        free(s.r)


def bfs_distances(adj, Py_ssize_t source):
    cdef Py_ssize_t nv = len(adj)
    cdef Py_ssize_t nw = (nv + 63) // 64
    cdef uint64_t* a = _unpack(adj, nv, nw)
    cdef uint64_t* seen = <uint64_t*>calloc(nw + 1, sizeof(uint64_t))
    cdef uint64_t* front = <uint64_t*>calloc(nw + 1, sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>calloc(nw + 1, sizeof(uint64_t))
    cdef int* dist = <int*>malloc((nv + 1) * sizeof(int))
    cdef Py_ssize_t w, k, v
    cdef uint64_t word, any_new
    cdef int d = 0
    try:
        if seen == NULL or front == NULL or nxt == NULL or dist == NULL:
            raise MemoryError()
        for v in range(nv):
            dist[v] = -1
        dist[source] = 0
        seen[source >> 6] = front[source >> 6] = (<uint64_t>1) << (source & 63)
        with nogil:
            while True:
                d += 1
                for k in range(nw):
                    nxt[k] = 0
                for w in range(nw):
                    word = front[w]
                    while word:
                        v = w * 64 + ctz64(word)
                        word &= word - 1
                        for k in range(nw):
                            nxt[k] |= a[v * nw + k]
                any_new = 0
                for k in range(nw):
                    nxt[k] &= ~seen[k]
                    any_new |= nxt[k]
                    seen[k] |= nxt[k]
                    front[k] = nxt[k]
                if any_new == 0:
                    break
                for w in range(nw):
                    word = nxt[w]
                    while word:
                        dist[w * 64 + ctz64(word)] = d
                        word &= word - 1
        return [dist[v] for v in range(nv)]
    finally:
        free(a)
        free(seen)
        free(front)
        free(nxt)
        free(dist)


def diameter(adj):
    cdef Py_ssize_t nv = len(adj)
    cdef Py_ssize_t nw = (nv + 63) // 64
    cdef uint64_t* a
    cdef uint64_t* seen
    cdef uint64_t* front
    cdef uint64_t* nxt
    cdef Py_ssize_t s, w, k, v, count
    cdef uint64_t word, any_new
    cdef int d, best = 0
    cdef bint disconnected = False
    if nv == 0:
        return 0
    a = _unpack(adj, nv, nw)
    seen = <uint64_t*>calloc(nw + 1, sizeof(uint64_t))
    front = <uint64_t*>calloc(nw + 1, sizeof(uint64_t))
    nxt = <uint64_t*>calloc(nw + 1, sizeof(uint64_t))
    try:
        if seen == NULL or front == NULL or nxt == NULL:
            raise MemoryError()
        with nogil:
            for s in range(nv):
                for k in range(nw):
                    seen[k] = 0
                    front[k] = 0
                seen[s >> 6] = (<uint64_t>1) << (s & 63)
                front[s >> 6] = seen[s >> 6]
                d = 0
                while True:
                    for k in range(nw):
                        nxt[k] = 0
                    for w in range(nw):
                        word = front[w]
                        while word:
                            v = w * 64 + ctz64(word)
                            word &= word - 1
                            for k in range(nw):
                                nxt[k] |= a[v * nw + k]
                    any_new = 0
                    for k in range(nw):
                        nxt[k] &= ~seen[k]
                        any_new |= nxt[k]
                    if any_new == 0:
                        break
                    d += 1
                    for k in range(nw):
                        seen[k] |= nxt[k]
                        front[k] = nxt[k]
                count = 0
                for k in range(nw):
                    count += popcount64(seen[k])
                if count != nv:
                    disconnected = True
                    break
                if d > best:
                    best = d
        return -1 if disconnected else best
    finally:
        free(a)
        free(seen)
        free(front)
        free(nxt)


cdef int _cmp_i64(const void* x, const void* y) noexcept nogil:
    cdef int64_t a = (<int64_t*>x)[0]
    cdef int64_t b = (<int64_t*>y)[0]
    return (a > b) - (a < b)


def refine_colors(colors, indptr, first, second):
    cdef Py_ssize_t nv = len(colors)
    cdef Py_ssize_t ne = indptr[nv] if nv else 0
    cdef bint pairs = second is not None
    cdef int64_t* cols = <int64_t*>malloc((nv + 1) * sizeof(int64_t))
    cdef int64_t* ip = <int64_t*>malloc((nv + 1) * sizeof(int64_t))
    cdef int64_t* fa = <int64_t*>malloc((ne + 1) * sizeof(int64_t))
    cdef int64_t* fb = <int64_t*>malloc((ne + 1) * sizeof(int64_t))
    cdef int64_t* codes = <int64_t*>malloc((ne + 1) * sizeof(int64_t))
    cdef uint8_t* raw = <uint8_t*>malloc((ne + 1) * 8)
    cdef Py_ssize_t v, e, b
    cdef int64_t x, y, mult
    cdef uint64_t code
    cdef Py_ssize_t k
    try:
        if not (cols and ip and fa and fb and codes and raw):
            raise MemoryError()
        for v in range(nv):
            cols[v] = colors[v]
        for v in range(nv + 1):
            ip[v] = indptr[v]
        for e in range(ne):
            fa[e] = first[e]
            fb[e] = second[e] if pairs else 0
        k = len(set(colors))
        while True:
            mult = 0
            for v in range(nv):
                if cols[v] > mult:
                    mult = cols[v]
            mult += 1
            with nogil:
                for v in range(nv):
                    for e in range(ip[v], ip[v + 1]):
                        x = cols[fa[e]]
                        if pairs:
                            y = cols[fb[e]]
                            if x > y:
                                x, y = y, x
                            x = x * mult + y
                        codes[e] = x
                    if ip[v + 1] > ip[v]:
                        qsort(&codes[ip[v]], ip[v + 1] - ip[v], sizeof(int64_t), _cmp_i64)
                for e in range(ne):
                    code = <uint64_t>codes[e]
                    for b in range(8):
                        raw[e * 8 + b] = <uint8_t>((code >> (8 * (7 - b))) & 0xFF)
            keys = [
                (cols[v], (<char*>raw)[ip[v] * 8:ip[v + 1] * 8]) for v in range(nv)
            ]
            rank = {key: r for r, key in enumerate(sorted(set(keys)))}
            for v in range(nv):
                cols[v] = rank[keys[v]]
            if len(rank) == k:
                return [cols[v] for v in range(nv)]
            k = len(rank)
    finally:
        free(cols)
        free(ip)
        free(fa)
        free(fb)
        free(codes)
        free(raw)


cdef class Classifier:
    """Compiled twin of ``_purekernels.Classifier``."""

    cdef uint64_t* pts
    cdef int* mem
    cdef int* einv
    cdef int* fbuf
    cdef Py_ssize_t npts, ncoord, deg, ncand

    def __cinit__(self, points, members, einvs):
        cdef Py_ssize_t i, j
        self.npts = len(points)
        self.ncoord = len(members)
        self.deg = len(members[0]) if self.ncoord else 0
        self.ncand = len(einvs)
        self.pts = <uint64_t*>malloc((self.npts + 1) * sizeof(uint64_t))
        self.mem = <int*>malloc((self.ncoord * self.deg + 1) * sizeof(int))
        self.einv = <int*>malloc((self.ncand * self.npts + 1) * sizeof(int))
        self.fbuf = <int*>malloc((self.npts + 1) * sizeof(int))
        if not (self.pts and self.mem and self.einv and self.fbuf):
            raise MemoryError()
        for i in range(self.npts):
            self.pts[i] = <uint64_t>points[i]
        for i in range(self.ncoord):
            if len(members[i]) != self.deg:
                raise ValueError("every coordinate must lie in the same number of points")
            for j in range(self.deg):
                self.mem[i * self.deg + j] = members[i][j]
        for i in range(self.ncand):
            for j in range(self.npts):
                self.einv[i * self.npts + j] = einvs[i][j]

    def __dealloc__(self):
        free(self.pts)
        free(self.mem)
        free(self.einv)
        free(self.fbuf)

    cdef int _try(self, int* ei, int* sigma) noexcept nogil:
        cdef Py_ssize_t a, j, i
        cdef uint64_t acc, used = 0, p, out
        cdef int* f = self.fbuf
        for a in range(self.ncoord):
            acc = <uint64_t>0xFFFFFFFFFFFFFFFF
            for j in range(self.deg):
                acc &= self.pts[f[ei[self.mem[a * self.deg + j]]]]
                if acc == 0:
                    return 0
            if (acc & (acc - 1)) or (acc & used):
                return 0
            used |= acc
            sigma[a] = ctz64(acc)
        for i in range(self.npts):
            p = self.pts[i]
            out = 0
            while p:
                out |= (<uint64_t>1) << sigma[ctz64(p)]
                p &= p - 1
            if out != self.pts[f[ei[i]]]:
                return 0
        return 1

    def classify(self, f):
        cdef Py_ssize_t i, k
        cdef int sigma[64]
        if len(f) != self.npts:
            raise ValueError("point map has the wrong length")
        for i in range(self.npts):
            self.fbuf[i] = f[i]
        for k in range(self.ncand):
            if self._try(&self.einv[k * self.npts], sigma):
                return k, tuple(sigma[i] for i in range(self.ncoord))
        return -1, None

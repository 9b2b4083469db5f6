# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sweep kernel; same contract as ``_sweep_py.sweep``."""
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset, memcpy

cdef enum:
    MODE_ALL = 0
    MODE_SUBALGEBRA = 1
    MODE_IDEAL = 2

ctypedef unsigned long long u64


cdef struct Ctx:
    int n
    int k
    long p
    int mode
    long lo
    long hi
    const long *sc
    long *rows
    int *piv
    long *L
    long *R
    long *tmp
    unsigned char *out
    Py_ssize_t count
    Py_ssize_t cap
    int oom


cdef inline int popcount(u64 x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void compute_left(Ctx *ctx, int i) nogil:
    cdef int n = ctx.n
    cdef long p = ctx.p
    cdef long *r = ctx.rows + i * n
    cdef long *m = ctx.L + i * n * n
    cdef int a, b, c
    cdef long ra
    memset(m, 0, n * n * sizeof(long))
    for a in range(n):
        ra = r[a]
        if ra:
            for b in range(n):
                for c in range(n):
                    m[b * n + c] += ra * ctx.sc[(a * n + b) * n + c]
    for b in range(n * n):
        m[b] %= p


cdef void compute_right(Ctx *ctx, int i) nogil:
    cdef int n = ctx.n
    cdef long p = ctx.p
    cdef long *r = ctx.rows + i * n
    cdef long *m = ctx.R + i * n * n
    cdef int a, b, c
    cdef long rb
    memset(m, 0, n * n * sizeof(long))
    for a in range(n):
        for b in range(n):
            rb = r[b]
            if rb:
                for c in range(n):
                    m[a * n + c] += rb * ctx.sc[(a * n + b) * n + c]
    for b in range(n * n):
        m[b] %= p


cdef bint in_span(Ctx *ctx, const long *v) nogil:
    cdef int n = ctx.n
    cdef long p = ctx.p
    cdef long *w = ctx.tmp
    cdef int t, c
    cdef long f, g
    cdef long *rt
    memcpy(w, v, n * sizeof(long))
    for t in range(ctx.k):
        f = w[ctx.piv[t]]
        if f:
            g = p - f
            rt = ctx.rows + t * n
            for c in range(n):
                w[c] = (w[c] + g * rt[c]) % p
    for c in range(n):
        if w[c]:
            return False
    return True


cdef bint accept(Ctx *ctx, long *v) nogil:
    cdef int n = ctx.n
    cdef int k = ctx.k
    cdef long p = ctx.p
    cdef int i, j, a, b, c
    cdef long rb
    cdef long *rj
    cdef long *Li
    if ctx.mode == MODE_ALL:
        return True
    if ctx.mode == MODE_SUBALGEBRA:
        for i in range(k):
            Li = ctx.L + i * n * n
            for j in range(k):
                rj = ctx.rows + j * n
                memset(v, 0, n * sizeof(long))
                for b in range(n):
                    rb = rj[b]
                    if rb:
                        for c in range(n):
                            v[c] += rb * Li[b * n + c]
                for c in range(n):
                    v[c] %= p
                if not in_span(ctx, v):
                    return False
        return True
    for i in range(k):
        for a in range(n):
            if not in_span(ctx, ctx.L + (i * n + a) * n):
                return False
            if not in_span(ctx, ctx.R + (i * n + a) * n):
                return False
    return True


cdef void emit(Ctx *ctx) nogil:
    cdef Py_ssize_t size = ctx.k * ctx.n
    cdef Py_ssize_t i
    cdef unsigned char *grown
    if ctx.count + size > ctx.cap:
        grown = <unsigned char *> realloc(ctx.out, 2 * ctx.cap + size)
        if grown == NULL:
            ctx.oom = 1
            return
        ctx.out = grown
        ctx.cap = 2 * ctx.cap + size
    for i in range(size):
        ctx.out[ctx.count + i] = <unsigned char> ctx.rows[i]
    ctx.count += size


cdef void gen(Ctx *ctx, int level, u64 allowed, long *v) nogil:
    cdef int n = ctx.n
    cdef long p = ctx.p
    cdef int need = ctx.k - level
    cdef int c, m, pos
    cdef u64 later, zeros
    cdef long count, base, t, t0, t1, x, d
    cdef long *row
    c = n - 1
    while c >= 0:
        if ctx.oom:
            return
        if not ((allowed >> c) & 1):
            c -= 1
            continue
        later = allowed & ~((<u64> 1 << (c + 1)) - 1)
        m = n - c - 1
        count = 1
        for pos in range(m):
            count *= p
        t0 = 0
        t1 = count
        if level == 0:
            base = (count - 1) // (p - 1)
            if base >= ctx.hi:
                return
            if base + count <= ctx.lo:
                c -= 1
                continue
            if ctx.lo - base > 0:
                t0 = ctx.lo - base
            if ctx.hi - base < count:
                t1 = ctx.hi - base
        if popcount(later) < need - 1:
            c -= 1
            continue
        row = ctx.rows + level * n
        for t in range(t0, t1):
            memset(row, 0, n * sizeof(long))
            row[c] = 1
            zeros = later
            x = t
            pos = n - 1
            while pos > c:
                d = x % p
                x = x // p
                if d:
                    row[pos] = d
                    zeros &= ~(<u64> 1 << pos)
                pos -= 1
            if need > 1 and popcount(zeros) < need - 1:
                continue
            ctx.piv[level] = c
            if ctx.mode != MODE_ALL:
                compute_left(ctx, level)
                if ctx.mode == MODE_IDEAL:
                    compute_right(ctx, level)
            if need == 1:
                if accept(ctx, v):
                    emit(ctx)
            else:
                gen(ctx, level + 1, zeros, v)
        c -= 1


def sweep(const long[::1] sc, long p, int n, int k, int mode, long lo, long hi):
    """Return accepted RREF matrices as a ``bytes`` of k*n residues each."""
    cdef Ctx ctx
    cdef long *v
    if k == 0:
        return b""
    if n > 62 or p > 255:
        raise ValueError("kernel limited to n <= 62 and p <= 255")
    if mode != MODE_ALL and sc.shape[0] != n * n * n:
        raise ValueError("structure tensor has the wrong size")
    ctx.n = n
    ctx.k = k
    ctx.p = p
    ctx.mode = mode
    ctx.lo = lo
    ctx.hi = hi
    ctx.sc = &sc[0] if sc.shape[0] else NULL
    ctx.rows = <long *> malloc(k * n * sizeof(long))
    ctx.piv = <int *> malloc(k * sizeof(int))
    ctx.L = <long *> malloc(k * n * n * sizeof(long))
    ctx.R = <long *> malloc(k * n * n * sizeof(long))
    ctx.tmp = <long *> malloc(n * sizeof(long))
    v = <long *> malloc(n * sizeof(long))
    ctx.cap = 4096
    ctx.out = <unsigned char *> malloc(ctx.cap)
    ctx.count = 0
    ctx.oom = 0
    try:
        if (ctx.rows == NULL or ctx.piv == NULL or ctx.L == NULL or ctx.R == NULL
                or ctx.tmp == NULL or v == NULL or ctx.out == NULL):
            raise MemoryError()
        with nogil:
            gen(&ctx, 0, ((<u64> 1) << n) - 1, v)
        if ctx.oom:
            raise MemoryError()
        return ctx.out[:ctx.count]
    finally:
        free(ctx.rows)
        free(ctx.piv)
        free(ctx.L)
        free(ctx.R)
        free(ctx.tmp)
        free(v)
        free(ctx.out)

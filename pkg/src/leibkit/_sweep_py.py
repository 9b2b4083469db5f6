"""Pure-Python sweep kernel; mirrors ``_sweep.pyx`` line for line.

Every ``k``-row RREF matrix over GF(p) with ``n`` columns is visited in
lexicographic order of its flattened entries.  The first row is chosen by
descending pivot column, then by its tail read as a base-``p`` number; each
later row must pivot on a column where all earlier rows vanish.  First-row
choices are numbered consecutively ("top-level ordinals"), and a call only
visits ordinals in ``[lo, hi)`` so callers can shard or stream the sweep.
"""

MODE_ALL = 0
MODE_SUBALGEBRA = 1
MODE_IDEAL = 2


def _popcount(x):
    return bin(x).count("1")


def sweep(sc, p, n, k, mode, lo, hi):
    """Return the accepted matrices as a flat list of ints (k*n per match)."""
    out = []
    if k == 0:
        return out
    rows = [None] * k
    piv = [0] * k
    L = [None] * k
    R = [None] * k

    def left(r):
        # L[b][c] = sum_a r[a] sc[a][b][c]
        m = [[0] * n for _ in range(n)]
        for a in range(n):
            ra = r[a]
            if ra:
                base = a * n * n
                for b in range(n):
                    mb = m[b]
                    off = base + b * n
                    for c in range(n):
                        mb[c] += ra * sc[off + c]
        return [[x % p for x in mb] for mb in m]

    def right(r):
        # R[a][c] = sum_b r[b] sc[a][b][c]
        m = [[0] * n for _ in range(n)]
        for a in range(n):
            ma = m[a]
            for b in range(n):
                rb = r[b]
                if rb:
                    off = (a * n + b) * n
                    for c in range(n):
                        ma[c] += rb * sc[off + c]
        return [[x % p for x in ma] for ma in m]

    def in_span(v):
        v = list(v)
        for t in range(k):
            f = v[piv[t]]
            if f:
                g = p - f
                rt = rows[t]
                for c in range(n):
                    v[c] = (v[c] + g * rt[c]) % p
        return not any(v)

    def accept():
        if mode == MODE_ALL:
            return True
        if mode == MODE_SUBALGEBRA:
            for i in range(k):
                Li = L[i]
                for j in range(k):
                    rj = rows[j]
                    v = [0] * n
                    for b in range(n):
                        if rj[b]:
                            Lb = Li[b]
                            for c in range(n):
                                v[c] += rj[b] * Lb[c]
                    if not in_span([x % p for x in v]):
                        return False
            return True
        for i in range(k):
            for a in range(n):
                if not in_span(L[i][a]) or not in_span(R[i][a]):
                    return False
        return True

    def gen(level, allowed):
        need = k - level
        for c in range(n - 1, -1, -1):
            if not (allowed >> c) & 1:
                continue
            later = allowed & ~((1 << (c + 1)) - 1)
            m = n - c - 1
            count = p ** m
            t0, t1 = 0, count
            if level == 0:
                base = (count - 1) // (p - 1)
                if base >= hi:
                    return
                if base + count <= lo:
                    continue
                t0 = max(0, lo - base)
                t1 = min(count, hi - base)
            if _popcount(later) < need - 1:
                continue
            for t in range(t0, t1):
                row = [0] * n
                row[c] = 1
                zeros = later
                x = t
                for pos in range(n - 1, c, -1):
                    d = x % p
                    x //= p
                    if d:
                        row[pos] = d
                        zeros &= ~(1 << pos)
                if need > 1 and _popcount(zeros) < need - 1:
                    continue
                rows[level] = row
                piv[level] = c
                if mode != MODE_ALL:
                    L[level] = left(row)
                    if mode == MODE_IDEAL:
                        R[level] = right(row)
                if need == 1:
                    if accept():
                        for r in rows:
                            out.extend(r)
                else:
                    gen(level + 1, zeros)

    gen(0, (1 << n) - 1)
    return out

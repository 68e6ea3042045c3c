# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled lattice box scan; same contract as ``_scan_py.scan_shell``.

Callers guarantee every intermediate fits in a signed 64-bit integer.
"""

cdef enum:
    MAX_RANK = 8


def scan_shell(form, shift, scale, lo, hi, long long bound_num, long long bound_den, bint exact):
    cdef int r = len(shift)
    cdef long long f[MAX_RANK][MAX_RANK]
    cdef long long sh[MAX_RANK]
    cdef long long c[MAX_RANK]
    cdef long long clo[MAX_RANK]
    cdef long long chi[MAX_RANK]
    cdef long long v[MAX_RANK]
    cdef long long sc = scale
    cdef long long q, s, lhs
    cdef long long scanned = 0
    cdef int i, j, k
    if r > MAX_RANK or r < 1:
        raise ValueError("rank out of range for the compiled scan")
    for i in range(r):
        sh[i] = shift[i]
        clo[i] = lo[i]
        chi[i] = hi[i]
        c[i] = clo[i]
        if clo[i] > chi[i]:
            return [], 0
        for j in range(r):
            f[i][j] = form[i][j]
    hits = []
    while True:
        scanned += 1
        for i in range(r):
            v[i] = sc * c[i] + sh[i]
        q = 0
        for i in range(r):
            s = 0
            for j in range(r):
                s += f[i][j] * v[j]
            q += v[i] * s
        lhs = q * bound_den
        if (lhs == bound_num) if exact else (lhs <= bound_num):
            hits.append((tuple([c[k] for k in range(r)]), q))
        # odometer increment, last coordinate fastest
        k = r - 1
        while k >= 0:
            c[k] += 1
            if c[k] <= chi[k]:
                break
            c[k] = clo[k]
            k -= 1
        if k < 0:
            break
    return hits, scanned

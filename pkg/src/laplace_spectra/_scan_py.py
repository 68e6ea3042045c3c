"""Pure-Python lattice box scan (reference fallback for ``_scan_ext``)."""
from itertools import product


def scan_shell(form, shift, scale, lo, hi, bound_num, bound_den, exact):
    """Integer points c in the box lo <= c <= hi with v = scale*c + shift and
    q(v) = v^T form v satisfying q*bound_den <= bound_num (== when exact).

    Returns (hits, scanned) where hits is a list of (c, q(v)).
    """
    r = len(shift)
    hits = []
    scanned = 0
    for c in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        scanned += 1
        v = [scale * c[i] + shift[i] for i in range(r)]
        q = 0
        for i in range(r):
            row = form[i]
            s = 0
            for j in range(r):
                s += row[j] * v[j]
            q += v[i] * s
        lhs = q * bound_den
        if lhs == bound_num if exact else lhs <= bound_num:
            hits.append((c, q))
    return hits, scanned

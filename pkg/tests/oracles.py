"""Independent reference computations used by the tests.

Nothing here calls into the package's algorithms; only plain Fractions,
itertools and closed formulas.
"""
from fractions import Fraction
from itertools import permutations, product
from math import prod


def det_leibniz(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = prod((Fraction(rows[i][perm[i]]) for i in range(n)), start=Fraction(1))
        total += -term if inversions % 2 else term
    return total


def char_poly_interp(rows):
    """Coefficients (lowest first) of det(tI - A) by Lagrange interpolation."""
    n = len(rows)
    xs = list(range(n + 1))
    ys = [det_leibniz([[(x if i == j else 0) - Fraction(rows[i][j]) for j in range(n)]
                       for i in range(n)]) for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for k, xk in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == k:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xk - xj
        for d in range(n + 1):
            coeffs[d] += ys[k] * basis[d] / denom
    return coeffs


def resultant_from_roots(lc_p, roots_p, lc_q, roots_q):
    """res(p, q) = lc(p)^deg q * lc(q)^deg p * prod (a_i - b_j)."""
    value = Fraction(lc_p) ** len(roots_q) * Fraction(lc_q) ** len(roots_p)
    for a in roots_p:
        for b in roots_q:
            value *= Fraction(a) - Fraction(b)
    return value


def poly_from_roots(lc, roots):
    coeffs = [Fraction(lc)]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        for d in range(len(coeffs)):
            shifted[d] -= Fraction(r) * coeffs[d]
        coeffs = shifted
    return coeffs


# A2, long roots of squared length 2: (w_i, w_j) = [[2/3, 1/3], [1/3, 2/3]],
# so (mu+delta, mu+delta) = 2/3 (x^2 + xy + y^2) with (x, y) = Dynkin labels + 1.
def a2_brute_force(limit=100):
    classes = {}
    for x in range(1, limit + 1):
        for y in range(1, limit + 1):
            n = x * x + x * y + y * y
            if n <= limit:
                classes.setdefault(Fraction(2 * n, 3), []).append((x - 1, y - 1))
    return classes


def a2_dim(p, q):
    return (p + 1) * (q + 1) * (p + q + 2) // 2


WEYL_ORDER = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384,
              "C2": 8, "C3": 48, "C4": 384, "D3": 24, "D4": 192, "G2": 12,
              "BC1": 2, "BC2": 8, "BC3": 48, "BC4": 384}


def gram_preserving_permutations(points, inner):
    """Count permutations of a spanning point set preserving every inner product.

    For a spanning set each such permutation extends to a unique orthogonal
    map, so this is the order of the set's symmetry group.
    """
    n = len(points)
    gram = [[inner(points[i], points[j]) for j in range(n)] for i in range(n)]
    count = 0
    for perm in permutations(range(n)):
        if all(gram[perm[i]][perm[j]] == gram[i][j] for i in range(n) for j in range(i, n)):
            count += 1
    return count


def inner_product_profile(points, inner, i):
    return sorted(inner(points[i], points[j]) for j in range(len(points)) if j != i)


def spin_matrices(m):
    """Standard J_x, J_y, J_z for spin j = m/2 as (real, imaginary) Fraction pairs.

    Basis |j, mz> with mz = j, j-1, ..., -j; J_+ |mz> = sqrt(j(j+1) - mz(mz+1)).
    Returns sum of J_k^2 as a list of Fractions on the diagonal, computed via
    J^2 = J_z^2 + (J_+J_- + J_-J_+)/2, which only needs squared ladder coefficients.
    """
    j = Fraction(m, 2)
    mzs = [j - k for k in range(m + 1)]
    diag = []
    for mz in mzs:
        up = j * (j + 1) - mz * (mz + 1)  # |<mz+1|J+|mz>|^2
        down = j * (j + 1) - mz * (mz - 1)  # |<mz-1|J-|mz>|^2
        diag.append(mz * mz + (up + down) / 2)
    return diag


def quaternion_mult_table():
    """Q8 via 4-vectors (a, b, c, d) = a + bi + cj + dk with Hamilton products."""
    def hamilton(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
    names = {(1, 0, 0, 0): "1", (-1, 0, 0, 0): "-1", (0, 1, 0, 0): "i", (0, -1, 0, 0): "-i",
             (0, 0, 1, 0): "j", (0, 0, -1, 0): "-j", (0, 0, 0, 1): "ij", (0, 0, 0, -1): "-ij"}
    vecs = {v: k for k, v in names.items()}
    return {(x, y): names[hamilton(vecs[x], vecs[y])] for x in vecs for y in vecs}


def box_points(rank, radius):
    return product(range(-radius, radius + 1), repeat=rank)

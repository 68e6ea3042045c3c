"""Exact enumeration of shifted lattice points in a ball or on a sphere.

Points are mu = B c (B the lattice basis, c integral) and the shifted vector
x = mu + delta.  With M = B^T G B and d the basis coordinates of delta,
(x, x) = (c + d)^T M (c + d), so every solution lies in the box
|c_i + d_i| <= sqrt(R * (M^-1)_ii).  The integer scan over that box runs in
the compiled kernel when it is available and the values fit in 64 bits.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import _scan_py
from .errors import InputError
from .exactmath import Matrix, vec_add
from .rootsystem import Lattice, RootSystem

try:
    from . import _scan_ext
except ImportError:  # extension not built
    _scan_ext = None

INT64_LIMIT = 2 ** 62
BOX_ARGUMENT = ("inverse-Gram box: every lattice point with (mu+delta, mu+delta) <= R has "
                "basis coordinates c with |c_i + d_i| <= sqrt(R (M^-1)_ii), M = B^T G B, "
                "d = basis coordinates of delta; the whole integer box is scanned")


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _scan_ext is not None else [])


def default_backend() -> str:
    forced = os.environ.get("LAPLACE_SPECTRA_BACKEND")
    if forced:
        if forced not in ("python", "compiled"):
            raise InputError(f"LAPLACE_SPECTRA_BACKEND must be 'python' or 'compiled', got {forced!r}")
        return forced
    return "compiled" if _scan_ext is not None else "python"


BACKEND = default_backend()


@dataclass(frozen=True)
class ScanResult:
    points: tuple  # ((mu, a_squared), ...) in scan order
    box: tuple  # ((lo, hi), ...) on basis coordinates
    scanned: int
    backend: str

    def bound_record(self) -> dict:
        return {"method": BOX_ARGUMENT,
                "box": [list(b) for b in self.box],
                "points_scanned": self.scanned}


def _lcm_den(values) -> int:
    out = 1
    for v in values:
        out = out * v.denominator // math.gcd(out, v.denominator)
    return out


def _ceil_sqrt_bound(q: Fraction) -> int:
    """An integer s with s >= sqrt(q), q >= 0."""
    p, d = q.numerator, q.denominator
    return math.isqrt(p * d) // d + 1


@dataclass(frozen=True)
class IntegerProblem:
    """The scan in integer form: hits are c in [lo, hi] with
    (s c + shift)^T form (s c + shift) <= bound_num / bound_den (== when exact)."""
    form: list
    shift: list
    scale: int
    lo: list
    hi: list
    bound_num: int
    bound_den: int
    box: tuple
    denom: int  # (x, x) = q / denom for the kernel's integer value q

    def fits_int64(self) -> bool:
        vmax = (max(abs(self.scale * x) for x in self.lo + self.hi)
                + max(abs(x) for x in self.shift))
        fmax = max(abs(x) for row in self.form for x in row) or 1
        worst = len(self.lo) ** 2 * fmax * vmax * vmax
        return (max(worst * self.bound_den, abs(self.bound_num)) < INT64_LIMIT
                and len(self.lo) <= 8)


def integer_problem(rs: RootSystem, lattice: Lattice, a_squared: Fraction) -> IntegerProblem:
    basis = lattice.basis
    bmat = Matrix.from_columns(basis)
    gram_lat = bmat.transpose() @ rs.gram @ bmat
    d = lattice.coordinates(rs.delta)
    if d is None:
        raise InputError("delta does not lie in the span of the lattice basis")
    inv = gram_lat.inverse()
    box = []
    for i in range(len(basis)):
        s = _ceil_sqrt_bound(a_squared * inv[i, i])
        box.append((math.floor(-d[i] - s), math.ceil(-d[i] + s)))
    scale = _lcm_den(d)
    e = _lcm_den(x for row in gram_lat.entries for x in row)
    return IntegerProblem(
        form=[[int(x * e) for x in row] for row in gram_lat.entries],
        shift=[int(x * scale) for x in d],
        scale=scale,
        lo=[b[0] for b in box],
        hi=[b[1] for b in box],
        bound_num=a_squared.numerator * e * scale * scale,
        bound_den=a_squared.denominator,
        box=tuple(box),
        denom=e * scale * scale,
    )


def run_kernel(problem: IntegerProblem, exact: bool, backend: str) -> tuple[list, int, str]:
    """(hits, scanned, backend actually used); falls back to Python on overflow risk."""
    if backend == "compiled":
        if _scan_ext is None:
            raise InputError("compiled scan backend is not built")
        if not problem.fits_int64():
            backend = "python"
    kernel = _scan_ext if backend == "compiled" else _scan_py
    hits, scanned = kernel.scan_shell(problem.form, problem.shift, problem.scale, problem.lo,
                                      problem.hi, problem.bound_num, problem.bound_den, exact)
    return hits, scanned, backend


def scan(rs: RootSystem, lattice: Lattice, a_squared: Fraction, exact: bool,
         backend: str | None = None) -> ScanResult:
    """Lattice points mu with (mu+delta, mu+delta) <= a_squared (== when exact)."""
    a_squared = Fraction(a_squared)
    chosen = backend or default_backend()
    if chosen not in ("python", "compiled"):
        raise InputError(f"unknown scan backend {chosen!r}")
    r = len(lattice.basis)
    if a_squared < 0:
        if lattice.coordinates(rs.delta) is None:
            raise InputError("delta does not lie in the span of the lattice basis")
        return ScanResult((), tuple((0, -1) for _ in range(r)), 0, chosen)
    problem = integer_problem(rs, lattice, a_squared)
    hits, scanned, chosen = run_kernel(problem, exact, chosen)

    # decode with one common denominator for the basis vectors
    bden = _lcm_den(x for b in lattice.basis for x in b)
    ibasis = [[int(x * bden) for x in b] for b in lattice.basis]
    dim = rs.ambient_dim
    points = []
    for c, q in hits:
        mu = tuple(Fraction(sum(ci * b[k] for ci, b in zip(c, ibasis)), bden) for k in range(dim))
        points.append((mu, Fraction(q, problem.denom)))
    return ScanResult(tuple(points), problem.box, scanned, chosen)

"""SU(2) operator laboratory.

Irreducible representations are realized on homogeneous polynomials of
degree m in two variables, with the basis u_k = i*sigma_k of su(2) (Pauli
sigma_k), orthonormal for g0(X, Y) = -trace(XY)/2.  For a symmetric 3x3
kappa the operator D(kappa) = -sum kappa_ij rho(u_i) rho(u_j) is built
exactly, and the resultant criteria a, b, c are evaluated on its
characteristic polynomials.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError, InputError, InvariantViolation, CapacityError
from .exactmath import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    Matrix,
    Polynomial,
    char_poly,
    derivative,
    format_rational,
    is_perfect_square,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    sturm_real_root_count,
    to_fraction,
)
from .reptype import type_of
from .rootsystem import build_root_system

MAX_M = 64
MAX_CERT_M = 12
GENERATOR_NAMES = ("u1", "u2", "u3")


def su2_basis() -> tuple[Matrix, Matrix, Matrix]:
    u1 = Matrix([[ZERO, I], [I, ZERO]])
    u2 = Matrix([[ZERO, ONE], [-ONE, ZERO]])
    u3 = Matrix([[I, ZERO], [ZERO, -I]])
    return u1, u2, u3


def g0(x: Matrix, y: Matrix) -> GaussianRational:
    return -(x @ y).trace() / 2


def _bracket(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


@lru_cache(maxsize=1)
def structure_constants() -> tuple:
    """c[a][b][c] with [u_a, u_b] = sum_c c[a][b][c] u_c, read off the 2x2 model."""
    u = su2_basis()
    for a in range(3):
        for b in range(3):
            if g0(u[a], u[b]) != (1 if a == b else 0):
                raise InvariantViolation("u_k are not g0-orthonormal")
    consts = tuple(tuple(tuple(g0(_bracket(u[a], u[b]), u[c]) for c in range(3))
                         for b in range(3)) for a in range(3))
    for a in range(3):
        for b in range(3):
            rebuilt = sum((u[c].scale(consts[a][b][c]) for c in range(1, 3)),
                          u[0].scale(consts[a][b][0]))
            if rebuilt != _bracket(u[a], u[b]):
                raise InvariantViolation("bracket is not in the span of the basis")
    return consts


def _derivation_matrix(x: Matrix, m: int) -> Matrix:
    """Action of x on Sym^m(C^2) in the basis e1^(m-b) e2^b, b = 0..m."""
    n = m + 1
    rows = [[ZERO] * n for _ in range(n)]
    for b in range(n):
        a = m - b
        rows[b][b] = rows[b][b] + x[0, 0] * a + x[1, 1] * b
        if a > 0:
            rows[b + 1][b] = rows[b + 1][b] + x[1, 0] * a
        if b > 0:
            rows[b - 1][b] = rows[b - 1][b] + x[0, 1] * b
    return Matrix(rows)


@lru_cache(maxsize=None)
def irrep_matrices(m: int) -> tuple[Matrix, Matrix, Matrix]:
    """rho(u1), rho(u2), rho(u3) on the (m+1)-dimensional irreducible module."""
    if not isinstance(m, int) or not 0 <= m <= MAX_M:
        raise CapacityError(f"irrep_matrices supports 0 <= m <= {MAX_M}")
    mats = tuple(_derivation_matrix(u, m) for u in su2_basis())
    check_homomorphism(mats)
    return mats


def check_homomorphism(mats: Sequence[Matrix]) -> None:
    consts = structure_constants()
    for a in range(3):
        for b in range(a + 1, 3):
            lhs = _bracket(mats[a], mats[b])
            rhs = sum((mats[c].scale(consts[a][b][c]) for c in range(1, 3)),
                      mats[0].scale(consts[a][b][0]))
            if lhs != rhs:
                raise InvariantViolation(f"rho is not a Lie homomorphism on [u{a+1}, u{b+1}]")


@dataclass(frozen=True)
class KappaMatrix:
    entries: Matrix

    def __post_init__(self):
        if not self.entries.is_square:
            raise InputError("kappa must be square")
        if not self.entries.is_symmetric():
            raise InputError("kappa must be symmetric")

    @classmethod
    def of(cls, rows) -> "KappaMatrix":
        if isinstance(rows, KappaMatrix):
            return rows
        if isinstance(rows, Matrix):
            return cls(rows)
        return cls(Matrix([[to_fraction(x) for x in r] for r in rows]))

    @classmethod
    def parse(cls, text: str) -> "KappaMatrix":
        """Parse ``"1,0,0;0,1,0;0,0,1"``."""
        try:
            rows = [[to_fraction(x) for x in r.split(",")] for r in text.strip().split(";")]
        except InputError:
            raise
        return cls.of(rows)

    @property
    def positive(self) -> bool:
        """Membership in sym+, by leading principal minors."""
        return all(x > 0 for x in self.entries.leading_minors())

    def to_json(self) -> list:
        return self.entries.to_json()

    def __str__(self):
        return ";".join(",".join(format_rational(x) for x in r) for r in self.entries.entries)


def _operator(mats: Sequence[Matrix], kappa: Matrix, idx: Sequence[int]) -> Matrix:
    n = mats[0].rows
    total = Matrix.zeros(n, n, ZERO)
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            k = kappa[a, b]
            if k:
                total = total + (mats[i] @ mats[j]).scale(GaussianRational.coerce(-k))
    return total


@dataclass(frozen=True)
class OperatorBundle:
    m: int
    rep_matrices: tuple
    kappa: KappaMatrix
    d_matrix: Matrix
    char_poly: Polynomial
    rep_type: str

    def to_json(self) -> dict:
        sqf = squarefree_decomposition(self.char_poly)
        return {
            "m": self.m,
            "type": self.rep_type,
            "kappa": self.kappa.to_json(),
            "kappa_positive": self.kappa.positive,
            "d_matrix": self.d_matrix.to_json(),
            "char_poly": self.char_poly.to_json(),
            "char_poly_text": str(self.char_poly),
            "squarefree_decomposition": [
                {"factor": f.to_json(), "factor_text": str(f), "multiplicity": k} for f, k in sqf],
        }


def su2_type(m: int) -> str:
    rs = build_root_system("A", 1)
    return type_of(rs, rs.from_dynkin([m])).value


def d_operator(kappa, m: int) -> OperatorBundle:
    """D(kappa) on the (m+1)-dimensional irreducible module, with its characteristic polynomial."""
    kappa = KappaMatrix.of(kappa)
    if kappa.entries.shape != (3, 3):
        raise InputError("kappa must be 3x3 for su(2)")
    mats = irrep_matrices(m)
    d = _operator(mats, kappa.entries, (0, 1, 2))
    p = char_poly(d)
    if not p.is_real():
        raise InvariantViolation("characteristic polynomial has non-real coefficients")
    return OperatorBundle(m, mats, kappa, d, p, su2_type(m))


def _generator_indices(k_generators) -> tuple[int, ...]:
    idx = []
    for g in k_generators:
        if isinstance(g, int):
            i = g
        elif g in GENERATOR_NAMES:
            i = GENERATOR_NAMES.index(g)
        else:
            raise InputError(f"unknown generator {g!r}; use u1, u2, u3")
        if not 0 <= i < 3:
            raise InputError(f"generator index {i} out of range")
        idx.append(i)
    idx = sorted(set(idx))
    if len(idx) == 2:
        raise InputError("two basis vectors of su(2) never span a subalgebra")
    return tuple(idx)


SUBGROUPS = {"trivial": (), "torus": ("u3",)}


def invariant_subspace(k_generators, m: int) -> list[tuple]:
    """Basis of V^K as the joint kernel of the generators' matrices."""
    idx = _generator_indices(k_generators)
    mats = irrep_matrices(m)
    n = m + 1
    if not idx:
        return [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
    stacked = Matrix([row for i in idx for row in mats[i].entries])
    return stacked.nullspace()


def restricted_operator(kappa_mm, m: int, vk_basis: Sequence[tuple], k_generators=("u3",)) -> Matrix:
    """-sum_{i,j in m} kappa_ij rho(u_i) rho(u_j) compressed to V^K.

    ``kappa_mm`` is indexed by the complement of ``k_generators``.
    Raises if V^K is not invariant (kappa not Ad_K-equivariant).
    """
    if not vk_basis:
        raise DomainError("V^K is zero; there is no restricted operator")
    idx = _generator_indices(k_generators)
    m_idx = tuple(i for i in range(3) if i not in idx)
    kappa_mm = KappaMatrix.of(kappa_mm).entries
    if kappa_mm.shape != (len(m_idx), len(m_idx)):
        raise InputError(f"kappa on the complement must be {len(m_idx)}x{len(m_idx)}")
    op = _operator(irrep_matrices(m), kappa_mm, m_idx)
    basis = Matrix.from_columns(vk_basis)
    cols = []
    for v in vk_basis:
        x = basis.solve(op @ v)
        if x is None:
            raise InvariantViolation("V^K is not invariant under the operator; "
                                     "kappa is not Ad_K-equivariant")
        cols.append(x)
    return Matrix.from_columns(cols)


def kappa_block(kappa: KappaMatrix, k_generators) -> KappaMatrix:
    idx = _generator_indices(k_generators)
    m_idx = [i for i in range(3) if i not in idx]
    return KappaMatrix(Matrix([[kappa.entries[i, j] for j in m_idx] for i in m_idx]))


def p_v(kappa, m: int, subgroup: str = "trivial") -> Polynomial | None:
    """Characteristic polynomial of D^{V^K}(kappa); None when V^K = 0."""
    gens = SUBGROUPS[subgroup]
    if not gens:
        return d_operator(kappa, m).char_poly
    vk = invariant_subspace(gens, m)
    if not vk:
        return None
    block = kappa_block(KappaMatrix.of(kappa), gens)
    return char_poly(restricted_operator(block, m, vk, gens))


def _real(value: GaussianRational) -> GaussianRational:
    if not value.is_real():
        raise InvariantViolation(f"resultant {value} has a nonzero imaginary part")
    return value


def crit_a(m1: int, m2: int, kappa, subgroup: str = "trivial") -> GaussianRational:
    if m1 == m2:
        raise InputError("crit_a compares two different representations")
    return _real(resultant(p_v(kappa, m1, subgroup), p_v(kappa, m2, subgroup)))


def crit_b(m: int, kappa, subgroup: str = "trivial") -> GaussianRational:
    p = p_v(kappa, m, subgroup)
    return _real(resultant(p, derivative(p, 1)))


def crit_c(m: int, kappa, subgroup: str = "trivial") -> GaussianRational:
    p = p_v(kappa, m, subgroup)
    return _real(resultant(p, derivative(p, 2)))


# ---------------------------------------------------------------------------
# certification

DEFAULT_SCHEDULE = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 2, 0), (0, 0, 3)),
    ((2, 0, 0), (0, 3, 0), (0, 0, 5)),
    ((1, 0, 0), (0, 3, 0), (0, 0, 4)),
    ((2, 1, 0), (1, 3, 0), (0, 0, 4)),
    ((3, 1, 1), (1, 4, 2), (1, 2, 6)),
    ((5, 1, 2), (1, 6, 3), (2, 3, 9)),
    ((2, 0, 0), (0, 2, 0), (0, 0, 3)),  # torus-equivariant
)


def default_schedule() -> list[KappaMatrix]:
    return [KappaMatrix.of(k) for k in DEFAULT_SCHEDULE]


def load_schedule(source) -> list[KappaMatrix]:
    """``"default"``, a JSON file path, or a list of 3x3 matrices."""
    if source is None or source == "default":
        return default_schedule()
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            source = json.load(fh)
    if not isinstance(source, list) or not source:
        raise InputError("a schedule is a nonempty list of symmetric 3x3 matrices")
    return [KappaMatrix.of(k) for k in source]


@dataclass
class Witness:
    item: int
    reps: tuple
    status: str = "undecided"
    sample_index: int | None = None
    kappa: KappaMatrix | None = None
    value: GaussianRational | None = None

    def to_json(self) -> dict:
        return {
            "item": self.item,
            "reps": list(self.reps),
            "status": self.status,
            "sample_index": self.sample_index,
            "kappa": None if self.kappa is None else self.kappa.to_json(),
            "value": None if self.value is None else format_rational(self.value.re),
        }


@dataclass
class CertReport:
    m_max: int
    subgroup: str
    schedule: list
    reps: list  # (m, type)
    witnesses: list
    b_sample_evidence: list  # (m, samples checked, all zero)
    common_witness: dict | None
    skipped_samples: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(w.status == "witnessed" for w in self.witnesses)

    @property
    def status(self) -> str:
        return "certified" if self.verdict else "undecided"

    def item_verdicts(self) -> dict:
        out = {}
        for item in (1, 2, 3):
            ws = [w for w in self.witnesses if w.item == item]
            out[str(item)] = all(w.status == "witnessed" for w in ws)
        return out

    def to_json(self) -> dict:
        return {
            "m_max": self.m_max,
            "subgroup": self.subgroup,
            "schedule": [k.to_json() for k in self.schedule],
            "skipped_samples": self.skipped_samples,
            "reps": [{"m": m, "type": t} for m, t in self.reps],
            "witnesses": [w.to_json() for w in self.witnesses],
            "b_sample_evidence": [
                {"m": m, "samples": n, "all_zero": z,
                 "note": "sample evidence only, not a proof of identical vanishing"}
                for m, n, z in self.b_sample_evidence],
            "common_witness": self.common_witness,
            "item_verdicts": self.item_verdicts(),
            "verdict": self.verdict,
            "status": self.status,
        }


def certify_generic_simple(m_max: int, sample_schedule=None, subgroup: str = "trivial") -> CertReport:
    """Search the schedule for nonzero values of every resultant criterion.

    Item 1 covers all pairs of distinct spherical representations, item 2
    the real-type ones (b), item 3 the quaternionic ones (c).  A single
    nonzero evaluation shows the criterion is not the zero polynomial.
    """
    if not 0 <= m_max <= MAX_CERT_M:
        raise CapacityError(f"certify supports 0 <= m_max <= {MAX_CERT_M}")
    if subgroup not in SUBGROUPS:
        raise InputError(f"unknown subgroup {subgroup!r}; choose from {sorted(SUBGROUPS)}")
    schedule = load_schedule(sample_schedule)
    gens = SUBGROUPS[subgroup]

    usable = []
    skipped = []
    for i, k in enumerate(schedule):
        if gens:
            block = kappa_block(k, gens).entries
            if block != Matrix.identity(block.rows).scale(block[0, 0]):
                skipped.append({"sample_index": i, "reason": "not Ad_K-equivariant"})
                continue
        usable.append(i)

    reps = [m for m in range(m_max + 1) if len(invariant_subspace(gens, m)) > 0]
    types = {m: su2_type(m) for m in reps}

    polys: dict[tuple[int, int], Polynomial] = {}

    def poly(m, i):
        if (m, i) not in polys:
            polys[m, i] = p_v(schedule[i], m, subgroup)
        return polys[m, i]

    def value(item, rep, i):
        if item == 1:
            return _real(resultant(poly(rep[0], i), poly(rep[1], i)))
        p = poly(rep[0], i)
        return _real(resultant(p, derivative(p, 1 if item == 2 else 2)))

    witnesses = [Witness(1, (a, b)) for x, a in enumerate(reps) for b in reps[x + 1:]]
    witnesses += [Witness(2, (m,)) for m in reps if types[m] in ("real", "complex")]
    witnesses += [Witness(3, (m,)) for m in reps if types[m] == "quaternionic"]
    for w in witnesses:
        for i in usable:
            v = value(w.item, w.reps, i)
            if not v.is_zero():
                w.status, w.sample_index, w.kappa, w.value = "witnessed", i, schedule[i], v
                break

    evidence = []
    for m in reps:
        if types[m] == "quaternionic":
            zeros = [value(2, (m,), i).is_zero() for i in usable]
            if not all(zeros):
                raise InvariantViolation(f"b_V is nonzero on quaternionic m = {m}")
            evidence.append((m, len(zeros), True))

    common = None
    for i in usable:
        if all(not value(w.item, w.reps, i).is_zero() for w in witnesses):
            common = {
                "sample_index": i,
                "kappa": schedule[i].to_json(),
                "spectra": [{"label": f"m={m}", "m": m, "type": types[m],
                             "char_poly": poly(m, i).to_json(),
                             "char_poly_text": str(poly(m, i))} for m in reps],
            }
            break
    return CertReport(m_max, subgroup, schedule, [(m, types[m]) for m in reps], witnesses,
                      evidence, common, skipped)


# ---------------------------------------------------------------------------
# exact spectral checks

def matrix_poly_eval(p: Polynomial, a: Matrix) -> Matrix:
    n = a.rows
    acc = Matrix.zeros(n, n, ZERO)
    ident = Matrix.identity(n, ONE)
    for c in reversed(p.coeffs):
        acc = a @ acc + ident.scale(c)
    return acc


def is_diagonalizable_real(bundle: OperatorBundle) -> bool:
    """Squarefree part annihilates D (diagonalizable) and has only real roots."""
    sqf = squarefree_part(bundle.char_poly)
    n = bundle.d_matrix.rows
    if matrix_poly_eval(sqf, bundle.d_matrix) != Matrix.zeros(n, n, ZERO):
        return False
    return sturm_real_root_count(sqf) == sqf.degree


def quaternionic_doubling(bundle: OperatorBundle) -> bool:
    return is_perfect_square(bundle.char_poly).is_square


def casimir_scalar(m: int) -> Fraction:
    """Scalar value of D(identity) on V_m; raises if D(identity) is not scalar."""
    d = d_operator(((1, 0, 0), (0, 1, 0), (0, 0, 1)), m).d_matrix
    c = d[0, 0]
    if d != Matrix.identity(m + 1, ONE).scale(c) or not c.is_real():
        raise InvariantViolation(f"D(identity) is not a real scalar on V_{m}")
    return c.re

"""Desk-scale invariant suite behind ``laplace-spectra selfcheck``.

Each check returns a short detail string and raises on failure; run_all
collects them in a fixed order so the report is deterministic.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvariantViolation, SpectraError
from .exactmath import Matrix, Polynomial, char_poly, is_perfect_square, resultant
from .q8 import assemble, build_q8
from .reptype import COMPLEX, QUATERNIONIC, REAL, a1_type_oracle, type_of
from .rootsystem import build_root_system, minus_w0, weight_lattice, weyl_group
from .spectrum import casimir, check_record_invariants, collisions, enumerate_spherical
from .spheresym import sphere_family, symmetry_group, verify_weyl_containment
from .su2lab import (
    casimir_scalar,
    certify_generic_simple,
    check_homomorphism,
    crit_b,
    d_operator,
    default_schedule,
    irrep_matrices,
)


def _require(cond, msg):
    if not cond:
        raise InvariantViolation(msg)


def check_exact_algebra() -> str:
    p = char_poly(Matrix.diag([2, 3]))
    _require(p == Polynomial([6, -5, 1]), "char poly of diag(2, 3)")
    _require(resultant(Polynomial([-2, 1]), Polynomial([-3, 1])) == -1, "res(t-2, t-3)")
    _require(is_perfect_square(Polynomial([-2, 0, 1]) ** 2).is_square, "square detection")
    return "char_poly, resultant, square test"


WEYL_ORDERS = {("A", 1): 2, ("A", 2): 6, ("B", 2): 8, ("G", 2): 12, ("A", 3): 24,
               ("B", 3): 48, ("C", 3): 48, ("D", 4): 192}


def check_weyl_orders() -> str:
    for (fam, n), order in WEYL_ORDERS.items():
        rs = build_root_system(fam, n)
        _require(len(weyl_group(rs)) == order, f"|W({fam}{n})| != {order}")
        for w in rs.fundamental_weights:
            _require(rs.norm2(minus_w0(rs, w)) == rs.norm2(w), "-w0 is not an isometry")
    return f"{len(WEYL_ORDERS)} systems"


def check_spectra() -> str:
    count = 0
    for fam in ("A", "B", "G"):
        rs = build_root_system(fam, 2)
        cutoff = 20 * rs.delta_norm2()
        records = enumerate_spherical(rs, weight_lattice(rs), cutoff)
        check_record_invariants(rs, records)
        count += len(records)
    rs = build_root_system("A", 2)
    records = enumerate_spherical(rs, weight_lattice(rs), Fraction(182, 3))
    hit = [c for c in collisions(records) if c.a_squared == Fraction(182, 3)]
    _require(hit and hit[0].nondual_pair_exists, "A2 collision at a^2 = 182/3 missing")
    return f"{count} records"


def check_spheres() -> str:
    count = 0
    for fam, n in (("A", 1), ("A", 2), ("G", 2)):
        rs = build_root_system(fam, n)
        for ss in sphere_family(rs, weight_lattice(rs), 8):
            ok, _ = verify_weyl_containment(rs, ss)
            _require(ok, f"shifted Weyl action leaves S(a) at a^2 = {ss.a_squared}")
            if ss.spans_ambient:
                symmetry_group(ss)
            count += 1
    return f"{count} spheres"


def check_types() -> str:
    rs = build_root_system("A", 1)
    for m in range(17):
        _require(type_of(rs, rs.from_dynkin([m])) == a1_type_oracle(m), f"A1 type at m = {m}")
    a2 = build_root_system("A", 2)
    _require(type_of(a2, a2.from_dynkin([1, 0])).value == COMPLEX, "A2 omega_1 type")
    return "A1 m <= 16, A2"


def check_su2() -> str:
    for m in range(7):
        check_homomorphism(irrep_matrices(m))
        _require(casimir_scalar(m) == m * (m + 2), f"Casimir scalar at m = {m}")
    for kappa in default_schedule()[:3]:
        for m in (1, 3):
            _require(is_perfect_square(d_operator(kappa, m).char_poly).is_square, "doubling")
            _require(crit_b(m, kappa).is_zero(), "b_V on quaternionic m")
    _require(certify_generic_simple(3).verdict, "certificate for m <= 3")
    return "m <= 6"


def check_q8() -> str:
    g = build_q8()
    _require(g.degrees == (1, 1, 1, 1, 2), "Q8 degrees")
    for t, m in ((REAL, 1), (COMPLEX, 1), (QUATERNIONIC, 2)):
        assemble(t, m)
    return "group, characters, assembly"


CHECKS = (
    ("exact_algebra", check_exact_algebra),
    ("weyl_orders", check_weyl_orders),
    ("spectra", check_spectra),
    ("spheres", check_spheres),
    ("types", check_types),
    ("su2", check_su2),
    ("q8", check_q8),
)


def run_all() -> list[dict]:
    results = []
    for name, fn in CHECKS:
        try:
            results.append({"check": name, "ok": True, "detail": fn()})
        except SpectraError as exc:
            results.append({"check": name, "ok": False, "detail": str(exc)})
    return results

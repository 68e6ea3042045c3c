"""Spherical weights, Casimir eigenvalues, Weyl dimensions and collision classes."""
from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InvariantViolation
from .exactmath import format_rational, vec_add
from .latticescan import ScanResult, scan
from .reptype import type_of
from .rootsystem import Lattice, RootSystem, is_dominant, minus_w0


@dataclass(frozen=True)
class WeightRecord:
    mu: tuple
    dynkin: tuple
    a_squared: Fraction
    lam: Fraction
    dim: int
    dual_mu: tuple
    dual_dynkin: tuple
    self_dual: bool
    rep_type: str = "unknown"
    multiplicity: int = 1

    def to_json(self) -> dict:
        vec = lambda v: [format_rational(x) for x in v]
        return {
            "mu": vec(self.dynkin),
            "mu_ambient": vec(self.mu),
            "a2": format_rational(self.a_squared),
            "lambda": format_rational(self.lam),
            "dim": self.dim,
            "dual_mu": vec(self.dual_dynkin),
            "self_dual": self.self_dual,
            "type": self.rep_type,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class CollisionClass:
    a_squared: Fraction
    members: tuple
    nondual_pair_exists: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        lam = self.members[0].lam
        return {
            "a2": format_rational(self.a_squared),
            "lambda": format_rational(lam),
            "size": self.size,
            "collision": self.size >= 2,
            "nondual_pair_exists": self.nondual_pair_exists,
            "members": [[format_rational(x) for x in m.dynkin] for m in self.members],
        }


def casimir(rs: RootSystem, mu: Sequence) -> tuple[Fraction, Fraction]:
    """(a^2, lambda) with a^2 = (mu+delta, mu+delta) and lambda = a^2 - (delta, delta)."""
    shifted = vec_add(tuple(mu), rs.delta)
    a2 = rs.norm2(shifted)
    return a2, a2 - rs.delta_norm2()


def _indivisible_positive_roots(rs: RootSystem) -> list:
    roots = [a for a, _ in rs.positive_roots]
    present = set(roots)
    return [a for a in roots
            if not (all(x % 2 == 0 for x in a) and tuple(x / 2 for x in a) in present)]


def weyl_dim(rs: RootSystem, mu: Sequence) -> int:
    """Weyl dimension formula over the indivisible positive roots."""
    if not is_dominant(rs, mu):
        raise DomainError("weyl_dim expects a dominant weight")
    roots = _indivisible_positive_roots(rs)
    rho = tuple(Fraction(0) for _ in range(rs.ambient_dim))
    for a in roots:
        rho = vec_add(rho, tuple(x / 2 for x in a))
    shifted = vec_add(tuple(mu), rho)
    num, den = Fraction(1), Fraction(1)
    for a in roots:
        num *= rs.inner(shifted, a)
        den *= rs.inner(rho, a)
    dim = num / den
    if dim.denominator != 1 or dim < 1:
        raise InvariantViolation(f"Weyl dimension {dim} is not a positive integer")
    return int(dim)


def _record(rs: RootSystem, mu: tuple, a2: Fraction | None, multiplicity: int) -> WeightRecord:
    a2_direct, lam = casimir(rs, mu)
    if a2 is not None and a2 != a2_direct:
        raise InvariantViolation("scan norm and Gram norm disagree")
    dual = minus_w0(rs, mu)
    rtype = "unknown" if rs.is_restricted else type_of(rs, mu).value
    return WeightRecord(mu, rs.dynkin_labels(mu), a2_direct, lam, weyl_dim(rs, mu), dual,
                        rs.dynkin_labels(dual), dual == mu, rtype, multiplicity)


def weight_record(rs: RootSystem, mu: Sequence, multiplicity: int = 1) -> WeightRecord:
    if not is_dominant(rs, mu):
        raise DomainError("spherical weights must be dominant")
    return _record(rs, tuple(mu), None, multiplicity)


def enumerate_with_bound(rs: RootSystem, lattice: Lattice, a_squared_max,
                         multiplicities: Mapping[tuple, int] | None = None,
                         backend: str | None = None) -> tuple[list[WeightRecord], ScanResult]:
    a_squared_max = Fraction(a_squared_max)
    result = scan(rs, lattice, a_squared_max, exact=False, backend=backend)
    if a_squared_max < rs.delta_norm2():
        warnings.warn(f"cutoff {a_squared_max} is below (delta, delta) = {rs.delta_norm2()}; "
                      "no spherical weights", stacklevel=2)
        return [], result
    mults = {tuple(Fraction(x) for x in k): v for k, v in (multiplicities or {}).items()}
    records = []
    for mu, a2 in result.points:
        if not is_dominant(rs, mu):
            continue
        dyn = rs.dynkin_labels(mu)
        records.append(_record(rs, mu, a2, mults.get(dyn, 1)))
    records.sort(key=lambda r: r.dynkin)
    return records, result


def enumerate_spherical(rs: RootSystem, lattice: Lattice, a_squared_max,
                        multiplicities: Mapping[tuple, int] | None = None) -> list[WeightRecord]:
    """Dominant lattice weights with (mu+delta, mu+delta) <= a_squared_max, sorted by Dynkin labels."""
    return enumerate_with_bound(rs, lattice, a_squared_max, multiplicities)[0]


def collisions(records: Iterable[WeightRecord]) -> list[CollisionClass]:
    """Group records by exact a^2; classes are ordered by a^2."""
    groups: dict[Fraction, list[WeightRecord]] = {}
    for r in records:
        groups.setdefault(r.a_squared, []).append(r)
    out = []
    for a2 in sorted(groups):
        members = sorted(groups[a2], key=lambda r: r.dynkin)
        nondual = any(eta.mu != mu.mu and eta.mu != mu.dual_mu
                      for i, mu in enumerate(members) for eta in members[i + 1:])
        out.append(CollisionClass(a2, tuple(members), nondual))
    return out


def check_record_invariants(rs: RootSystem, records: Sequence[WeightRecord]) -> None:
    """Assert lambda >= 0 with equality only at mu = 0, and duality invariance."""
    zero = tuple(Fraction(0) for _ in range(rs.ambient_dim))
    for r in records:
        if r.lam < 0 or (r.lam == 0) != (r.mu == zero):
            raise InvariantViolation(f"Casimir value {r.lam} at {r.dynkin} violates positivity")
        if not is_dominant(rs, r.dual_mu):
            raise InvariantViolation("dual weight is not dominant")
        if casimir(rs, r.dual_mu)[0] != r.a_squared or weyl_dim(rs, r.dual_mu) != r.dim:
            raise InvariantViolation(f"dual of {r.dynkin} changes a^2 or dimension")


def records_csv(records: Sequence[WeightRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["mu", "a2", "lambda", "dim", "type"])
    for r in records:
        writer.writerow([" ".join(format_rational(x) for x in r.dynkin),
                         format_rational(r.a_squared), format_rational(r.lam), r.dim, r.rep_type])
    return buf.getvalue()

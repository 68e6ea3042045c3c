"""Real / complex / quaternionic type of irreducible highest-weight modules."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapabilityError, DomainError, InputError, InvariantViolation
from .rootsystem import RootSystem, is_dominant, minus_w0

REAL, COMPLEX, QUATERNIONIC = "real", "complex", "quaternionic"
TYPES = (REAL, COMPLEX, QUATERNIONIC)


@dataclass(frozen=True)
class RepType:
    value: str
    self_dual: bool
    parity: int | None = None

    def __post_init__(self):
        if self.value not in TYPES:
            raise InputError(f"unknown representation type {self.value!r}")
        expected = (COMPLEX if not self.self_dual
                    else REAL if self.parity == 0 else QUATERNIONIC)
        if self.self_dual and self.parity not in (0, 1):
            raise InvariantViolation("self-dual type needs a parity in {0, 1}")
        if expected != self.value:
            raise InvariantViolation(f"type {self.value} contradicts its evidence")

    def to_json(self) -> dict:
        return {"type": self.value,
                "evidence": {"self_dual": self.self_dual, "parity": self.parity}}


def dual_weight(rs: RootSystem, mu: Sequence) -> tuple:
    """Highest weight of the dual module, -w0(mu)."""
    if not is_dominant(rs, mu):
        raise DomainError("dual_weight expects a dominant weight")
    return minus_w0(rs, mu)


def type_of(rs: RootSystem, mu: Sequence) -> RepType:
    """Frobenius-Schur type from duality plus the parity of <mu, sum of positive coroots>."""
    if rs.is_restricted:
        raise CapabilityError(
            f"{rs.name} carries restricted-root data; types are only defined on a group's own "
            "root system, pass the parent system with all multiplicities 1")
    if not is_dominant(rs, mu):
        raise DomainError("type_of expects a dominant weight")
    labels = rs.dynkin_labels(mu)
    if any(x.denominator != 1 for x in labels):
        raise DomainError("type_of expects a weight in the weight lattice")
    mu = tuple(mu)
    if dual_weight(rs, mu) != mu:
        return RepType(COMPLEX, False, None)
    height = sum((rs.pairing(mu, a) for a, _ in rs.positive_roots), Fraction(0))
    if height.denominator != 1:
        raise InvariantViolation("pairing with the coroot sum is not integral")
    parity = int(height) % 2
    return RepType(REAL if parity == 0 else QUATERNIONIC, True, parity)


def a1_type_oracle(m: int) -> RepType:
    """Type of the (m+1)-dimensional SU(2) module from tensor-square weights alone.

    The weights of V_m are m, m-2, ..., -m.  The number of trivial summands
    in a module with weight multiset S is mult_S(0) - mult_S(2); a trivial
    summand in Sym^2 means real type, one in Lambda^2 means quaternionic.
    """
    if not 0 <= m <= 64:
        raise InputError("a1_type_oracle supports 0 <= m <= 64")
    weights = list(range(m, -m - 1, -2))
    sym, alt = {}, {}
    for i, wi in enumerate(weights):
        for j in range(i, len(weights)):
            s = wi + weights[j]
            sym[s] = sym.get(s, 0) + 1
            if j > i:
                alt[s] = alt.get(s, 0) + 1
    trivial_sym = sym.get(0, 0) - sym.get(2, 0)
    trivial_alt = alt.get(0, 0) - alt.get(2, 0)
    if trivial_sym and trivial_alt:
        raise InvariantViolation("trivial summand in both tensor-square parts")
    if trivial_sym:
        return RepType(REAL, True, 0)
    if trivial_alt:
        return RepType(QUATERNIONIC, True, 1)
    return RepType(COMPLEX, False, None)

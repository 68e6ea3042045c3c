"""The quaternion group Q8, eigenspace assembly and the simplicity dictionary.

Eigenspace structure for an eigenvalue of multiplicity m on V^K:

    type           complex eigenspace       real eigenspace
    real           V^(+m)                   V_R^(+m)
    complex        (H(x)V)^(+m)             V_R^(+m)
    quaternionic   (H(x)V)^(+m/2)           V_R^(+m/2)

H(x)V and V_R are symbolic labels with dimension bookkeeping only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import InputError, InvariantViolation
from .exactmath import (
    ONE,
    ZERO,
    I,
    GaussianRational,
    Matrix,
    Polynomial,
    format_rational,
    poly_gcd,
    squarefree_decomposition,
    to_fraction,
)
from .reptype import COMPLEX, QUATERNIONIC, REAL, TYPES

# ---------------------------------------------------------------------------
# the group

ELEMENTS = ("1", "-1", "i", "-i", "j", "-j", "ij", "-ij")
_UNITS = ("1", "i", "j", "ij")
# unit products: (a, b) -> (sign, unit), with k written as ij
_UNIT_TABLE = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "ij"): (1, "ij"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "ij"), ("i", "ij"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "ij"), ("j", "j"): (-1, "1"), ("j", "ij"): (1, "i"),
    ("ij", "1"): (1, "ij"), ("ij", "i"): (1, "j"), ("ij", "j"): (-1, "i"), ("ij", "ij"): (-1, "1"),
}


def _split(x: str) -> tuple[int, str]:
    return (-1, x[1:]) if x.startswith("-") else (1, x)


def _join(sign: int, unit: str) -> str:
    return unit if sign > 0 else "-" + unit


def multiply(x: str, y: str) -> str:
    sx, ux = _split(x)
    sy, uy = _split(y)
    s, u = _UNIT_TABLE[ux, uy]
    return _join(sx * sy * s, u)


def quaternion_matrix(x: str) -> Matrix:
    """Left multiplication on H = C^2: i -> diag(i, -i), j -> [[0, 1], [-1, 0]]."""
    mats = {
        "1": Matrix([[ONE, ZERO], [ZERO, ONE]]),
        "i": Matrix([[I, ZERO], [ZERO, -I]]),
        "j": Matrix([[ZERO, ONE], [-ONE, ZERO]]),
    }
    mats["ij"] = mats["i"] @ mats["j"]
    s, u = _split(x)
    return mats[u] if s > 0 else -mats[u]


@dataclass(frozen=True)
class Q8Group:
    elements: tuple
    table: Mapping
    classes: tuple  # conjugacy classes
    characters: tuple  # (name, {class representative: value})

    @property
    def degrees(self) -> tuple:
        return tuple(sorted(int(chi[self.classes[0][0]].re) for _, chi in self.characters))

    def inverse(self, x: str) -> str:
        return next(y for y in self.elements if self.table[x, y] == "1")

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "conjugacy_classes": [list(c) for c in self.classes],
            "degrees": list(self.degrees),
            "character_table": [
                {"name": name, "values": {c[0]: chi[c[0]].to_json() for c in self.classes}}
                for name, chi in self.characters],
        }


def build_q8() -> Q8Group:
    """Build Q8 with its conjugacy classes and character table, verifying everything by brute force."""
    els = ELEMENTS
    table = {(x, y): multiply(x, y) for x in els for y in els}
    for x, y, z in product(els, repeat=3):
        if table[table[x, y], z] != table[x, table[y, z]]:
            raise InvariantViolation("Q8 table is not associative")
    for x in els:
        if table["1", x] != x or table[x, "1"] != x:
            raise InvariantViolation("1 is not the identity")
        if not any(table[x, y] == "1" for y in els):
            raise InvariantViolation(f"{x} has no inverse")
    inv = {x: next(y for y in els if table[x, y] == "1") for x in els}

    classes, seen = [], set()
    for x in els:
        if x in seen:
            continue
        cls = sorted({table[table[g, x], inv[g]] for g in els}, key=els.index)
        seen.update(cls)
        classes.append(tuple(cls))

    # linear characters factor through the abelianization; find them as sign maps
    commutators = {table[table[x, y], table[inv[x], inv[y]]] for x in els for y in els}
    characters = []
    for si, sj in product((1, -1), repeat=2):
        chi = {}
        for x in els:
            s, u = _split(x)
            val = {"1": 1, "i": si, "j": sj, "ij": si * sj}[u]
            chi[x] = val
        if all(chi[table[x, y]] == chi[x] * chi[y] for x in els for y in els):
            name = "trivial" if (si, sj) == (1, 1) else f"sign(i={si},j={sj})"
            characters.append((name, {c[0]: GaussianRational(chi[c[0]]) for c in classes}))
    if len(characters) != len(els) // len(commutators):
        raise InvariantViolation("linear characters do not match the abelianization order")
    remaining = len(els) - len(characters)
    two_dim = {c[0]: quaternion_matrix(c[0]).trace() for c in classes}
    if two_dim[classes[0][0]] ** 2 != remaining:
        raise InvariantViolation("degrees do not square-sum to the group order")
    characters.append(("quaternion", two_dim))
    group = Q8Group(els, table, tuple(classes), tuple(characters))
    check_orthogonality(group)
    return group


def check_orthogonality(group: Q8Group) -> None:
    order = len(group.elements)
    reps = [c[0] for c in group.classes]
    sizes = {c[0]: len(c) for c in group.classes}
    chars = [chi for _, chi in group.characters]
    if len(chars) != len(group.classes):
        raise InvariantViolation("number of irreducibles differs from number of classes")
    for a, chi in enumerate(chars):
        for b, psi in enumerate(chars):
            s = sum((chi[r] * psi[r].conjugate() * sizes[r] for r in reps), ZERO)
            if s != (order if a == b else 0):
                raise InvariantViolation("row orthogonality fails")
    for r in reps:
        for q in reps:
            s = sum((chi[r] * chi[q].conjugate() for chi in chars), ZERO)
            expected = Fraction(order, sizes[r]) if r == q else 0
            if s != expected:
                raise InvariantViolation("column orthogonality fails")


def frobenius_schur(group: Q8Group, chi: Mapping[str, GaussianRational]) -> Fraction:
    """(1/|G|) sum chi(g^2), with chi given on class representatives."""
    rep_of = {x: c[0] for c in group.classes for x in c}
    total = sum((chi[rep_of[group.table[g, g]]] for g in group.elements), ZERO)
    return (total / len(group.elements)).re


# ---------------------------------------------------------------------------
# eigenspace assembly

@dataclass(frozen=True)
class EigenspaceAssembly:
    rep_type: str
    multiplicity_m: int
    complex_structure: str
    real_structure: str
    complex_summands: int  # irreducible (Q8 x G)-summands in the complex eigenspace
    real_summands: int  # copies of V_R in the real eigenspace
    complex_dim: int  # complex dimension, in units of dim V
    real_dim: int  # real dimension, in units of dim V

    def to_json(self) -> dict:
        return {
            "type": self.rep_type,
            "m": self.multiplicity_m,
            "complex": self.complex_structure,
            "real": self.real_structure,
            "complex_summands": self.complex_summands,
            "real_summands": self.real_summands,
            "complex_dim_over_dimV": self.complex_dim,
            "real_dim_over_dimV": self.real_dim,
        }


def _complex_side(rep_type: str, m: int) -> tuple[str, int, int]:
    # (label, summands, dim_C / dim V) with dim(H (x) V) = 2 dim V
    if rep_type == REAL:
        return f"V^{{⊕{m}}}", m, m
    if rep_type == COMPLEX:
        return f"(ℍ⊗V)^{{⊕{m}}}", m, 2 * m
    return f"(ℍ⊗V)^{{⊕{m // 2}}}", m // 2, 2 * (m // 2)


def _real_side(rep_type: str, m: int) -> tuple[str, int, int]:
    # (label, summands, dim_R / dim V); dim_R V_R is dim V (real) or 2 dim V
    if rep_type == REAL:
        return f"V_ℝ^{{⊕{m}}}", m, m
    copies = m if rep_type == COMPLEX else m // 2
    return f"V_ℝ^{{⊕{copies}}}", copies, 2 * copies


def assemble(rep_type: str, m: int) -> EigenspaceAssembly:
    if rep_type not in TYPES:
        raise InputError(f"unknown representation type {rep_type!r}")
    if not isinstance(m, int) or m < 1:
        raise InputError("eigenvalue multiplicity must be a positive integer")
    if rep_type == QUATERNIONIC and m % 2:
        raise InvariantViolation(
            "quaternionic eigenspaces are J-invariant, so their multiplicity must be even")
    c_label, c_count, c_dim = _complex_side(rep_type, m)
    r_label, r_count, r_dim = _real_side(rep_type, m)
    if c_dim != r_dim:
        raise InvariantViolation("complexified real eigenspace has the wrong dimension")
    return EigenspaceAssembly(rep_type, m, c_label, r_label, c_count, r_count, c_dim, r_dim)


# ---------------------------------------------------------------------------
# simplicity dictionary

@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset of one operator, as squarefree factors with multiplicities.

    The roots of each factor are the eigenvalues of that multiplicity, so
    irrational eigenvalues are handled exactly.
    """
    factors: tuple  # ((monic squarefree Polynomial, multiplicity), ...), pairwise coprime

    @classmethod
    def from_char_poly(cls, p: Polynomial) -> "Spectrum":
        if p.is_zero() or p.degree < 1:
            raise InputError("a spectrum needs a characteristic polynomial of positive degree")
        return cls(tuple(squarefree_decomposition(p)))

    @classmethod
    def from_eigenvalues(cls, eigenvalues: Mapping) -> "Spectrum":
        if not eigenvalues:
            raise InputError("empty eigenvalue multiset")
        factors = []
        for lam, mult in eigenvalues.items():
            if not isinstance(mult, int) or mult < 1:
                raise InputError(f"multiplicity of {lam} must be a positive integer")
            factors.append((Polynomial([-to_fraction(lam), 1]), mult))
        return cls(tuple(factors))

    def multiplicity_of_root_of(self, b: Polynomial) -> int:
        """Multiplicity of the roots of the irreducible-enough factor b (0 if absent)."""
        for f, k in self.factors:
            if poly_gcd(f, b).degree > 0:
                return k
        return 0

    def multiplicities(self) -> list[int]:
        return [k for _, k in self.factors]


@dataclass(frozen=True)
class RepSpectrum:
    label: str
    rep_type: str
    spectrum: Spectrum
    dual_label: str | None = None


def _coprime_basis(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """Pairwise coprime monic polynomials whose products recover every input."""
    basis: list[Polynomial] = []
    for p in polys:
        todo = [p.monic()]
        while todo:
            q = todo.pop()
            if q.degree < 1:
                continue
            for idx, b in enumerate(basis):
                g = poly_gcd(q, b)
                if g.degree > 0:
                    basis.pop(idx)
                    for part in (g, b.exact_div(g), q.exact_div(g)):
                        if part.degree > 0:
                            todo.append(part)
                    break
            else:
                basis.append(q)
    return sorted(basis, key=lambda b: (b.degree, [(c.re, c.im) for c in b.coeffs]))


def simplicity_dictionary(per_rep_spectra: Sequence[RepSpectrum]) -> dict:
    """Real G-simplicity versus complex (Q8 x G)-simplicity for a family of operators.

    The eigenvalues of all operators are refined into pairwise coprime
    factors; each factor stands for eigenvalues that every representation
    sees with one common multiplicity.  Both verdicts count irreducible
    summands per eigenvalue, from the complex and real assembly tables
    respectively, and a direct multiplicity test is computed alongside.
    All three must agree.
    """
    if not per_rep_spectra:
        raise InputError("no spectra supplied")
    kept: list[RepSpectrum] = []
    by_label: dict[str, RepSpectrum] = {}
    for e in per_rep_spectra:
        if not isinstance(e, RepSpectrum) or e.rep_type not in TYPES:
            raise InputError(f"malformed spectrum entry {e!r}")
        if e.label in by_label:
            raise InputError(f"duplicate representation label {e.label!r}")
        by_label[e.label] = e
        partner = by_label.get(e.dual_label) if e.dual_label and e.dual_label != e.label else None
        if partner is not None:
            if partner.spectrum.factors != e.spectrum.factors:
                raise InputError(f"{e.label} and its dual {partner.label} have different spectra")
            continue  # V and V* share one real block
        for _, k in e.spectrum.factors:
            if e.rep_type == QUATERNIONIC and k % 2:
                raise InputError(f"{e.label} is quaternionic but has an odd multiplicity {k}")
        kept.append(e)

    basis = _coprime_basis(f for e in kept for f, _ in e.spectrum.factors)
    classes = []
    complex_ok = real_ok = True
    for b in basis:
        contributions = []
        c_total = r_total = 0
        for e in kept:
            k = e.spectrum.multiplicity_of_root_of(b)
            if k:
                asm = assemble(e.rep_type, k)
                c_total += asm.complex_summands
                r_total += asm.real_summands
                contributions.append({"label": e.label, "m": k, **asm.to_json()})
        complex_ok &= c_total == 1
        real_ok &= r_total == 1
        classes.append({"eigenvalues_root_of": str(b), "count": b.degree,
                        "complex_summands": c_total, "real_summands": r_total,
                        "contributions": contributions})

    direct = all(
        all(k == (2 if e.rep_type == QUATERNIONIC else 1) for k in e.spectrum.multiplicities())
        for e in kept)
    shared = any(sum(1 for e in kept if e.spectrum.multiplicity_of_root_of(b)) > 1 for b in basis)
    direct = direct and not shared
    if not (direct == real_ok == complex_ok):
        raise InvariantViolation(
            f"simplicity verdicts disagree: direct={direct}, real={real_ok}, complex={complex_ok}")
    return {
        "real_G_simple": real_ok,
        "complex_Q8xG_simple": complex_ok,
        "direct_criterion": direct,
        "shared_eigenvalues": shared,
        "per_rep": [{"label": e.label, "type": e.rep_type,
                     "multiplicities": sorted(set(e.spectrum.multiplicities())),
                     "dual_label": e.dual_label} for e in kept],
        "merged_duals": [e.label for e in per_rep_spectra if e not in kept],
        "eigenvalue_classes": classes,
    }


def spectra_from_report(report: Mapping) -> list[RepSpectrum]:
    """Per-representation spectra from a spectrum or certify JSON report."""
    if "records" in report:
        out = []
        for r in report["records"]:
            if r.get("type") not in TYPES:
                raise InputError(f"record {r.get('mu')} has type {r.get('type')!r}; "
                                 "types must be known to form a verdict")
            label = "mu=(" + ",".join(r["mu"]) + ")"
            dual = "mu=(" + ",".join(r["dual_mu"]) + ")"
            spec = Spectrum.from_eigenvalues({r["lambda"]: int(r.get("multiplicity", 1))})
            out.append(RepSpectrum(label, r["type"], spec, dual))
        return out
    common = report.get("common_witness")
    if common is None and "certificate" in report:
        common = report["certificate"].get("common_witness")
    if common is None:
        raise InputError("report has neither 'records' nor a common witness with spectra")
    return [RepSpectrum(s["label"], s["type"],
                        Spectrum.from_char_poly(Polynomial.from_json(s["char_poly"])),
                        s.get("dual_label"))
            for s in common["spectra"]]

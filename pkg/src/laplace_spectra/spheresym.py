"""Lattice points on spheres centred at -delta and their orthogonal symmetry groups.

A lattice point mu sits on the sphere of squared radius a^2 about -delta when
(mu + delta, mu + delta) = a^2.  Working in the re-centred space, where mu is
represented by the shifted vector mu + delta, the shifted Weyl action is
w~(mu) = w(mu + delta) - delta and orthogonal maps act linearly on shifted
vectors.  Group elements are stored as matrices on the Dynkin coordinates of
shifted vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, DomainError, InputError, InvariantViolation
from .exactmath import Matrix, format_rational, vec_add, vec_sub
from .latticescan import scan
from .rootsystem import Lattice, RootSystem, WeylElement, in_lattice, weyl_group

DEFAULT_MAX_CANDIDATES = 1_000_000


@dataclass(frozen=True)
class ShiftedPoint:
    raw: tuple
    shifted: tuple


@dataclass(frozen=True)
class SphereSet:
    a_squared: Fraction
    points: tuple  # ShiftedPoints, sorted by the Dynkin labels of raw
    spans_ambient: bool
    rs: RootSystem
    lattice: Lattice

    def __len__(self):
        return len(self.points)

    def raw_dynkin(self) -> list[tuple]:
        return [self.rs.dynkin_labels(p.raw) for p in self.points]


@dataclass(frozen=True)
class SphereSymmetryGroup:
    elements: tuple  # Matrices on Dynkin coordinates of shifted vectors
    order: int
    orbits: tuple  # tuples of point indices
    transitive: bool
    lattice_preserving: int
    basis: tuple  # indices of the points used as a basis
    candidates_examined: int


def require_delta_in_lattice(rs: RootSystem, lattice: Lattice) -> None:
    if not in_lattice(lattice, rs.delta):
        raise InvariantViolation(f"delta = {rs.dynkin_labels(rs.delta)} (Dynkin) is not in the "
                                 f"{lattice.label} lattice; sphere symmetries assume it is")


def _rank(vectors: Sequence[tuple]) -> int:
    return Matrix(vectors).rank() if vectors else 0


def _make_sphere_set(rs, lattice, a2, mus) -> SphereSet:
    mus = sorted(mus, key=rs.dynkin_labels)
    pts = tuple(ShiftedPoint(mu, vec_add(mu, rs.delta)) for mu in mus)
    spans = _rank([p.shifted for p in pts]) == rs.rank
    return SphereSet(Fraction(a2), pts, spans, rs, lattice)


def sphere_points(rs: RootSystem, lattice: Lattice, a_squared) -> SphereSet:
    """All lattice points on the sphere of squared radius a_squared about -delta."""
    a_squared = Fraction(a_squared)
    if a_squared <= 0:
        raise DomainError("sphere_points needs a^2 > 0 (the transitivity statement assumes a > 0)")
    require_delta_in_lattice(rs, lattice)
    result = scan(rs, lattice, a_squared, exact=True)
    return _make_sphere_set(rs, lattice, a_squared, [mu for mu, _ in result.points])


def sphere_family(rs: RootSystem, lattice: Lattice, a_squared_max) -> list[SphereSet]:
    """Every nonempty S(a) with 0 < a^2 <= a_squared_max, ordered by a^2."""
    require_delta_in_lattice(rs, lattice)
    result = scan(rs, lattice, Fraction(a_squared_max), exact=False)
    groups: dict[Fraction, list] = {}
    for mu, a2 in result.points:
        if a2 > 0:
            groups.setdefault(a2, []).append(mu)
    return [_make_sphere_set(rs, lattice, a2, groups[a2]) for a2 in sorted(groups)]


def shifted_weyl_action(rs: RootSystem, w: WeylElement, mu: Sequence) -> tuple:
    """w~(mu) = w(mu + delta) - delta."""
    return vec_sub(w(vec_add(tuple(mu), rs.delta)), rs.delta)


def verify_weyl_containment(rs: RootSystem, ss: SphereSet) -> tuple[bool, list]:
    """Check that every shifted Weyl element maps S(a) into itself.

    Returns (ok, witnesses) with witnesses a list of (word, mu, image) for
    any violation.
    """
    members = {p.raw for p in ss.points}
    witnesses = []
    for w in weyl_group(rs):
        for p in ss.points:
            img = shifted_weyl_action(rs, w, p.raw)
            if img not in members:
                witnesses.append((w.word, rs.dynkin_labels(p.raw), rs.dynkin_labels(img)))
    return not witnesses, witnesses


def symmetry_group(ss: SphereSet, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> SphereSymmetryGroup:
    """The finite group of orthogonal maps of the shifted space permuting S(a).

    A basis of shifted points is fixed (first spanning subset in sorted
    order).  Every orthogonal map permuting the set sends that basis to a
    tuple of shifted points with the same Gram matrix, so all such tuples are
    enumerated, the unique linear extension is solved for, and the maps that
    permute the whole set are kept.  Closure under composition and inverses
    is then re-checked.
    """
    if not ss.spans_ambient:
        raise InputError(f"S(a) at a^2 = {ss.a_squared} does not span the shifted space; "
                         "the symmetry group is only computed for spanning point sets")
    rs = ss.rs
    coords = [rs.dynkin_labels(p.shifted) for p in ss.points]
    n, r = len(coords), rs.rank
    # Gram matrix on Dynkin coordinates: (x, y) = x^T F y with F_ij = (w_i, w_j).
    fw = rs.fundamental_weights
    form = Matrix([[rs.inner(a, b) for b in fw] for a in fw])
    ip = lambda x, y: sum(x[i] * form[i, j] * y[j] for i in range(r) for j in range(r))

    basis: list[int] = []
    for k in range(n):
        if _rank([coords[i] for i in basis + [k]]) > len(basis):
            basis.append(k)
        if len(basis) == r:
            break
    target = [[ip(coords[a], coords[b]) for b in basis] for a in basis]
    norms = [ip(c, c) for c in coords]
    pair = [[ip(coords[i], coords[j]) for j in range(n)] for i in range(n)]

    tuples: list[list[int]] = []
    examined = 0

    def extend(chosen: list[int]) -> None:
        nonlocal examined
        depth = len(chosen)
        if depth == r:
            tuples.append(list(chosen))
            return
        for k in range(n):
            examined += 1
            if examined > max_candidates:
                raise CapacityError(f"symmetry search exceeded {max_candidates} candidates")
            if norms[k] != target[depth][depth]:
                continue
            if all(pair[chosen[i]][k] == target[i][depth] for i in range(depth)):
                chosen.append(k)
                extend(chosen)
                chosen.pop()

    extend([])

    binv = Matrix.from_columns([coords[b] for b in basis]).inverse()
    index = {c: i for i, c in enumerate(coords)}
    elements: list[Matrix] = []
    perms: list[tuple] = []
    for t in tuples:
        phi = Matrix.from_columns([coords[k] for k in t]) @ binv
        perm = []
        for c in coords:
            img = phi @ c
            if img not in index:
                break
            perm.append(index[img])
        else:
            elements.append(phi)
            perms.append(tuple(perm))

    _check_group(elements, form)
    orbits = _orbits(n, perms)
    lattice_ok = sum(1 for e in elements if _preserves_lattice(rs, ss.lattice, e))
    return SphereSymmetryGroup(tuple(elements), len(elements), orbits, len(orbits) == 1,
                               lattice_ok, tuple(basis), examined)


def _check_group(elements: list[Matrix], form: Matrix) -> None:
    if not elements:
        raise InvariantViolation("symmetry search found no elements (identity missing)")
    members = set(elements)
    r = elements[0].rows
    if Matrix.identity(r) not in members:
        raise InvariantViolation("identity missing from the symmetry group")
    for a in elements:
        if a.transpose() @ form @ a != form:
            raise InvariantViolation("symmetry element does not preserve the inner product")
        if a.inverse() not in members:
            raise InvariantViolation("symmetry group is not closed under inverses")
        for b in elements:
            if a @ b not in members:
                raise InvariantViolation("symmetry group is not closed under composition")


def _orbits(n: int, perms: list[tuple]) -> tuple:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in perms:
        for i, j in enumerate(p):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(g) for _, g in sorted(groups.items()))


def _preserves_lattice(rs: RootSystem, lattice: Lattice, phi: Matrix) -> bool:
    for b in lattice.basis:
        img = rs.from_dynkin(phi @ rs.dynkin_labels(b))
        if not in_lattice(lattice, img):
            return False
    return True


def sphere_report(ss: SphereSet, group: SphereSymmetryGroup | None, containment) -> dict:
    rs = ss.rs
    vec = lambda v: [format_rational(x) for x in v]
    out = {
        "a2": format_rational(ss.a_squared),
        "lambda": format_rational(ss.a_squared - rs.delta_norm2()),
        "points": [{"mu": vec(rs.dynkin_labels(p.raw)),
                    "shifted": vec(rs.dynkin_labels(p.shifted))} for p in ss.points],
        "spans": ss.spans_ambient,
        "weyl_containment": containment[0],
        "weyl_containment_witnesses": [
            {"word": list(w), "mu": vec(m), "image": vec(i)} for w, m, i in containment[1]],
    }
    if group is not None:
        out.update({
            "group_order": group.order,
            "transitive": group.transitive,
            "orbits": [list(o) for o in group.orbits],
            "lattice_preserving_elements": group.lattice_preserving,
            "basis_points": list(group.basis),
            "candidates_examined": group.candidates_examined,
        })
    else:
        out.update({"group_order": None, "transitive": None, "orbits": None})
    return out

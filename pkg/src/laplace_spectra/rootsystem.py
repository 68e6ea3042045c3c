"""Root systems in standard coordinates, Weyl groups and lattices.

Supported: A1-A4, B2-B4, C2-C4, D3-D4, BC1-BC4 and G2.  Long roots have
squared length 2; for BC the roots e_i +- e_j have squared length 2.  Roots
of the restricted (symmetric-pair) kind may carry multiplicities per length
class, which feed the half-sum ``delta``.
"""
from __future__ import annotations

import json
import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from .errors import CapabilityError, CapacityError, InputError, InvariantViolation
from .exactmath import Matrix, dot, format_rational, to_fraction, vec_add, vec_scale

Vector = tuple  # tuple of Fractions in ambient coordinates

SUPPORTED = {
    "A": (1, 2, 3, 4),
    "B": (2, 3, 4),
    "C": (2, 3, 4),
    "D": (3, 4),
    "BC": (1, 2, 3, 4),
    "G2": (2,),
}

DEFAULT_MAX_CLOSURE = 100_000
NORMALIZATION = "long roots have squared length 2 (BC: the roots e_i +- e_j)"


def _unit(n: int, i: int, c=1) -> Vector:
    return tuple(Fraction(c) if k == i else Fraction(0) for k in range(n))


def _standard_data(family: str, rank: int):
    """(ambient_dim, gram scale, simple roots, positive roots) for one family."""
    n = rank
    if family == "A":
        dim = n + 1
        e = lambda i, c=1: _unit(dim, i, c)
        simple = [vec_add(e(i), e(i + 1, -1)) for i in range(n)]
        pos = [vec_add(e(i), e(j, -1)) for i in range(dim) for j in range(i + 1, dim)]
        return dim, Fraction(1), simple, pos
    e = lambda i, c=1: _unit(n, i, c)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mixed = [vec_add(e(i), e(j, s)) for i, j in pairs for s in (-1, 1)]
    chain = [vec_add(e(i), e(i + 1, -1)) for i in range(n - 1)]
    if family == "B":
        return n, Fraction(1), chain + [e(n - 1)], mixed + [e(i) for i in range(n)]
    if family == "C":
        return n, Fraction(1, 2), chain + [e(n - 1, 2)], mixed + [e(i, 2) for i in range(n)]
    if family == "D":
        last = vec_add(e(n - 2), e(n - 1))
        return n, Fraction(1), chain + [last], mixed
    if family == "BC":
        return (n, Fraction(1), chain + [e(n - 1)],
                mixed + [e(i) for i in range(n)] + [e(i, 2) for i in range(n)])
    if family == "G2":
        v = lambda *xs: tuple(Fraction(x) for x in xs)
        a1, a2 = v(1, -1, 0), v(-2, 1, 1)
        pos = [a1, a2, v(-1, 0, 1), v(0, -1, 1), v(1, -2, 1), v(-1, -1, 2)]
        return 3, Fraction(1, 3), [a1, a2], pos
    raise CapabilityError(f"unsupported family {family!r}")


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple
    positive_roots: tuple  # ((vector, multiplicity), ...)
    gram: Matrix
    delta: Vector
    fundamental_weights: tuple
    delta_mode: str = "weighted"
    multiplicities: tuple = field(default=())  # ((length class, m), ...)

    @property
    def name(self) -> str:
        return "G2" if self.family == "G2" else f"{self.family}{self.rank}"

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return dot(u, v, self.gram)

    def norm2(self, v: Sequence) -> Fraction:
        return self.inner(v, v)

    def pairing(self, v: Sequence, alpha: Sequence) -> Fraction:
        """<v, alpha^vee> = 2 (v, alpha) / (alpha, alpha)."""
        return 2 * self.inner(v, alpha) / self.norm2(alpha)

    @cached_property
    def _coroot_rows(self) -> tuple:
        # row i is G alpha_i^vee, so <v, alpha_i^vee> is a plain dot product with it
        return tuple(tuple(2 * x / self.norm2(a) for x in self.gram @ tuple(a))
                     for a in self.simple_roots)

    def dynkin_labels(self, v: Sequence) -> tuple:
        return tuple(sum((x * y for x, y in zip(v, row)), Fraction(0))
                     for row in self._coroot_rows)

    def from_dynkin(self, labels: Sequence) -> Vector:
        if len(labels) != self.rank:
            raise InputError(f"{self.name} weights need {self.rank} Dynkin labels")
        out = tuple(Fraction(0) for _ in range(self.ambient_dim))
        for c, w in zip(labels, self.fundamental_weights):
            out = vec_add(out, vec_scale(to_fraction(c), w))
        return out

    def cartan_matrix(self) -> Matrix:
        return Matrix([[self.pairing(a, b) for b in self.simple_roots] for a in self.simple_roots])

    def length_class(self, alpha: Sequence) -> str:
        return _length_classes(self)[self.norm2(alpha)]

    @property
    def is_restricted(self) -> bool:
        """True when the data cannot be a compact group's own root system."""
        return self.family == "BC" or any(m != 1 for _, m in self.positive_roots)

    def is_positive(self, v: Sequence) -> bool:
        return self.inner(v, sum_fundamental(self)) > 0

    def delta_norm2(self) -> Fraction:
        return self.norm2(self.delta)

    def to_json(self) -> dict:
        vec = lambda v: [format_rational(x) for x in v]
        return {
            "system": self.name,
            "family": self.family,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "gram": self.gram.to_json(),
            "simple_roots": [vec(a) for a in self.simple_roots],
            "positive_roots": [
                {"root": vec(a), "multiplicity": m, "length_class": self.length_class(a)}
                for a, m in self.positive_roots
            ],
            "delta": vec(self.delta),
            "delta_dynkin": vec(self.dynkin_labels(self.delta)),
            "delta_norm2": format_rational(self.delta_norm2()),
            "delta_mode": self.delta_mode,
            "multiplicities": dict(self.multiplicities),
            "fundamental_weights": [vec(w) for w in self.fundamental_weights],
            "cartan_matrix": self.cartan_matrix().to_json(),
        }


def _length_classes(rs: RootSystem) -> dict:
    lengths = sorted({dot(a, a, rs.gram) for a, _ in rs.positive_roots}
                     if rs.positive_roots else set())
    names = {1: ["long"], 2: ["short", "long"], 3: ["short", "middle", "long"]}[len(lengths)]
    return dict(zip(lengths, names))


def build_root_system(family: str, rank: int,
                      multiplicities: Mapping[str, int] | None = None,
                      delta_mode: str = "weighted") -> RootSystem:
    """Standard realization of (family, rank) with optional root multiplicities.

    ``multiplicities`` maps length classes ("short", "middle", "long") to
    positive integers, default 1.  ``delta_mode="plain"`` ignores them when
    forming delta.
    """
    family = family.upper()
    if family == "G":
        family = "G2"
    if family not in SUPPORTED or rank not in SUPPORTED[family]:
        raise CapabilityError(f"unsupported root system {family}{rank}; "
                              f"supported: {_supported_names()}")
    if delta_mode not in ("weighted", "plain"):
        raise InputError(f"delta mode must be 'weighted' or 'plain', got {delta_mode!r}")
    dim, scale, simple, pos = _standard_data(family, rank)
    gram = Matrix.identity(dim).scale(scale)
    skeleton = RootSystem(family, rank, dim, tuple(simple), tuple((a, 1) for a in pos),
                          gram, (), ())
    classes = _length_classes(skeleton)
    mult = dict(multiplicities or {})
    unknown = set(mult) - set(classes.values())
    if unknown:
        raise InputError(f"{skeleton.name} has length classes {sorted(set(classes.values()))}, "
                         f"got {sorted(unknown)}")
    for k, m in mult.items():
        if not isinstance(m, int) or m < 1:
            raise InputError(f"multiplicity for {k!r} must be a positive integer")
    with_mult = tuple((a, mult.get(classes[dot(a, a, gram)], 1)) for a in pos)

    half = Fraction(1, 2)
    delta = tuple(Fraction(0) for _ in range(dim))
    for a, m in with_mult:
        delta = vec_add(delta, vec_scale(half * (m if delta_mode == "weighted" else 1), a))

    cartan = Matrix([[2 * dot(a, b, gram) / dot(b, b, gram) for b in simple] for a in simple])
    inv = cartan.inverse()
    fws = []
    for i in range(rank):
        w = tuple(Fraction(0) for _ in range(dim))
        for k in range(rank):
            w = vec_add(w, vec_scale(inv[i, k], simple[k]))
        fws.append(w)

    used = tuple(sorted((k, mult.get(k, 1)) for k in set(classes.values())))
    return RootSystem(family, rank, dim, tuple(simple), with_mult, gram, delta,
                      tuple(fws), delta_mode, used)


def _supported_names() -> str:
    return ", ".join("G2" if f == "G2" else f"{f}{r}" for f, rs in SUPPORTED.items() for r in rs)


_SYSTEM_RE = re.compile(r"^\s*(BC|[ABCD]|G)\s*(\d+)\s*$", re.IGNORECASE)


def parse_system(text: str) -> tuple[str, int]:
    m = _SYSTEM_RE.match(text)
    if not m:
        raise CapabilityError(f"cannot parse root system {text!r}")
    family, rank = m.group(1).upper(), int(m.group(2))
    if family == "G":
        if rank != 2:
            raise CapabilityError(f"unsupported root system G{rank}")
        family = "G2"
    return family, rank


def parse_multiplicities(text: str | None) -> dict[str, int]:
    """Parse ``"short=2,long=1"``."""
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise InputError(f"bad multiplicity assignment {part!r}")
        try:
            out[key.strip().lower()] = int(value)
        except ValueError as exc:
            raise InputError(f"bad multiplicity value {value!r}") from exc
    return out


def system_from_spec(system: str, mult: str | None = None, delta_mode: str = "weighted") -> RootSystem:
    family, rank = parse_system(system)
    return build_root_system(family, rank, parse_multiplicities(mult), delta_mode)


def load_root_system_fixture(source) -> RootSystem:
    """Build a root system from a JSON fixture (path or already-parsed dict).

    Fixture keys: family, rank, simple_roots (coordinate lists of "p/q"
    strings), multiplicities, optional delta_mode.  Only the standard
    realizations are supported, so the simple roots must match them.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            source = json.load(fh)
    try:
        family, rank = source["family"], int(source["rank"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("root-system fixture needs 'family' and 'rank'") from exc
    rs = build_root_system(family, rank, source.get("multiplicities") or {},
                           source.get("delta_mode", "weighted"))
    given = source.get("simple_roots")
    if given is not None:
        coords = tuple(tuple(to_fraction(x) for x in v) for v in given)
        if coords != rs.simple_roots:
            raise CapabilityError("fixture simple roots differ from the standard realization "
                                  f"of {rs.name}: expected "
                                  f"{[[format_rational(x) for x in v] for v in rs.simple_roots]}")
    return rs


def sum_fundamental(rs: RootSystem) -> Vector:
    out = tuple(Fraction(0) for _ in range(rs.ambient_dim))
    for w in rs.fundamental_weights:
        out = vec_add(out, w)
    return out


def is_dominant(rs: RootSystem, v: Sequence) -> bool:
    return all(x >= 0 for x in rs.dynkin_labels(v))


# ---------------------------------------------------------------------------
# Weyl group

@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: tuple  # indices of simple reflections, leftmost applied last

    def __call__(self, v: Sequence) -> Vector:
        return self.matrix @ tuple(v)


def reflection_matrix(rs: RootSystem, alpha: Sequence) -> Matrix:
    n = rs.ambient_dim
    ga = rs.gram @ tuple(alpha)
    c = 2 / rs.norm2(alpha)
    return Matrix([[(1 if i == j else 0) - c * alpha[i] * ga[j] for j in range(n)]
                   for i in range(n)])


def max_closure() -> int:
    raw = os.environ.get("LAPLACE_SPECTRA_MAX_CLOSURE")
    if raw is None:
        return DEFAULT_MAX_CLOSURE
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"LAPLACE_SPECTRA_MAX_CLOSURE must be an integer, got {raw!r}") from exc


def weyl_group(rs: RootSystem, bound: int | None = None) -> tuple[WeylElement, ...]:
    """All Weyl group elements, in breadth-first order of word length."""
    return _weyl_group(rs, max_closure() if bound is None else bound)


@lru_cache(maxsize=64)
def _weyl_group(rs: RootSystem, bound: int) -> tuple[WeylElement, ...]:
    gens = [reflection_matrix(rs, a) for a in rs.simple_roots]
    ident = Matrix.identity(rs.ambient_dim)
    seen = {ident: ()}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for i, s in enumerate(gens):
            sw = s @ w
            if sw not in seen:
                seen[sw] = (i,) + seen[w]
                if len(seen) > bound:
                    raise CapacityError(f"Weyl closure for {rs.name} exceeded {bound} elements")
                queue.append(sw)
    return tuple(WeylElement(m, word) for m, word in seen.items())


@lru_cache(maxsize=64)
def longest_element(rs: RootSystem) -> WeylElement:
    """The unique Weyl element sending every positive root to a negative root."""
    hits = [w for w in weyl_group(rs)
            if all(not rs.is_positive(w(a)) for a, _ in rs.positive_roots)]
    if len(hits) != 1:
        raise InvariantViolation(f"found {len(hits)} candidates for the longest element")
    return hits[0]


def minus_w0(rs: RootSystem, v: Sequence) -> Vector:
    return tuple(-x for x in longest_element(rs)(v))


# ---------------------------------------------------------------------------
# lattices

@dataclass(frozen=True)
class Lattice:
    basis: tuple
    label: str

    def coordinates(self, v: Sequence) -> tuple | None:
        """Rational coordinates of v in the basis, None if v is outside the span."""
        return Matrix.from_columns(self.basis).solve(tuple(v))

    def to_json(self) -> dict:
        return {"label": self.label,
                "basis": [[format_rational(x) for x in b] for b in self.basis]}


def in_lattice(lat: Lattice, v: Sequence) -> bool:
    coords = lat.coordinates(v)
    return coords is not None and all(c.denominator == 1 for c in coords)


def weight_lattice(rs: RootSystem) -> Lattice:
    return Lattice(rs.fundamental_weights, "weight")


def root_lattice(rs: RootSystem) -> Lattice:
    return Lattice(rs.simple_roots, "root")


def dynkin_lattice(rs: RootSystem, rows: Sequence[Sequence], label: str) -> Lattice:
    basis = tuple(rs.from_dynkin(r) for r in rows)
    if Matrix.from_columns(basis).rank() != rs.rank:
        raise InputError(f"lattice basis {label!r} is not of full rank {rs.rank}")
    return Lattice(basis, label)


def lattice_from_spec(rs: RootSystem, spec: str | None) -> Lattice:
    """``weight`` (default), ``root``, ``even`` (twice the weight lattice), or
    ``fw:a,b;c,d`` giving basis rows in fundamental-weight coordinates."""
    spec = (spec or "weight").strip()
    if spec == "weight":
        return weight_lattice(rs)
    if spec == "root":
        return root_lattice(rs)
    if spec == "even":
        return Lattice(tuple(vec_scale(2, w) for w in rs.fundamental_weights), "even")
    if spec.startswith("fw:"):
        try:
            rows = [[to_fraction(x) for x in row.split(",")] for row in spec[3:].split(";")]
        except InputError:
            raise
        if any(len(r) != rs.rank for r in rows) or len(rows) != rs.rank:
            raise InputError(f"lattice {spec!r} needs {rs.rank} rows of {rs.rank} entries")
        return dynkin_lattice(rs, rows, spec)
    raise InputError(f"unknown lattice spec {spec!r}")

"""Exact arithmetic substrate: rationals, Gaussian rationals, polynomials, matrices.

Rational scalars are plain :class:`fractions.Fraction` values.  Gaussian
rationals, polynomials with Gaussian-rational coefficients and dense matrices
are defined here.  Nothing in this module touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionError, InputError, UndefinedResultantError

RESULTANT_CONVENTION = (
    "determinant of the Sylvester matrix; res(p, c) = c**deg(p) for a nonzero "
    "constant c, res(p, 0) = 0 when deg(p) >= 1"
)


# ---------------------------------------------------------------------------
# rationals

def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not an exact rational: {x!r}") from exc
    if isinstance(x, GaussianRational) and x.im == 0:
        return x.re
    raise InputError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q) -> str:
    q = to_fraction(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Gaussian rationals

class GaussianRational:
    """An element re + im*i of Q(i). Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x, 0)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return _gauss(self.re + other.re, self.im + other.im)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return _gauss(self.re + other, self.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return _gauss(self.re - other.re, self.im - other.im)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return _gauss(self.re - other, self.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _gauss(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        # skip the Fraction products that are known to vanish
        if not b:
            return _gauss(a * c, a * d if d else _FZERO)
        if not d:
            return _gauss(a * c, b * c)
        if not a and not c:
            return _gauss(-b * d, _FZERO)
        return _gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational(self.re / other, self.im / other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return _gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if isinstance(obj, dict):
            return cls(obj.get("re", 0), obj.get("im", 0))
        return cls(obj)


_FZERO = Fraction(0)


def _gauss(re: Fraction, im: Fraction) -> GaussianRational:
    # internal constructor for values already known to be Fractions
    z = object.__new__(GaussianRational)
    object.__setattr__(z, "re", re)
    object.__setattr__(z, "im", im)
    return z


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

Scalar = Union[int, Fraction, GaussianRational]


def _is_zero(x) -> bool:
    return x == 0


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Univariate polynomial over Q(i), coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [GaussianRational.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-GaussianRational.coerce(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Length of the coefficient list minus one; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.leading
        return Polynomial(c / lc for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        return derivative(self, order)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if c.is_real():
                sign = "-" if c.re < 0 else "+"
                mag = str(abs(c.re))
            else:
                sign, mag = "+", str(c)
            if k == 0:
                body = mag
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == "1" else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "Polynomial":
        return cls(GaussianRational.from_json(c) for c in obj)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial([x])


def derivative(p: Polynomial, order: int = 1) -> Polynomial:
    """Formal derivative of ``p`` iterated ``order`` times."""
    if order < 1:
        raise InputError("derivative order must be >= 1")
    cs = list(p.coeffs)
    for _ in range(order):
        cs = [c * k for k, c in enumerate(cs)][1:]
    return Polynomial(cs)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic p = prod f_k**k with f_k squarefree and coprime.

    Only factors of positive degree are returned, as (f_k, k) pairs.
    """
    if p.is_zero():
        raise InputError("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if f.degree > 0:
            out.append((f, k))
        b = b.exact_div(f)
        c = d.exact_div(f)
        d = c - b.derivative()
        k += 1
    return out


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    p = p.monic()
    return p.exact_div(poly_gcd(p, p.derivative()))


@dataclass(frozen=True)
class SquareTest:
    is_square: bool
    root: Polynomial | None
    normalized: bool


def is_perfect_square(p: Polynomial) -> SquareTest:
    """Decide whether p = q**2 and return q (monic) when it is.

    Non-monic input is divided by its leading coefficient first and the
    result is flagged as normalized.
    """
    if p.is_zero():
        raise InputError("is_perfect_square expects a nonzero polynomial")
    normalized = not p.is_monic()
    p = p.monic()
    root = Polynomial([1])
    for f, k in squarefree_decomposition(p):
        if k % 2:
            return SquareTest(False, None, normalized)
        root = root * f ** (k // 2)
    if root * root != p:
        raise ArithmeticError("square root failed re-squaring check")
    return SquareTest(True, root, normalized)


def sylvester_matrix(p: Polynomial, q: Polynomial) -> "Matrix":
    m, n = p.degree, q.degree
    size = m + n
    real = p.is_real() and q.is_real()

    def entry(c):
        return c.re if real else c

    zero = Fraction(0) if real else ZERO
    rows = []
    pc = [entry(c) for c in reversed(p.coeffs)]
    qc = [entry(c) for c in reversed(q.coeffs)]
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return Matrix(rows) if size else Matrix.empty()


def resultant(p: Polynomial, q: Polynomial) -> GaussianRational:
    """Sylvester resultant of p and q.

    Zero exactly when p and q share a complex root (or one of them is zero
    while the other is nonconstant).  For a nonzero constant q = c and
    deg p = n the value is c**n.
    """
    if p.is_zero() and q.is_zero():
        raise UndefinedResultantError("resultant of two zero polynomials")
    if p.is_zero() or q.is_zero():
        other = q if p.is_zero() else p
        return ZERO if other.degree >= 1 else ONE
    if p.degree == 0 and q.degree == 0:
        return ONE
    return GaussianRational.coerce(sylvester_matrix(p, q).det())


# ---------------------------------------------------------------------------
# matrices

class Matrix:
    """Dense exact matrix; entries are Fractions or GaussianRationals."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(_norm_entry(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def empty(cls) -> "_EmptyMatrix":
        return _EmptyMatrix()

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "Matrix":
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        zero = _norm_entry(values[0]) * 0
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> "Matrix":
        return cls(zip(*columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_real(self) -> bool:
        return all(not isinstance(x, GaussianRational) or x.is_real() for r in self.entries for x in r)

    def real_part(self) -> "Matrix":
        return Matrix([[x.re if isinstance(x, GaussianRational) else x for x in r] for r in self.entries])

    def as_gaussian(self) -> "Matrix":
        return Matrix([[GaussianRational.coerce(x) for x in r] for r in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries))

    T = property(transpose)

    def conjugate(self) -> "Matrix":
        return Matrix([[x.conjugate() if isinstance(x, GaussianRational) else x for x in r]
                       for r in self.entries])

    def adjoint(self) -> "Matrix":
        return self.conjugate().transpose()

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_hermitian(self) -> bool:
        return self.is_square and self == self.adjoint()

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.entries])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.entries))
            return Matrix([[_dot(r, c) for c in cols] for r in self.entries])
        vec = tuple(other)
        if len(vec) != self.cols:
            raise DimensionError("matrix-vector size mismatch")
        return tuple(_dot(r, vec) for r in self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def trace(self):
        self._require_square()
        return sum((self.entries[i][i] for i in range(self.rows)), self.entries[0][0] * 0)

    def _require_square(self):
        if not self.is_square:
            raise DimensionError(f"square matrix required, got {self.shape}")

    def det(self):
        """Determinant by Gaussian elimination with exact pivots."""
        self._require_square()
        a = [list(r) for r in self.entries]
        n = self.rows
        det = a[0][0] * 0 + 1
        for k in range(n):
            piv = next((i for i in range(k, n) if not _is_zero(a[i][k])), None)
            if piv is None:
                return a[0][0] * 0
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                det = -det
            p = a[k][k]
            det = det * p
            for i in range(k + 1, n):
                f = a[i][k]
                if _is_zero(f):
                    continue
                f = f / p
                row_k, row_i = a[k], a[i]
                for j in range(k + 1, n):
                    row_i[j] = row_i[j] - f * row_k[j]
        return det

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns."""
        a = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if not _is_zero(a[i][c])), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            p = a[r][c]
            a[r] = [x / p for x in a[r]]
            for i in range(self.rows):
                if i != r and not _is_zero(a[i][c]):
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(a), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple]:
        """Basis of the right kernel, one vector per free column."""
        red, pivots = self.rref()
        zero = self.entries[0][0] * 0
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [zero] * self.cols
            v[f] = zero + 1
            for i, pc in enumerate(pivots):
                v[pc] = -red[i, f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        self._require_square()
        n = self.rows
        one = self.entries[0][0] * 0 + 1
        aug = Matrix([list(r) + [one if i == j else one * 0 for j in range(n)]
                      for i, r in enumerate(self.entries)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in red.entries])

    def solve(self, b: Sequence[Scalar]) -> tuple | None:
        """Some exact solution x of self @ x = b, or None if inconsistent."""
        if len(b) != self.rows:
            raise DimensionError("right-hand side has the wrong length")
        aug = Matrix([list(r) + [_norm_entry(y)] for r, y in zip(self.entries, b)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        zero = self.entries[0][0] * 0
        x = [zero] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = red[i, self.cols]
        return tuple(x)

    def leading_minors(self) -> list:
        return [Matrix([r[:k] for r in self.entries[:k]]).det() for k in range(1, self.rows + 1)]

    def to_json(self) -> list:
        return [[_entry_json(x) for x in r] for r in self.entries]

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.entries]})"


class _EmptyMatrix:
    """0x0 matrix; its determinant is 1."""

    rows = cols = 0

    def det(self):
        return Fraction(1)


def _norm_entry(x):
    if isinstance(x, (GaussianRational, Fraction)):
        return x
    if isinstance(x, (int, str)):
        return to_fraction(x)
    raise InputError(f"unsupported matrix entry {x!r}")


def _entry_json(x):
    if isinstance(x, GaussianRational):
        return x.to_json()
    return format_rational(x)


def _dot(u, v):
    it = iter(zip(u, v))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def char_poly(m: Matrix) -> Polynomial:
    """Monic det(tI - M) by the Faddeev-LeVerrier recursion (exact over Q(i))."""
    if not m.is_square:
        raise DimensionError(f"characteristic polynomial needs a square matrix, got {m.shape}")
    n = m.rows
    zero = m[0, 0] * 0
    coeffs = [zero] * n + [zero + 1]
    ident = Matrix.identity(n, zero + 1)
    mk = Matrix.zeros(n, n, zero)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return Polynomial(coeffs)


def dot(u: Sequence[Fraction], v: Sequence[Fraction], gram: Matrix | None = None) -> Fraction:
    """Bilinear form u^T G v (Euclidean when gram is None)."""
    if gram is None:
        return sum((a * b for a, b in zip(u, v)), Fraction(0))
    return _dot(u, gram @ tuple(v))


def vec_add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u) -> tuple:
    return tuple(c * a for a in u)


def sturm_real_root_count(p: Polynomial) -> int:
    """Number of distinct real roots of a real polynomial (Sturm's theorem)."""
    if not p.is_real():
        raise InputError("Sturm sequences need real coefficients")
    if p.degree <= 0:
        return 0
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)

    def sign_changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def sign_at_inf(q, neg):
        if q.is_zero():
            return 0
        s = 1 if q.leading.re > 0 else -1
        return -s if neg and q.degree % 2 else s

    return (sign_changes([sign_at_inf(q, True) for q in seq])
            - sign_changes([sign_at_inf(q, False) for q in seq]))

"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions; matrices are immutable :class:`RatMat` objects.  Nothing in this
module ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotUnipotent, SingularMatrix, ZeroVector

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce ``x`` to a Fraction.

    Accepts ints, Fractions and strings such as ``"-25/12"``.  Floats are
    rejected: a float literal has already been rounded.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(c in s for c in ".eE"):
            raise ValueError(f"floating-point literal not allowed: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(entries: Iterable) -> tuple:
    """Build an exact vector (tuple of Fractions)."""
    v = tuple(rat(e) for e in entries)
    if not v:
        raise DimensionMismatch("vectors must be non-empty")
    return v


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"dot of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), _ZERO)


def vadd(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatch(f"sum of lengths {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> tuple:
    c = rat(c)
    return tuple(c * x for x in a)


def vneg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def is_zero_vec(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def primitive(v: Sequence) -> tuple:
    """Scale a nonzero rational vector by a positive factor to a primitive
    integer vector (entries Fractions with denominator 1, gcd 1)."""
    if is_zero_vec(v):
        raise ZeroVector("zero vector has no primitive form")
    den = reduce(lcm, (x.denominator for x in v), 1)
    nums = [int(x * den) for x in v]
    g = reduce(gcd, nums, 0)
    return tuple(Fraction(n // g) for n in nums)


def positively_parallel(a: Sequence, b: Sequence) -> bool:
    """True iff ``a = c*b`` for some c > 0 (both nonzero)."""
    if is_zero_vec(a) or is_zero_vec(b):
        return False
    return primitive(a) == primitive(b)


def parallel(a: Sequence, b: Sequence) -> bool:
    """True iff a and b span the same line (both nonzero)."""
    return positively_parallel(a, b) or positively_parallel(a, vneg(b))


class RatMat:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(rat(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrices must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        self._rows = rows

    @classmethod
    def _trusted(cls, rows: tuple) -> "RatMat":
        m = object.__new__(cls)
        m._rows = rows
        return m

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls._trusted(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMat":
        cols = rows if cols is None else cols
        return cls._trusted(tuple((_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RatMat":
        cols = [vec(c) for c in columns]
        if any(len(c) != len(cols[0]) for c in cols):
            raise DimensionMismatch("columns of different length")
        return cls._trusted(tuple(zip(*cols)))

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple]:
        return [tuple(c) for c in zip(*self._rows)]

    @property
    def T(self) -> "RatMat":
        return RatMat._trusted(tuple(zip(*self._rows)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMat):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"RatMat([{body}])"

    def tolist(self) -> list[list[str]]:
        """Entries as canonical ``p/q`` strings (JSON friendly)."""
        return [[str(x) for x in r] for r in self._rows]

    def __add__(self, other: "RatMat") -> "RatMat":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return RatMat._trusted(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __sub__(self, other: "RatMat") -> "RatMat":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return RatMat._trusted(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __neg__(self) -> "RatMat":
        return RatMat._trusted(tuple(tuple(-a for a in r) for r in self._rows))

    def scale(self, c) -> "RatMat":
        c = rat(c)
        return RatMat._trusted(tuple(tuple(c * a for a in r) for r in self._rows))

    def __mul__(self, c) -> "RatMat":
        if isinstance(c, RatMat):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RatMat):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = tuple(zip(*other._rows))
            return RatMat._trusted(
                tuple(tuple(sum(map(Fraction.__mul__, r, c), _ZERO) for c in cols) for r in self._rows)
            )
        if not isinstance(other, (tuple, list)):
            return NotImplemented
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(v)}")
        return tuple(sum((a * b for a, b in zip(r, v)), _ZERO) for r in self._rows)

    def __pow__(self, k: int) -> "RatMat":
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        result = RatMat.identity(self.nrows)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(min(self.shape))), _ZERO)


def _rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(A: RatMat) -> int:
    return len(_rref(A.rows)[1])


def det(A: RatMat) -> Fraction:
    if not A.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    m = [list(r) for r in A.rows]
    n = len(m)
    result = _ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return _ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def inverse(A: RatMat) -> RatMat:
    if not A.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = A.nrows
    aug = [list(r) + [_ONE if i == j else _ZERO for j in range(n)] for i, r in enumerate(A.rows)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return RatMat._trusted(tuple(tuple(r[n:]) for r in red))


def solve(A: RatMat, b: Sequence) -> tuple:
    """Unique solution of ``A x = b`` for square nonsingular ``A``."""
    if not A.is_square():
        raise DimensionMismatch(f"solve needs a square matrix, got {A.shape}")
    b = vec(b)
    if len(b) != A.nrows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {A.nrows}")
    n = A.nrows
    red, pivots = _rref([list(r) + [bi] for r, bi in zip(A.rows, b)])
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(r[n] for r in red)


def nullspace(A: RatMat) -> list[tuple]:
    """Basis of the right kernel ``{x : A x = 0}``."""
    red, pivots = _rref(A.rows)
    free = [c for c in range(A.ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [_ZERO] * A.ncols
        x[f] = _ONE
        for r, p in enumerate(pivots):
            x[p] = -red[r][f]
        basis.append(tuple(x))
    return basis


def column_space_basis(A: RatMat) -> list[tuple]:
    """Canonical (reduced echelon) basis of the column space of A."""
    red, pivots = _rref(A.T.rows)
    return [tuple(red[i]) for i in range(len(pivots))]


def column_space_intersection(A: RatMat, B: RatMat) -> list[tuple]:
    """Basis of col(A) ∩ col(B), in reduced echelon form (empty if trivial)."""
    if A.nrows != B.nrows:
        raise DimensionMismatch(f"row counts {A.nrows} and {B.nrows} differ")
    stacked = RatMat._trusted(tuple(ra + tuple(-x for x in rb) for ra, rb in zip(A.rows, B.rows)))
    images = [A @ null[: A.ncols] for null in nullspace(stacked)]
    images = [v for v in images if not is_zero_vec(v)]
    if not images:
        return []
    return column_space_basis(RatMat.from_columns(images))


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients (lowest degree first)."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        c = [rat(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def monomial(cls, degree: int, coeff=1, var: str = "x") -> "UniPoly":
        return cls([0] * degree + [coeff], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __call__(self, t) -> Fraction:
        acc = _ZERO
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def _lift(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other], self.var)

    def __add__(self, other) -> "UniPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (_ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (_ZERO,) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-a for a in self.coeffs], self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return UniPoly([], self.var)
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        out = UniPoly([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [_ZERO] * max(len(rem) - other.degree, 0)
        lead = other.leading
        while len(rem) - 1 >= other.degree and any(rem):
            shift = len(rem) - 1 - other.degree
            f = rem[-1] / lead
            quot[shift] = f
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= f * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot, self.var), UniPoly(rem, self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return UniPoly([a / self.leading for a in self.coeffs], self.var)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            a = self.coeffs[d]
            if a == 0:
                continue
            mono = "" if d == 0 else (self.var if d == 1 else f"{self.var}^{d}")
            mag = abs(a)
            body = str(mag) if (mag != 1 or d == 0) else ""
            if body and mono:
                body += "*"
            terms.append(("-" if a < 0 else "+", body + mono))
        s = "".join(f" {sg} {t}" for sg, t in terms).strip()
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def charpoly(A: RatMat, var: str = "x") -> UniPoly:
    """Monic characteristic polynomial det(xI - A) (Faddeev-LeVerrier)."""
    if not A.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = A.nrows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    identity = RatMat.identity(n)
    M = RatMat.zeros(n)
    for k in range(1, n + 1):
        M = A @ M + identity.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(A @ M).trace() / k
    return UniPoly(coeffs, var)


def nilpotency_index(N: RatMat) -> int | None:
    """Smallest k with N^k = 0, or None if N is not nilpotent.

    Found by explicit powering up to the dimension.
    """
    if not N.is_square():
        raise DimensionMismatch("nilpotency of a non-square matrix")
    P = RatMat.identity(N.nrows)
    for k in range(1, N.nrows + 1):
        P = P @ N
        if P.is_zero():
            return k
    return None


def unipotent_log(M: RatMat) -> RatMat:
    """log(M) for unipotent M as the terminating series sum (-1)^(k+1) (M-I)^k / k."""
    n = M.nrows
    N = M - RatMat.identity(n)
    index = nilpotency_index(N)
    if index is None:
        raise NotUnipotent("M - I is not nilpotent")
    out = RatMat.zeros(n)
    P = RatMat.identity(n)
    for k in range(1, index):
        P = P @ N
        out = out + P.scale(Fraction((-1) ** (k + 1), k))
    return out


def nilpotent_exp(L: RatMat) -> RatMat:
    """exp(L) for nilpotent L (the series terminates)."""
    index = nilpotency_index(L)
    if index is None:
        raise ValueError("matrix is not nilpotent")
    out = RatMat.identity(L.nrows)
    P = RatMat.identity(L.nrows)
    fact = 1
    for k in range(1, index):
        P = P @ L
        fact *= k
        out = out + P.scale(Fraction(1, fact))
    return out


class UniPolyMat:
    """Matrix polynomial ``sum_k t^k * C_k`` with exact coefficient matrices."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence[RatMat], var: str = "t"):
        coeffs = list(coeffs)
        if not coeffs:
            raise DimensionMismatch("need at least the constant coefficient")
        shape = coeffs[0].shape
        if any(c.shape != shape for c in coeffs):
            raise DimensionMismatch("coefficient matrices differ in shape")
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs[0].shape

    def coefficient(self, k: int) -> RatMat:
        if k < len(self.coeffs):
            return self.coeffs[k]
        return RatMat.zeros(*self.shape)

    def entry(self, i: int, j: int) -> UniPoly:
        return UniPoly([c[i, j] for c in self.coeffs], self.var)

    def __call__(self, t) -> RatMat:
        t = rat(t)
        out = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            out = out.scale(t) + c
        return out

    def apply(self, q: Sequence) -> tuple[UniPoly, ...]:
        """The vector of polynomials ``M(t) q``."""
        images = [c @ q for c in self.coeffs]
        return tuple(UniPoly([img[i] for img in images], self.var) for i in range(self.shape[0]))

    def conjugate(self, B: RatMat) -> "UniPolyMat":
        """Coefficient-wise ``B^-1 C_k B``."""
        Binv = inverse(B)
        return UniPolyMat([Binv @ c @ B for c in self.coeffs], self.var)

    def __matmul__(self, other: RatMat) -> "UniPolyMat":
        return UniPolyMat([c @ other for c in self.coeffs], self.var)

    def __rmatmul__(self, other: RatMat) -> "UniPolyMat":
        return UniPolyMat([other @ c for c in self.coeffs], self.var)

    def __repr__(self) -> str:
        return f"UniPolyMat(degree={self.degree}, coeffs={list(self.coeffs)!r})"


def matrix_power_poly(M: RatMat, var: str = "t") -> UniPolyMat:
    """M^t = exp(t log M) as an exact matrix polynomial, for unipotent M.

    Valid at every integer t, including negative ones.
    """
    L = unipotent_log(M)
    index = nilpotency_index(L) if not L.is_zero() else 1
    coeffs = [RatMat.identity(M.nrows)]
    P = RatMat.identity(M.nrows)
    fact = 1
    for k in range(1, index):
        P = P @ L
        fact *= k
        coeffs.append(P.scale(Fraction(1, fact)))
    return UniPolyMat(coeffs, var)


@dataclass(frozen=True)
class Ray:
    """A ray ``sign * direction``; direction is primitive with first nonzero entry positive."""

    direction: tuple
    sign: int

    @classmethod
    def of(cls, v: Sequence) -> "Ray":
        p = primitive(v)
        first = next(x for x in p if x != 0)
        sign = 1 if first > 0 else -1
        return cls(tuple(sign * x for x in p), sign)

    @property
    def vector(self) -> tuple:
        return tuple(self.sign * x for x in self.direction)

    def sign_along(self, reference: Sequence) -> int:
        """+1 / -1 if the ray points along / against ``reference``; 0 if not parallel."""
        if positively_parallel(self.vector, reference):
            return 1
        if positively_parallel(self.vector, vneg(reference)):
            return -1
        return 0


def leading_direction(Mt: UniPolyMat, q: Sequence) -> Ray:
    """The ray that ``M(t) q`` approaches (after normalisation) as t -> +infinity."""
    polys = Mt.apply(vec(q))
    top = max(p.degree for p in polys)
    if top < 0:
        raise ZeroVector("M(t) q vanishes identically")
    return Ray.of(tuple(p.coeffs[top] if p.degree >= top else _ZERO for p in polys))

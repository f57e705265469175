"""Sparse multivariate polynomials over the rationals in named variables."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .exact import rat

# A monomial is a sorted tuple of (variable, exponent) pairs with exponent > 0.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    """Polynomial stored as ``{monomial: coefficient}`` with no zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = rat(c)
            if c != 0:
                clean[tuple(sorted((v, e) for v, e in mono if e))] = c
        self.terms: dict[Monomial, Fraction] = clean

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def lift(cls, x) -> "MultiPoly":
        return x if isinstance(x, MultiPoly) else cls.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def variables(self) -> set[str]:
        return {v for mono in self.terms for v, _ in mono}

    def degree(self, var: str) -> int:
        """Degree in ``var`` (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(dict(mono).get(var, 0) for mono in self.terms)

    def __add__(self, other) -> "MultiPoly":
        other = MultiPoly.lift(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-MultiPoly.lift(other))

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.lift(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = MultiPoly.lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other) -> "MultiPoly":
        """Exact division by a nonzero constant or by a single term."""
        other = MultiPoly.lift(other)
        if len(other.terms) != 1:
            raise ValueError("only division by a single nonzero term is supported")
        (dm, dc), = other.terms.items()
        dexp = dict(dm)
        out = {}
        for mono, c in self.terms.items():
            exps = dict(mono)
            for v, e in dexp.items():
                if exps.get(v, 0) < e:
                    raise ValueError(f"{self} is not divisible by {other}")
                exps[v] -= e
            out[tuple(exps.items())] = c / dc
        return MultiPoly(out)

    def coefficient(self, var: str, exp: int) -> "MultiPoly":
        """Coefficient of ``var**exp`` as a polynomial in the other variables."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.get(var, 0) == exp:
                d.pop(var, None)
                out[tuple(d.items())] = c
        return MultiPoly(out)

    def coeff_of(self, monomial: Mapping[str, int]) -> Fraction:
        """Rational coefficient of one exact monomial, e.g. ``{"mu": 2, "z": 1}``."""
        key = tuple(sorted((v, e) for v, e in monomial.items() if e))
        return self.terms.get(key, Fraction(0))

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute rationals or polynomials for some variables."""
        out = MultiPoly()
        for mono, c in self.terms.items():
            term = MultiPoly.const(c)
            rest = []
            for v, e in mono:
                if v in values:
                    term = term * MultiPoly.lift(values[v]) ** e
                else:
                    rest.append((v, e))
            out = out + term * MultiPoly({tuple(rest): 1})
        return out

    def __call__(self, **values) -> Fraction:
        """Evaluate to a rational; every variable must be given."""
        p = self.subs(values)
        if p.variables:
            raise ValueError(f"unassigned variables {sorted(p.variables)}")
        return p.terms.get((), Fraction(0))

    def constant(self) -> Fraction | None:
        """The value if this is a constant polynomial, else None."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[mono]
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            mag = abs(c)
            if body:
                s = body if mag == 1 else f"{mag}*{body}"
            else:
                s = str(mag)
            parts.append(("-" if c < 0 else "+", s))
        text = " ".join(f"{sg} {s}" for sg, s in parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def variables(names: str) -> tuple[MultiPoly, ...]:
    """``lam, mu = variables("lam mu")``."""
    return tuple(MultiPoly.var(n) for n in names.split())


def det(rows: Iterable[Iterable]):
    """Determinant by cofactor expansion; works over any commutative ring.

    Meant for the 2x2 to 4x4 symbolic systems, not for large matrices.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square array")
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def cramer(columns, rhs) -> tuple:
    """Numerators and denominator of Cramer's rule.

    Returns ``(nums, den)`` with ``x_i = nums[i] / den`` for the system whose
    coefficient matrix has the given columns.
    """
    columns = [list(c) for c in columns]
    rows = [list(r) for r in zip(*columns)]
    den = det(rows)
    nums = []
    for i in range(len(columns)):
        cols = columns[:i] + [list(rhs)] + columns[i + 1:]
        nums.append(det([list(r) for r in zip(*cols)]))
    return tuple(nums), den

"""Simplicial cones, cone coordinates, and exact decisions about how a linear
map moves the open positive orthant relative to +/- itself."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DegenerateCone, SingularBasis, SingularMatrix
from .exact import RatMat, inverse, primitive, rank, vec, vneg

_ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class SimplicialCone:
    """Cone spanned by linearly independent generators.

    ``closed=False`` means strictly positive combinations.  Equality ignores
    generator order and positive rescaling of individual generators.
    """

    generators: tuple
    closed: bool = False

    def __post_init__(self):
        gens = tuple(vec(g) for g in self.generators)
        if not gens:
            raise DegenerateCone("a cone needs at least one generator")
        dim = len(gens[0])
        if any(len(g) != dim for g in gens):
            raise DegenerateCone("generators of different dimension")
        if len(gens) > dim or rank(RatMat.from_columns(gens)) != len(gens):
            raise DegenerateCone("generators are linearly dependent")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @property
    def is_full(self) -> bool:
        return len(self.generators) == self.dim

    @cached_property
    def basis(self) -> RatMat:
        """Matrix whose columns are the generators."""
        return RatMat.from_columns(self.generators)

    @cached_property
    def basis_inverse(self) -> RatMat:
        if not self.is_full:
            raise SingularBasis(f"{len(self.generators)} generators in dimension {self.dim}")
        try:
            return inverse(self.basis)
        except SingularMatrix as exc:
            raise SingularBasis(str(exc)) from exc

    def __neg__(self) -> "SimplicialCone":
        return SimplicialCone(tuple(vneg(g) for g in self.generators), self.closed)

    def closure(self) -> "SimplicialCone":
        return SimplicialCone(self.generators, closed=True)

    def _rays(self) -> frozenset:
        return frozenset(primitive(g) for g in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialCone):
            return NotImplemented
        return self.closed == other.closed and self.dim == other.dim and self._rays() == other._rays()

    def __hash__(self) -> int:
        return hash((self.closed, self._rays()))

    def __repr__(self) -> str:
        gens = "; ".join(",".join(str(x) for x in g) for g in self.generators)
        return f"SimplicialCone({gens}{', closed' if self.closed else ''})"

    def contains(self, p: Sequence) -> bool:
        c = coords(self, p)
        return all(a >= 0 for a in c) if self.closed else all(a > 0 for a in c)


def cone(*generators, closed: bool = False) -> SimplicialCone:
    return SimplicialCone(tuple(generators), closed)


def coords(C: SimplicialCone, p: Sequence) -> tuple:
    """Coordinates of p in the generator basis of a full-dimensional cone."""
    return C.basis_inverse @ vec(p)


class Membership(enum.Enum):
    INTERIOR_PLUS = "interior+"
    INTERIOR_MINUS = "interior-"
    BOUNDARY_PLUS = "boundary+"
    BOUNDARY_MINUS = "boundary-"
    OUTSIDE = "outside"

    @property
    def in_open(self) -> bool:
        return self in (Membership.INTERIOR_PLUS, Membership.INTERIOR_MINUS)

    @property
    def in_closure(self) -> bool:
        return self is not Membership.OUTSIDE


def sign_class(a: Sequence) -> Membership:
    """Classify a coordinate vector against the orthant pair +/-(0, inf)^n.

    The zero vector lies in both closed orthants and is reported as
    BOUNDARY_PLUS.
    """
    if all(x > 0 for x in a):
        return Membership.INTERIOR_PLUS
    if all(x < 0 for x in a):
        return Membership.INTERIOR_MINUS
    if all(x >= 0 for x in a):
        return Membership.BOUNDARY_PLUS
    if all(x <= 0 for x in a):
        return Membership.BOUNDARY_MINUS
    return Membership.OUTSIDE


def membership(C: SimplicialCone, p: Sequence) -> Membership:
    """Where p sits relative to X = C ∪ -C."""
    return sign_class(coords(C, p))


def cone_matrix(C: SimplicialCone, M: RatMat) -> RatMat:
    """B^-1 M B: the action of M in the cone's coordinates."""
    return C.basis_inverse @ M @ C.basis


# --- Fourier-Motzkin -------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    """``coeffs . x + const > 0`` (strict) or ``>= 0``."""

    coeffs: tuple
    const: Fraction = _ZERO
    strict: bool = True

    def holds(self, x: Sequence) -> bool:
        val = sum((a * b for a, b in zip(self.coeffs, x)), self.const)
        return val > 0 if self.strict else val >= 0

    def normalized(self) -> "Inequality":
        scale = next((abs(a) for a in self.coeffs if a != 0), None)
        if scale is None:
            return self
        return Inequality(tuple(a / scale for a in self.coeffs), self.const / scale, self.strict)


def gt(coeffs, const=0) -> Inequality:
    return Inequality(vec(coeffs), Fraction(const), True)


def ge(coeffs, const=0) -> Inequality:
    return Inequality(vec(coeffs), Fraction(const), False)


def _combine(pos: Inequality, neg: Inequality, j: int) -> Inequality:
    a, b = pos.coeffs[j], -neg.coeffs[j]
    coeffs = tuple(b * p + a * q for p, q in zip(pos.coeffs, neg.coeffs))
    return Inequality(coeffs, b * pos.const + a * neg.const, pos.strict or neg.strict).normalized()


def _prune(system) -> list[Inequality]:
    # among inequalities with identical left-hand sides only the tightest matters
    best: dict = {}
    for ineq in system:
        key = ineq.coeffs
        cur = best.get(key)
        if cur is None or (ineq.const, not ineq.strict) < (cur.const, not cur.strict):
            best[key] = ineq
    return list(best.values())


def strict_feasible(system: Sequence[Inequality], nvars: int | None = None) -> tuple | None:
    """Exact Fourier-Motzkin feasibility with strictness.

    Returns a rational point satisfying every inequality, or None when the
    system is infeasible.
    """
    system = [ineq.normalized() for ineq in system]
    if nvars is None:
        nvars = len(system[0].coeffs) if system else 0
    stages = []
    current = _prune(system)
    for j in reversed(range(nvars)):
        stages.append(current)
        pos = [s for s in current if s.coeffs[j] > 0]
        neg = [s for s in current if s.coeffs[j] < 0]
        rest = [s for s in current if s.coeffs[j] == 0]
        current = _prune(rest + [_combine(p, q, j) for p in pos for q in neg])
    for ineq in current:
        if not ineq.holds((_ZERO,) * nvars):
            return None
    x = [_ZERO] * nvars
    for j, stage in zip(range(nvars), reversed(stages)):
        lo = hi = None
        lo_strict = hi_strict = False
        for s in stage:
            a = s.coeffs[j]
            if a == 0:
                continue
            rest = s.const + sum((c * v for c, v in zip(s.coeffs[:j], x[:j])), _ZERO)
            bound = -rest / a
            if a > 0:
                if lo is None or bound > lo or (bound == lo and s.strict):
                    lo, lo_strict = bound, s.strict
            else:
                if hi is None or bound < hi or (bound == hi and s.strict):
                    hi, hi_strict = bound, s.strict
        if lo is not None and hi is not None:
            x[j] = lo if lo == hi else (lo + hi) / 2
        elif lo is not None:
            x[j] = lo + 1 if lo_strict else lo
        elif hi is not None:
            x[j] = hi - 1 if hi_strict else hi
    point = tuple(x)
    assert all(s.holds(point) for s in system), "Fourier-Motzkin back-substitution failed"
    return point


def positive_orthant(n: int) -> list[Inequality]:
    return [gt([1 if i == j else 0 for i in range(n)]) for j in range(n)]


def image_in_orthant(A: RatMat, sign: int) -> list[Inequality]:
    """Inequalities for ``sign * (A x) > 0`` entrywise."""
    return [gt([sign * a for a in row]) for row in A.rows]


# --- orthant map classification --------------------------------------------


class MapKind(enum.Enum):
    MAPS_INTO_PLUS = "maps-into-plus"
    MAPS_INTO_MINUS = "maps-into-minus"
    DISJOINT = "disjoint"
    OVERLAP = "overlap"


@dataclass(frozen=True)
class OrthantMapClass:
    """Relation between A·O and ±O, O the open positive orthant.

    DISJOINT carries either a row pair (``row_plus`` entrywise >= 0 and
    nonzero, ``row_minus`` entrywise <= 0 and nonzero) or, when no such pair
    exists, ``via="fourier-motzkin"``.  OVERLAP carries x > 0 with A x
    strictly inside +O or -O.
    """

    kind: MapKind
    row_plus: int | None = None
    row_minus: int | None = None
    witness: tuple | None = None
    via: str = "sign-pattern"

    @property
    def maps_into(self) -> bool:
        return self.kind in (MapKind.MAPS_INTO_PLUS, MapKind.MAPS_INTO_MINUS)

    @property
    def disjoint(self) -> bool:
        return self.kind is MapKind.DISJOINT

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value, "via": self.via}
        if self.row_plus is not None:
            out["row_plus"] = self.row_plus
            out["row_minus"] = self.row_minus
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
        return out


def _nonneg_row(row) -> bool:
    return all(a >= 0 for a in row) and any(a != 0 for a in row)


def _nonpos_row(row) -> bool:
    return all(a <= 0 for a in row) and any(a != 0 for a in row)


def maps_into_sign(A: RatMat) -> int:
    """+1 if A·O ⊆ O, -1 if A·O ⊆ -O, else 0 (entrywise criterion)."""
    if all(_nonneg_row(r) for r in A.rows):
        return 1
    if all(_nonpos_row(r) for r in A.rows):
        return -1
    return 0


def row_pair_certificate(A: RatMat) -> tuple[int, int] | None:
    plus = next((i for i, r in enumerate(A.rows) if _nonneg_row(r)), None)
    minus = next((i for i, r in enumerate(A.rows) if _nonpos_row(r)), None)
    if plus is None or minus is None:
        return None
    return plus, minus


def classify_orthant_map(A: RatMat) -> OrthantMapClass:
    sign = maps_into_sign(A)
    if sign == 1:
        return OrthantMapClass(MapKind.MAPS_INTO_PLUS)
    if sign == -1:
        return OrthantMapClass(MapKind.MAPS_INTO_MINUS)
    pair = row_pair_certificate(A)
    if pair is not None:
        return OrthantMapClass(MapKind.DISJOINT, row_plus=pair[0], row_minus=pair[1])
    n = A.ncols
    for s in (1, -1):
        x = strict_feasible(positive_orthant(n) + image_in_orthant(A, s), n)
        if x is not None:
            return OrthantMapClass(MapKind.OVERLAP, witness=x, via="fourier-motzkin")
    return OrthantMapClass(MapKind.DISJOINT, via="fourier-motzkin")


def containment_witness(A: RatMat) -> tuple | None:
    """Some x > 0 with A x outside O ∪ -O, or None if A·O ⊆ ±O."""
    if maps_into_sign(A) != 0:
        return None
    n = A.ncols
    base = positive_orthant(n)
    for i in range(A.nrows):
        for k in range(A.nrows):
            # (Ax)_i <= 0 and (Ax)_k >= 0
            system = base + [ge([-a for a in A.row(i)]), ge(A.row(k))]
            x = strict_feasible(system, n)
            if x is not None:
                return x
    raise AssertionError("no containment witness although the sign test failed")


def closed_maps_into_sign(A: RatMat) -> int:
    """+1 / -1 if A maps the closed orthant into the closed +/- orthant, else 0."""
    if all(a >= 0 for r in A.rows for a in r):
        return 1
    if all(a <= 0 for r in A.rows for a in r):
        return -1
    return 0


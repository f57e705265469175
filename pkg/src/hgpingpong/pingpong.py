"""Ping-pong tables X = C ∪ -C, Y = R X ∪ ... ∪ R^(m-1) X and their exact verification.

Every nonidentity power of R maps X into Y by construction of Y, so a table
is valid iff

* X ∩ R^i X = ∅ for i = 1..m-1, and
* every nonidentity power T^k sends each R^i X into X.

For T of order two only k = 1 matters.  For T of infinite order (T
unipotent) the cone matrices of T^k R^i are polynomials in k and the
containment is decided for every k != 0 at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .cones import (
    MapKind,
    OrthantMapClass,
    SimplicialCone,
    classify_orthant_map,
    closed_maps_into_sign,
    cone_matrix,
    containment_witness,
    maps_into_sign,
    membership,
)
from .errors import DegenerateCone
from .exact import RatMat, UniPoly, UniPolyMat, matrix_power_poly
from .generators import HGTriple, matrix_order
from .words import INV, ROT, Word, injectivity_check

# eigenvector of TR, eigenvector of TR^-1, and the common line of col(log TR), col(log TR^-1)  (n = 3)
U3 = (1, -2, 1)
V3 = (1, 0, 3)
W3 = (0, -1, 1)


def standard_cone() -> SimplicialCone:
    return SimplicialCone((U3, V3, W3))


@dataclass(frozen=True)
class PingPongTable:
    cone: SimplicialCone
    rotation: RatMat
    rotation_order: int
    involution: RatMat
    involution_order: int | None  # 2, or None for infinite order

    @classmethod
    def from_triple(cls, h: HGTriple, C: SimplicialCone) -> "PingPongTable":
        return cls.build(C, h.R, h.T)

    @classmethod
    def build(cls, C: SimplicialCone, R: RatMat, T: RatMat) -> "PingPongTable":
        m = matrix_order(R)
        if m is None or m < 2:
            raise ValueError("R must have finite order >= 2")
        t_order = matrix_order(T, bound=2)
        if t_order == 1:
            raise ValueError("T must not be the identity")
        return cls(C, R, m, T, 2 if t_order == 2 else None)

    def word(self, *letters) -> Word:
        return Word(tuple(letters), self.rotation_order, self.involution_order)

    @cached_property
    def _powers(self) -> dict:
        return {}

    def power(self, factor: str, e: int) -> RatMat:
        """R^e or T^e, memoised."""
        key = (factor, e)
        if key not in self._powers:
            self._powers[key] = (self.rotation if factor == ROT else self.involution) ** e
        return self._powers[key]

    @cached_property
    def involution_powers(self) -> UniPolyMat:
        """T^k as a polynomial in k (T unipotent)."""
        return matrix_power_poly(self.involution, var="k")


@dataclass
class Check:
    """One hypothesis instance: a group word applied to X."""

    name: str
    word: Word
    expect: str  # "disjoint" or "maps-into"
    matrix: RatMat | None
    result: OrthantMapClass | None
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "word": str(self.word), "expect": self.expect, "passed": self.passed}
        if self.matrix is not None:
            out["cone_matrix"] = self.matrix.tolist()
        if self.result is not None:
            out["class"] = self.result.to_json()
        out.update(self.detail)
        return out


@dataclass
class Witness:
    """q ∈ X whose image under ``word`` violates a ping-pong hypothesis."""

    word: Word
    q: tuple
    image: tuple
    violation: str  # "disjointness" or "containment"
    cone: SimplicialCone

    def recheck(self) -> bool:
        if not membership(self.cone, self.q).in_open:
            return False
        img = membership(self.cone, self.image)
        if self.violation == "disjointness":
            return img.in_open
        return not img.in_open

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "q": [str(x) for x in self.q],
            "image": [str(x) for x in self.image],
            "violation": self.violation,
        }


@dataclass
class Verdict:
    valid: bool
    checks: list
    witness: Witness | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"valid": self.valid, "checks": [c.to_json() for c in self.checks]}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out.update(self.extra)
        return out


def _witness_from_coords(table: PingPongTable, word: Word, x: tuple, violation: str) -> Witness:
    B = table.cone.basis
    q = B @ x
    g = word_matrix(table, word)
    return Witness(word, q, g @ q, violation, table.cone)


def word_matrix(table: PingPongTable, word: Word) -> RatMat:
    out = RatMat.identity(table.rotation.nrows)
    for f, e in word.letters:
        out = out @ table.power(f, e)
    return out


def _root_bound(coeffs) -> int:
    """Integer above every real root of a nonconstant polynomial (Cauchy)."""
    lead = abs(coeffs[-1])
    return math.ceil(1 + max(abs(c) / lead for c in coeffs[:-1]))


def first_failing_power(family: UniPolyMat, sign: int) -> int | None:
    """Decide whether ``family(sign*k)`` maps O into ±O for every integer k >= 1.

    Returns None if it does, else the smallest failing k.  Beyond a root bound
    each entry has the sign of its leading coefficient, so only finitely many
    k need an explicit test.
    """
    n, c = family.shape
    entries = [[family.entry(i, j) for j in range(c)] for i in range(n)]
    if sign < 0:
        entries = [[_reflect(p) for p in row] for row in entries]
    bound = 1
    for row in entries:
        for p in row:
            if p.degree >= 1:
                bound = max(bound, _root_bound(p.coeffs))
    for k in range(1, bound + 1):
        M = RatMat([[p(k) for p in row] for row in entries])
        if maps_into_sign(M) == 0:
            return k
    asymptotic = RatMat([[(1 if p.leading > 0 else -1 if p.leading < 0 else 0) for p in row] for row in entries])
    if maps_into_sign(asymptotic) == 0:
        # some k beyond the bound fails; the sign pattern is already fixed there
        return bound + 1
    return None


def _reflect(p):
    """p(-k) as a polynomial in k."""
    return UniPoly([a if i % 2 == 0 else -a for i, a in enumerate(p.coeffs)], p.var)


def _disjointness_checks(table: PingPongTable, full: bool = True) -> list[Check]:
    checks = []
    for i in range(1, table.rotation_order):
        word = table.word((ROT, i))
        A = cone_matrix(table.cone, table.power(ROT, i))
        cls = classify_orthant_map(A)
        checks.append(Check(f"X ∩ R^{i}X = ∅", word, "disjoint", A, cls, cls.disjoint))
    return checks


def _containment_class(A: RatMat, full: bool) -> OrthantMapClass | None:
    sign = maps_into_sign(A)
    if sign:
        return OrthantMapClass(MapKind.MAPS_INTO_PLUS if sign > 0 else MapKind.MAPS_INTO_MINUS)
    # only the full report needs to know how the containment fails
    return classify_orthant_map(A) if full else None


def _containment_checks(table: PingPongTable, full: bool = True) -> list[Check]:
    checks = []
    for i in range(1, table.rotation_order):
        if table.involution_order == 2:
            word = table.word((INV, 1), (ROT, i))
            A = cone_matrix(table.cone, word_matrix(table, word))
            cls = _containment_class(A, full)
            checks.append(Check(f"T R^{i}X ⊆ X", word, "maps-into", A, cls, cls is not None and cls.maps_into))
            continue
        family = None
        for sign in (1, -1):
            word = table.word((INV, sign), (ROT, i))
            A = cone_matrix(table.cone, word_matrix(table, word))
            cls = _containment_class(A, full)
            name = f"T^{'k' if sign > 0 else '-k'} R^{i}X ⊆ X (all k >= 1)"
            if cls is None or not cls.maps_into:
                checks.append(Check(name, word, "maps-into", A, cls, False, {"first_failing_power": sign}))
                continue
            if family is None:
                family = (table.involution_powers @ table.power(ROT, i)).conjugate(table.cone.basis)
            fail_k = first_failing_power(family, sign)
            detail = {"all_powers": fail_k is None}
            if fail_k is not None:
                detail["first_failing_power"] = sign * fail_k
            checks.append(Check(name, word, "maps-into", A, cls, fail_k is None, detail))
    return checks


def half_cone_self_maps(table: PingPongTable) -> dict:
    """Whether T and T^-1 send the closed cone into ± itself (reported, not required)."""
    out = {}
    for sign in (1, -1):
        A = cone_matrix(table.cone, table.power(INV, sign))
        out["T" if sign > 0 else "T^-1"] = closed_maps_into_sign(A)
    return out


def verify(table: PingPongTable, stop_early: bool = False, with_witness: bool = True) -> Verdict:
    """Decide validity exactly.

    With ``stop_early`` the cheap containment checks run first and the
    verdict returns at the first failure (the search and scan path).
    """
    C = table.cone
    if not C.is_full:
        raise DegenerateCone("ping-pong verification needs a full-dimensional cone")
    full = not stop_early
    groups = (_containment_checks, _disjointness_checks) if stop_early else (_disjointness_checks, _containment_checks)
    checks: list[Check] = []
    for group in groups:
        for chk in group(table, full):
            checks.append(chk)
            if stop_early and not chk.passed:
                return Verdict(False, checks, _witness_for(table, chk) if with_witness else None)
    valid = all(c.passed for c in checks)
    witness = None
    if not valid and with_witness:
        witness = _witness_for(table, next(c for c in checks if not c.passed))
    extra = {}
    if table.involution_order is None:
        extra["half_cone_self_maps"] = half_cone_self_maps(table)
    return Verdict(valid, checks, witness, extra)


def _witness_for(table: PingPongTable, chk: Check) -> Witness:
    if chk.expect == "disjoint":
        return _witness_from_coords(table, chk.word, chk.result.witness, "disjointness")
    word = chk.word
    k = chk.detail.get("first_failing_power")
    if k is not None:
        word = table.word((INV, k), word.letters[1])
    A = cone_matrix(table.cone, word_matrix(table, word))
    x = containment_witness(A)
    return _witness_from_coords(table, word, x, "containment")


def falsify(table: PingPongTable) -> Witness | None:
    """A concrete counterexample to validity, or None if the table is valid."""
    verdict = verify(table, stop_early=True)
    return None if verdict.valid else verdict.witness


@dataclass
class FreeProductReport:
    max_len: int
    checked: int
    nontrivial_identities: list

    @property
    def passed(self) -> bool:
        return not self.nontrivial_identities


def free_product_consequence_check(h: HGTriple, max_len: int, exp_bound: int = 3) -> FreeProductReport:
    """No nontrivial reduced word of length <= max_len evaluates to I."""
    rep = injectivity_check(h, max_len, exp_bound)
    return FreeProductReport(max_len, rep.checked, [str(w) for w in rep.identities])


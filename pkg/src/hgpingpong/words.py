"""Reduced words in Z/m * Z/2 and Z/m * Z, evaluated as exact matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import OrderMismatch
from .exact import RatMat, inverse
from .generators import HGTriple, matrix_order

ROT, INV = "R", "T"


@dataclass(frozen=True)
class Word:
    """Alternating product of rotation letters R^e (0 < e < m) and involution
    letters T^e (e = 1 when T has order 2, else any e != 0).

    ``inv_order`` is 2 or None (infinite).  Construction rejects non-reduced
    letter sequences.
    """

    letters: tuple = ()
    m: int = 4
    inv_order: int | None = 2

    def __post_init__(self):
        letters = tuple((f, int(e)) for f, e in self.letters)
        object.__setattr__(self, "letters", letters)
        for (f, e), nxt in zip(letters, letters[1:] + (None,)):
            if f == ROT:
                if not 0 < e < self.m:
                    raise ValueError(f"rotation exponent {e} outside 1..{self.m - 1}")
            elif f == INV:
                if e == 0 or (self.inv_order == 2 and e != 1):
                    raise ValueError(f"invalid exponent {e} for {INV}")
            else:
                raise ValueError(f"unknown factor {f!r}")
            if nxt is not None and nxt[0] == f:
                raise ValueError("adjacent letters from the same factor: word is not reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f if e == 1 else f"{f}^{e}" for f, e in self.letters)

    def concat(self, other: "Word") -> "Word":
        """Reduced form of the concatenation (merging letters across the seam)."""
        out = list(self.letters)
        for f, e in other.letters:
            if out and out[-1][0] == f:
                e0 = out.pop()[1] + e
                if f == ROT:
                    e0 %= self.m
                elif self.inv_order == 2:
                    e0 %= 2
                if e0:
                    out.append((f, e0))
            else:
                out.append((f, e))
        return Word(tuple(out), self.m, self.inv_order)


def _letter_choices(m: int, inv_order: int | None, exp_bound: int):
    rot = [(ROT, e) for e in range(1, m)]
    if inv_order == 2:
        inv = [(INV, 1)]
    else:
        inv = [(INV, s * e) for e in range(1, exp_bound + 1) for s in (1, -1)]
    return rot, inv


def enumerate_words(m: int, inv_order: int | None, max_len: int, exp_bound: int = 1) -> Iterator[Word]:
    """All reduced words of length <= max_len, each exactly once, shortest first
    (the empty word included)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    rot, inv = _letter_choices(m, inv_order, exp_bound)
    layer = [()]
    yield Word((), m, inv_order)
    for _ in range(max_len):
        nxt = []
        for w in layer:
            if not w:
                options = rot + inv
            else:
                options = inv if w[-1][0] == ROT else rot
            nxt.extend(w + (letter,) for letter in options)
        for w in nxt:
            yield Word(w, m, inv_order)
        layer = nxt


def count_by_recurrence(rot_choices: int, inv_choices: int, length: int) -> int:
    """Number of reduced words of exactly ``length`` letters.

    a_l (ending in a rotation) = rot * b_{l-1}, b_l = inv * a_{l-1}.
    """
    if length == 0:
        return 1
    a, b = rot_choices, inv_choices
    for _ in range(length - 1):
        a, b = rot_choices * b, inv_choices * a
    return a + b


def _letter_matrix(h: HGTriple, f: str, e: int, cache: dict) -> RatMat:
    key = (f, e)
    if key not in cache:
        base = h.R if f == ROT else h.T
        cache[key] = base ** e if e > 0 else inverse(base) ** (-e)
    return cache[key]


def evaluate(w: Word, h: HGTriple, cache: dict | None = None) -> RatMat:
    """The matrix x_1 x_2 ... x_n."""
    if w.m != h.rotation_order:
        raise OrderMismatch(f"word is over Z/{w.m} but R_{h.n} has order {h.rotation_order}")
    cache = {} if cache is None else cache
    out = RatMat.identity(h.n)
    for f, e in w.letters:
        out = out @ _letter_matrix(h, f, e, cache)
    return out


@dataclass
class InjectivityReport:
    checked: int
    collisions: list  # pairs of words with equal matrices
    identities: list  # nontrivial words equal to I

    @property
    def ok(self) -> bool:
        return not self.collisions and not self.identities

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "collisions": [[str(a), str(b)] for a, b in self.collisions],
            "identities": [str(w) for w in self.identities],
        }


def involution_order(h: HGTriple) -> int | None:
    """2 if T^2 = I, None if T has infinite order (T unipotent, T != I)."""
    order = matrix_order(h.T, bound=2)
    if order == 2:
        return 2
    if order == 1:
        raise ValueError("T is the identity")
    return None


def injectivity_check(h: HGTriple, max_len: int, exp_bound: int = 3) -> InjectivityReport:
    """Evaluate every reduced word up to ``max_len``; report repeated matrices."""
    m = h.rotation_order
    inv_order = involution_order(h)
    rot, inv = _letter_choices(m, inv_order, exp_bound)
    cache: dict = {}
    seen: dict = {}
    collisions, identities = [], []
    identity = RatMat.identity(h.n)
    checked = 0
    # depth-first, carrying the partial product
    stack = [((), identity)]
    while stack:
        letters, mat = stack.pop()
        checked += 1
        word = Word(letters, m, inv_order)
        if letters and mat == identity:
            identities.append(word)
        prev = seen.get(mat)
        if prev is not None:
            collisions.append((prev, word))
        else:
            seen[mat] = word
        if len(letters) == max_len:
            continue
        if not letters:
            options = rot + inv
        else:
            options = inv if letters[-1][0] == ROT else rot
        for f, e in options:
            stack.append((letters + ((f, e),), mat @ _letter_matrix(h, f, e, cache)))
    return InjectivityReport(checked, collisions, identities)

"""Signatures, weights and the crystal operators on M(lambda).

``f_op`` moves the leading unpaired box of row i up-left into row i+1 and
``e_op`` moves the trailing unpaired box of row i+1 down-right into row i.
Both are implemented as rewrites of a 2x2 patch of edges: the four interior
edges of the patch flip while its perimeter is untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .ice_model import MINUS, PLUS, IceModel, Sign, from_boxes

# Re-derive every operator image from its box set and compare; disabled under -O.
CROSS_CHECK = __debug__


class LocalPatchError(RuntimeError):
    """The neighbourhood of a movable box does not have the proven shape."""


class Token(NamedTuple):
    kind: str  # "L": box in row i, "R": box in row i+1
    pos: tuple[int, int]


@dataclass(frozen=True)
class ReducedSignature:
    r_tokens: tuple[Token, ...]
    l_tokens: tuple[Token, ...]

    @property
    def r_count(self) -> int:
        return len(self.r_tokens)

    @property
    def l_count(self) -> int:
        return len(self.l_tokens)

    @property
    def first_l(self) -> tuple[int, int] | None:
        return self.l_tokens[0].pos if self.l_tokens else None

    @property
    def last_r(self) -> tuple[int, int] | None:
        return self.r_tokens[-1].pos if self.r_tokens else None

    @property
    def word(self) -> str:
        return "R" * self.r_count + "L" * self.l_count


def _check_color(m: IceModel, i: int) -> None:
    if not 1 <= i <= m.n - 1:
        raise ValueError(f"color {i} out of range 1..{m.n - 1}")


def signature(m: IceModel, i: int) -> list[Token]:
    """Boxes of rows i and i+1 ordered by column, ties broken by row."""
    _check_color(m, i)
    picked = sorted(((q, p) for p, q in m.boxes if p in (i, i + 1)))
    return [Token("L" if p == i else "R", (p, q)) for q, p in picked]


def reduce_signature(word: Sequence[Token] | str) -> ReducedSignature:
    """Cancel ``L R`` pairs until the word reads ``R...R L...L``.

    This is bracket matching with L as an opening and R as a closing bracket.
    Plain strings such as ``"LLR"`` are accepted; their tokens get 1-based
    string positions as a stand-in source.
    """
    if isinstance(word, str):
        word = [Token(ch, (0, k)) for k, ch in enumerate(word, start=1)]
    open_l: list[Token] = []
    lone_r: list[Token] = []
    for tok in word:
        if tok.kind == "L":
            open_l.append(tok)
        elif tok.kind == "R":
            if open_l:
                open_l.pop()
            else:
                lone_r.append(tok)
        else:
            raise ValueError(f"unknown token kind {tok.kind!r}")
    return ReducedSignature(tuple(lone_r), tuple(open_l))


def reduced(m: IceModel, i: int) -> ReducedSignature:
    return reduce_signature(signature(m, i))


# The 2x2 patch on rows i, i+1 and columns c, c+1, as 12 edges in the order
#   row i:    left, middle, right      row i+1:  left, middle, right
#   column c: bottom, middle, top      column c+1: bottom, middle, top
# Letters are free signs that must agree wherever they repeat.
# Box at (i, c+1): the state before f, and after e.
_LOWER_BOX = "g--" "-+b" "g-+" "++b"
# Box at (i+1, c): the state after f, and before e.
_UPPER_BOX = "g+-" "--b" "g++" "+-b"


def _patch_slots(i: int, c: int) -> list[tuple[str, int, int]]:
    slots = []
    for r in (i, i + 1):
        for dc in (0, 1, 2):
            slots.append(("h", r - 1, c - 1 + dc))
    for col in (c, c + 1):
        for dr in (0, 1, 2):
            slots.append(("v", i - 1 + dr, col - 1))
    return slots


def _read(m: IceModel, slot: tuple[str, int, int]) -> Sign:
    grid, a, b = slot
    return (m.h if grid == "h" else m.v)[a][b]


def _rewrite(m: IceModel, i: int, c: int, before: str, after: str) -> IceModel:
    if not (1 <= i < m.n and 1 <= c < m.s):
        raise LocalPatchError(f"patch at rows {i},{i + 1} columns {c},{c + 1} leaves the lattice")
    slots = _patch_slots(i, c)
    bound: dict[str, Sign] = {}
    for sym, slot in zip(before, slots):
        got = _read(m, slot)
        if sym in "+-":
            if got is not Sign(sym):
                raise LocalPatchError(f"patch at rows {i},{i + 1} columns {c},{c + 1}: "
                                      f"edge {slot} is {got}, expected {sym}")
        elif bound.setdefault(sym, got) is not got:
            raise LocalPatchError(f"patch at rows {i},{i + 1} columns {c},{c + 1}: "
                                  f"edges labelled {sym!r} disagree")
    h_changes, v_changes = {}, {}
    for sym, slot in zip(after, slots):
        new = Sign(sym) if sym in "+-" else bound[sym]
        if new is not _read(m, slot):
            (h_changes if slot[0] == "h" else v_changes)[slot[1:]] = new
    return m.with_edges(h_changes, v_changes)


def _cross_check(m: IceModel, new: IceModel, moved_from, moved_to) -> None:
    expected = (m.boxes | {moved_to}) - {moved_from}
    if new.boxes != expected or from_boxes(m.lam, expected) != new:
        raise LocalPatchError(f"local rewrite moving {moved_from}->{moved_to} disagrees "
                              f"with the model rebuilt from its box set")


def f_op(m: IceModel, i: int) -> IceModel | None:
    red = reduced(m, i)
    if not red.l_count:
        return None
    p, q = red.first_l
    new = _rewrite(m, i, q - 1, _LOWER_BOX, _UPPER_BOX)
    if CROSS_CHECK:
        _cross_check(m, new, (p, q), (i + 1, q - 1))
    return new


def e_op(m: IceModel, i: int) -> IceModel | None:
    red = reduced(m, i)
    if not red.r_count:
        return None
    p, q = red.last_r
    new = _rewrite(m, i, q, _UPPER_BOX, _LOWER_BOX)
    if CROSS_CHECK:
        _cross_check(m, new, (p, q), (i, q + 1))
    return new


def epsilon(m: IceModel, i: int) -> int:
    return reduced(m, i).r_count


def phi(m: IceModel, i: int) -> int:
    return reduced(m, i).l_count


@dataclass(frozen=True, eq=False)
class Weight:
    """Per-row box counts, compared modulo the all-ones vector."""

    counts: tuple[int, ...]

    def canonical(self) -> tuple[int, ...]:
        if not self.counts:
            return ()
        last = self.counts[-1]
        return tuple(a - last for a in self.counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Weight):
            return self.canonical() == other.canonical()
        if isinstance(other, (tuple, list)):
            return self == Weight(tuple(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


def simple_root(i: int, n: int) -> Weight:
    """alpha_i = e_i - e_{i+1} as an n-vector."""
    vec = [0] * n
    vec[i - 1], vec[i] = 1, -1
    return Weight(tuple(vec))


def weight(m: IceModel) -> Weight:
    counts = [0] * m.n
    for p, _ in m.boxes:
        counts[p - 1] += 1
    return Weight(tuple(counts))


def pairing(i: int, w: Weight | Iterable[int]) -> int:
    """<h_i, w> = a_i - a_{i+1}."""
    counts = w.counts if isinstance(w, Weight) else tuple(w)
    if not 1 <= i < len(counts):
        raise ValueError(f"color {i} out of range 1..{len(counts) - 1}")
    return counts[i - 1] - counts[i]


__all__ = [
    "CROSS_CHECK", "LocalPatchError", "Token", "ReducedSignature", "Weight",
    "signature", "reduce_signature", "reduced", "f_op", "e_op", "epsilon", "phi",
    "weight", "pairing", "simple_root", "PLUS", "MINUS",
]

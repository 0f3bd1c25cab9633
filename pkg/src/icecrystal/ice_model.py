"""Five-vertex ice models with the boundary conditions attached to a partition.

Rows are numbered from the bottom (row 1) to the top (row n) and columns from
left (1) to right (s).  Edges are stored once, in two grids:

* ``h[r-1][c-1]`` is the left edge of vertex ``(r, c)`` and ``h[r-1][s]`` is
  the right edge of vertex ``(r, s)``;
* ``v[r-1][c-1]`` is the bottom edge of vertex ``(r, c)`` and ``v[n][c-1]`` is
  the top edge of vertex ``(n, c)``.

A vertex's right edge *is* its right neighbour's left edge, so shared-edge
consistency never has to be checked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

BRUTE_FORCE_CAP = 10**6


class InconsistentBoxes(ValueError):
    """The given box set is not the box set of any model in M(lambda)."""


class CapExceeded(RuntimeError):
    """An exhaustive search would exceed its configured size cap."""


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Sign:
        return cls(text)


PLUS, MINUS = Sign.PLUS, Sign.MINUS


class VertexConfig(enum.Enum):
    """The five admissible (left, right, top, bottom) sign patterns."""

    TYPE1 = (PLUS, PLUS, PLUS, PLUS)
    TYPE2_BOX = (MINUS, MINUS, PLUS, PLUS)
    TYPE3 = (MINUS, PLUS, PLUS, MINUS)
    TYPE4 = (PLUS, MINUS, MINUS, PLUS)
    TYPE5 = (MINUS, MINUS, MINUS, MINUS)


_BY_EDGES = {cfg.value: cfg for cfg in VertexConfig}


def classify_vertex(left: Sign, right: Sign, top: Sign, bottom: Sign) -> VertexConfig | None:
    """Return the vertex configuration, or ``None`` for one of the 11 forbidden tuples."""
    return _BY_EDGES.get((left, right, top, bottom))


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("partition needs at least one part")
        if any(not isinstance(p, int) or isinstance(p, bool) or p < 0 for p in parts):
            raise ValueError(f"parts must be nonnegative integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts[-1] != 0:
            raise ValueError(f"last part must be 0: {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,1"`` or ``"2,1,0"``; a trailing zero is appended when missing."""
        try:
            parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
        except ValueError:
            raise ValueError(f"not a comma-separated list of integers: {text!r}") from None
        if not parts or parts[-1] != 0:
            parts.append(0)
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        """Number of columns of the ice models in M(lambda)."""
        return self.parts[0] + self.n

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __getitem__(self, j: int) -> int:
        """1-based part access, ``lam[1]`` is the largest part."""
        return self.parts[j - 1]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def as_partition(lam: Partition | Iterable[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def boundary_top_minus_columns(lam: Partition | Iterable[int]) -> frozenset[int]:
    lam = as_partition(lam)
    return frozenset(lam[1] + j - lam[j] for j in range(1, lam.n + 1))


@dataclass(frozen=True)
class Violation:
    clause: str
    position: tuple[int, int] | None
    detail: str

    def as_dict(self) -> dict:
        return {"clause": self.clause, "position": list(self.position) if self.position else None,
                "detail": self.detail}


@dataclass(frozen=True)
class IceModel:
    lam: Partition
    h: tuple[tuple[Sign, ...], ...]
    v: tuple[tuple[Sign, ...], ...]

    @property
    def n(self) -> int:
        return len(self.h)

    @property
    def s(self) -> int:
        return len(self.v[0]) if self.v else 0

    def vertex_edges(self, i: int, j: int) -> tuple[Sign, Sign, Sign, Sign]:
        """(left, right, top, bottom) around vertex ``(i, j)``, both indices 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.s):
            raise IndexError(f"vertex ({i}, {j}) outside a {self.n}x{self.s} model")
        row = self.h[i - 1]
        return row[j - 1], row[j], self.v[i][j - 1], self.v[i - 1][j - 1]

    def vertex(self, i: int, j: int) -> VertexConfig | None:
        return classify_vertex(*self.vertex_edges(i, j))

    @cached_property
    def boxes(self) -> frozenset[tuple[int, int]]:
        return boxes(self)

    def key(self) -> str:
        return node_key(self.lam, self.boxes)

    def with_edges(self, h_changes: dict, v_changes: dict) -> IceModel:
        """Copy with ``{(row_idx, col_idx): Sign}`` overrides on the raw grids."""
        h = [list(r) for r in self.h]
        v = [list(r) for r in self.v]
        for (a, b), sgn in h_changes.items():
            h[a][b] = sgn
        for (a, b), sgn in v_changes.items():
            v[a][b] = sgn
        return IceModel(self.lam, tuple(map(tuple, h)), tuple(map(tuple, v)))

    def __str__(self) -> str:
        return render(self)


def vertex_edges(m: IceModel, i: int, j: int) -> tuple[Sign, Sign, Sign, Sign]:
    return m.vertex_edges(i, j)


def validate(m: IceModel) -> list[Violation]:
    """Every way ``m`` fails to be an element of M(m.lam); empty means valid."""
    lam = m.lam
    n, s = lam.n, lam.width
    bad = []
    if (len(m.h) != n or any(len(r) != s + 1 for r in m.h)
            or len(m.v) != n + 1 or any(len(r) != s for r in m.v)):
        return [Violation("dimension", None,
                          f"expected {n}x{s} lattice for lambda=({lam}), got "
                          f"h={len(m.h)}x{[len(r) for r in m.h]} v={len(m.v)}x{[len(r) for r in m.v]}")]
    for i in range(1, n + 1):
        for j in range(1, s + 1):
            if m.vertex(i, j) is None:
                edges = "".join(map(str, m.vertex_edges(i, j)))
                bad.append(Violation("vertex", (i, j), f"(left,right,top,bottom)={edges} is not a valid vertex"))
    top_minus = boundary_top_minus_columns(lam)
    for q in range(1, s + 1):
        want = MINUS if q in top_minus else PLUS
        if m.v[n][q - 1] is not want:
            bad.append(Violation("top", (n, q), f"top edge must be {want}"))
    for p in range(1, n + 1):
        if m.h[p - 1][0] is not PLUS:
            bad.append(Violation("left", (p, 1), "left boundary edge must be +"))
    for q in range(1, s + 1):
        if m.v[0][q - 1] is not PLUS:
            bad.append(Violation("bottom", (1, q), "bottom boundary edge must be +"))
    for p in range(1, n + 1):
        if m.h[p - 1][s] is not MINUS:
            bad.append(Violation("right", (p, s), "right boundary edge must be -"))
    return bad


def is_valid(m: IceModel) -> bool:
    return not validate(m)


def boxes(m: IceModel) -> frozenset[tuple[int, int]]:
    """The boxing map: positions of all type-2 vertices."""
    return frozenset(
        (i, j)
        for i in range(1, m.n + 1)
        for j in range(1, m.s + 1)
        if m.vertex_edges(i, j) == VertexConfig.TYPE2_BOX.value
    )


def node_key(lam: Partition, box_set: Iterable[tuple[int, int]]) -> str:
    """Canonical, order-independent key: partition plus sorted box positions."""
    return f"{lam}|" + ";".join(f"{p}.{q}" for p, q in sorted(box_set))


def _sweep(lam: Partition, box_set: frozenset) -> tuple[list[list[bool]], list[list[bool]]]:
    # True encodes +.  Each non-box vertex is determined by its right and bottom
    # edges: left = bottom, top = right.
    n, s = lam.n, lam.width
    h = [[False] * (s + 1) for _ in range(n)]
    v = [[True] * s for _ in range(n + 1)]
    for p in range(n):
        h[p][s] = False
    for q in range(s, 0, -1):
        for p in range(1, n + 1):
            right = h[p - 1][q]
            bottom = v[p - 1][q - 1]
            if (p, q) in box_set:
                if right or not bottom:
                    raise InconsistentBoxes(
                        f"vertex ({p}, {q}) has right={'+' if right else '-'}, "
                        f"bottom={'+' if bottom else '-'}; a box needs (-, +)")
                h[p - 1][q - 1] = False
                v[p][q - 1] = True
            else:
                h[p - 1][q - 1] = bottom
                v[p][q - 1] = right
    return h, v


def from_boxes(lam: Partition | Iterable[int], box_set: Iterable[tuple[int, int]]) -> IceModel:
    """Rebuild the unique model of M(lam) whose boxes are ``box_set``.

    Raises InconsistentBoxes when no such model exists.
    """
    lam = as_partition(lam)
    box_set = frozenset(tuple(b) for b in box_set)
    n, s = lam.n, lam.width
    for p, q in box_set:
        if not (1 <= p <= n and 1 <= q <= s):
            raise ValueError(f"box ({p}, {q}) outside the {n}x{s} grid")
    h, v = _sweep(lam, box_set)
    for p in range(n):
        if not h[p][0]:
            raise InconsistentBoxes(f"left boundary edge of row {p + 1} comes out -")
    top_minus = boundary_top_minus_columns(lam)
    for q in range(1, s + 1):
        if v[n][q - 1] == (q in top_minus):
            raise InconsistentBoxes(f"top boundary edge of column {q} does not match lambda")
    to_sign = {True: PLUS, False: MINUS}
    return IceModel(
        lam,
        tuple(tuple(to_sign[x] for x in row) for row in h),
        tuple(tuple(to_sign[x] for x in row) for row in v),
    )


def brute_force_enumerate(lam: Partition | Iterable[int], cap: int = BRUTE_FORCE_CAP) -> list[IceModel]:
    """All of M(lam), by trying every box set of size |lam| on the full grid."""
    lam = as_partition(lam)
    n, s = lam.n, lam.width
    cells = [(p, q) for p in range(1, n + 1) for q in range(1, s + 1)]
    total = comb(len(cells), lam.size)
    if total > cap:
        raise CapExceeded(f"{total} candidate box sets for lambda=({lam}) exceeds cap {cap}")
    found = []
    for combo in combinations(cells, lam.size):
        try:
            found.append(from_boxes(lam, combo))
        except InconsistentBoxes:
            continue
    return found


def brute_force_size(lam: Partition | Iterable[int]) -> int:
    lam = as_partition(lam)
    return comb(lam.n * lam.width, lam.size)


def to_dict(m: IceModel) -> dict:
    return {
        "n": m.n,
        "lambda": list(m.lam.parts),
        "row_order": "bottom_up",
        "h_edges": [[str(x) for x in row] for row in m.h],
        "v_edges": [[str(x) for x in row] for row in m.v],
    }


def from_dict(data: dict) -> IceModel:
    if data.get("row_order") != "bottom_up":
        raise ValueError(f"unsupported row_order {data.get('row_order')!r}; expected 'bottom_up'")
    lam = Partition(tuple(data["lambda"]))
    if data["n"] != lam.n:
        raise ValueError(f"n={data['n']} disagrees with len(lambda)={lam.n}")
    h = tuple(tuple(Sign.parse(x) for x in row) for row in data["h_edges"])
    v = tuple(tuple(Sign.parse(x) for x in row) for row in data["v_edges"])
    return IceModel(lam, h, v)


def render(m: IceModel) -> str:
    """ASCII picture, top row first; ``#`` marks a box, ``o`` any other vertex."""

    def edge_row(r: int) -> str:
        return "     " + "   ".join(str(x) for x in m.v[r])

    lines = [edge_row(m.n)]
    for i in range(m.n, 0, -1):
        cells = [str(m.h[i - 1][0])]
        for j in range(1, m.s + 1):
            cells.append("#" if m.vertex(i, j) is VertexConfig.TYPE2_BOX else "o")
            cells.append(str(m.h[i - 1][j]))
        lines.append(f"{i:>2} " + " ".join(cells))
        lines.append(edge_row(i - 1))
    return "\n".join(lines)

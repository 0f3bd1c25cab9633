"""Semistandard tableaux as an independent model of B(lambda).

Tableaux are tuples of rows in English notation (longest row first).  The
crystal operators use the row reading word, taken from the bottom row up,
each row left to right.  Letters i are marked ``+`` and letters i+1 ``-``;
pairs ``- +`` cancel, leaving ``+...+ -...-``.  f_i raises the rightmost
surviving ``+`` to i+1 and e_i lowers the leftmost surviving ``-`` to i.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .crystal_graph import CrystalGraph, Edge
from .crystal_ops import Weight
from .ice_model import CapExceeded, Partition, as_partition

Tableau = tuple[tuple[int, ...], ...]

SSYT_CAP = 10**6


def shape_of(lam: Partition | Iterable[int]) -> tuple[int, ...]:
    return tuple(p for p in as_partition(lam).parts if p > 0)


def is_semistandard(t: Tableau, n: int) -> bool:
    for r, row in enumerate(t):
        if any(not 1 <= x <= n for x in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r and (len(row) > len(t[r - 1]) or any(row[c] <= t[r - 1][c] for c in range(len(row)))):
            return False
    return True


def enumerate_ssyt(lam: Partition | Iterable[int], n: int, cap: int = SSYT_CAP) -> list[Tableau]:
    """All semistandard tableaux of shape lam with entries in 1..n, filled cell by cell."""
    shape = shape_of(lam)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    found: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            if len(found) >= cap:
                raise CapExceeded(f"more than {cap} tableaux of shape {shape}")
            found.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[k]
        low = 1
        if c:
            low = grid[r][c - 1]
        if r:
            low = max(low, grid[r - 1][c] + 1)
        # Room is needed below this cell for strictly increasing entries.
        below = sum(1 for length in shape[r + 1:] if length > c)
        for x in range(low, n - below + 1):
            grid[r][c] = x
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return found


def dimension(lam: Partition | Iterable[int], n: int | None = None) -> int:
    """Weyl dimension prod_{i<j} (lam_i - lam_j + j - i) / (j - i), in exact integers."""
    parts = list(lam.parts) if isinstance(lam, Partition) else list(lam)
    n = len(parts) if n is None else n
    parts = (parts + [0] * n)[:n]
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    return num // den


def reading_word(t: Tableau) -> list[tuple[int, int, int]]:
    """(letter, row, column) from the bottom row up, each row left to right."""
    return [(x, r, c) for r in range(len(t) - 1, -1, -1) for c, x in enumerate(t[r])]


def _unpaired(t: Tableau, i: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    plus: list[tuple[int, int]] = []
    minus: list[tuple[int, int]] = []
    for x, r, c in reading_word(t):
        if x == i + 1:
            minus.append((r, c))
        elif x == i:
            if minus:
                minus.pop()
            else:
                plus.append((r, c))
    return plus, minus


def _replace(t: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    r, c = cell
    rows = [list(row) for row in t]
    rows[r][c] = value
    return tuple(tuple(row) for row in rows)


def tableau_f(t: Tableau, i: int) -> Tableau | None:
    plus, _ = _unpaired(t, i)
    return _replace(t, plus[-1], i + 1) if plus else None


def tableau_e(t: Tableau, i: int) -> Tableau | None:
    _, minus = _unpaired(t, i)
    return _replace(t, minus[0], i) if minus else None


def tableau_key(t: Tableau) -> str:
    return "/".join(",".join(map(str, row)) for row in t) or "empty"


def content(t: Tableau, n: int) -> Weight:
    counts = [0] * n
    for row in t:
        for x in row:
            counts[x - 1] += 1
    return Weight(tuple(counts))


def tableau_crystal(lam: Partition | Iterable[int], n: int | None = None,
                    cap: int = SSYT_CAP) -> CrystalGraph:
    lam = as_partition(lam)
    n = lam.n if n is None else n
    if n != lam.n:
        lam = Partition(tuple((list(shape_of(lam)) + [0] * n)[:n]))
    tableaux = enumerate_ssyt(lam, n, cap=cap)
    keys = {t: tableau_key(t) for t in tableaux}
    edges: list[Edge] = []
    e_edges: list[Edge] = []
    for t in tableaux:
        for i in range(1, n):
            down = tableau_f(t, i)
            if down is not None:
                if not is_semistandard(down, n):
                    raise RuntimeError(f"f_{i} of {keys[t]} is not semistandard")
                edges.append((keys[t], i, keys[down]))
            up = tableau_e(t, i)
            if up is not None:
                if not is_semistandard(up, n):
                    raise RuntimeError(f"e_{i} of {keys[t]} is not semistandard")
                e_edges.append((keys[t], i, keys[up]))
    return CrystalGraph(
        lam=lam,
        nodes={keys[t]: content(t, n) for t in tableaux},
        edges=edges,
        payload={keys[t]: t for t in tableaux},
        e_edges=e_edges,
    )


@dataclass
class IsoResult:
    isomorphic: bool
    witness: str | None = None
    mapping: dict[str, str] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def crystal_isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> IsoResult:
    """Color- and weight-preserving isomorphism forced from the unique sources.

    With at most one i-edge in and out of every node the image of each
    neighbour is determined, so a breadth-first propagation either builds the
    isomorphism or finds the first place it breaks.
    """
    if len(g1.nodes) != len(g2.nodes):
        return IsoResult(False, f"node counts differ: {len(g1.nodes)} vs {len(g2.nodes)}")
    if len(g1.edges) != len(g2.edges):
        return IsoResult(False, f"edge counts differ: {len(g1.edges)} vs {len(g2.edges)}")
    if g1.n != g2.n:
        return IsoResult(False, f"different color sets: rank {g1.n - 1} vs {g2.n - 1}")
    s1, s2 = g1.sources(), g2.sources()
    if len(s1) != 1 or len(s2) != 1:
        return IsoResult(False, f"need exactly one source on each side, found {len(s1)} and {len(s2)}")

    # Walk edges only, so a separately recorded e-map cannot mask a broken f-edge.
    def walk(g: CrystalGraph):
        down: dict[tuple[str, int], str] = {}
        up: dict[tuple[str, int], str] = {}
        for a, i, b in g.edges:
            down.setdefault((a, i), b)
            up.setdefault((b, i), a)
        return down, up

    (f1, e1), (f2, e2) = walk(g1), walk(g2)
    fwd = {s1[0]: s2[0]}
    back = {s2[0]: s1[0]}
    queue = deque([s1[0]])
    while queue:
        a = queue.popleft()
        b = fwd[a]
        if g1.nodes[a] != g2.nodes[b]:
            return IsoResult(False, f"weights differ at {a} -> {b}: "
                                    f"{g1.nodes[a].canonical()} vs {g2.nodes[b].canonical()}")
        for i in g1.colors:
            for name, m1, m2 in (("f", f1, f2), ("e", e1, e2)):
                x, y = m1.get((a, i)), m2.get((b, i))
                if (x is None) != (y is None):
                    return IsoResult(False, f"{name}_{i} defined on one side only at {a} -> {b}")
                if x is None:
                    continue
                if x in fwd:
                    if fwd[x] != y:
                        return IsoResult(False, f"{name}_{i} of {a} forces {x} -> {y}, "
                                                f"already mapped to {fwd[x]}")
                    continue
                if y in back:
                    return IsoResult(False, f"not injective: {x} and {back[y]} both map to {y}")
                fwd[x], back[y] = y, x
                queue.append(x)
    if len(fwd) != len(g1.nodes):
        missing = sorted(set(g1.nodes) - set(fwd))[0]
        return IsoResult(False, f"propagation never reaches {missing}")
    image = sorted((fwd[a], i, fwd[b]) for a, i, b in g1.edges)
    if image != sorted(g2.edges):
        return IsoResult(False, "edge multisets differ under the propagated map")
    return IsoResult(True, None, fwd)

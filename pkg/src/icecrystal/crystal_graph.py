"""The crystal graph of M(lambda): generation, highest weights and audits."""

from __future__ import annotations

import logging
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Iterable

from .crystal_ops import Weight, e_op, f_op, pairing, simple_root, weight
from .ice_model import (
    MINUS,
    CapExceeded,
    IceModel,
    Partition,
    as_partition,
    boundary_top_minus_columns,
    from_boxes,
)

log = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 10**5


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    raw = os.environ.get("ICE_CRYSTAL_NODE_CAP")
    return int(raw) if raw else default


Edge = tuple[str, int, str]


@dataclass
class CrystalGraph:
    """Finite edge-coloured digraph; an edge ``(a, i, b)`` means ``f_i(a) = b``.

    ``e_edges`` optionally records the raising operator separately (as
    ``(a, i, b)`` meaning ``e_i(a) = b``).  When it is ``None`` the raising
    operator is read off ``edges`` backwards.
    """

    lam: Partition
    nodes: dict[str, Weight]
    edges: list[Edge]
    payload: dict[str, Any] = field(default_factory=dict)
    e_edges: list[Edge] | None = None

    def __post_init__(self):
        self._f = None
        self._e = None

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def colors(self) -> range:
        return range(1, self.lam.n)

    def _maps(self):
        if self._f is None:
            f, e = {}, {}
            for a, i, b in self.edges:
                f.setdefault((a, i), b)
            for a, i, b in (self.e_edges if self.e_edges is not None else
                            [(b, i, a) for a, i, b in self.edges]):
                e.setdefault((a, i), b)
            self._f, self._e = f, e
        return self._f, self._e

    def invalidate(self) -> None:
        self._f = self._e = None

    def f(self, key: str | None, i: int) -> str | None:
        return None if key is None else self._maps()[0].get((key, i))

    def e(self, key: str | None, i: int) -> str | None:
        return None if key is None else self._maps()[1].get((key, i))

    def sources(self) -> list[str]:
        """Nodes without incoming f-edges of any color."""
        targets = {b for _, _, b in self.edges}
        return sorted(k for k in self.nodes if k not in targets)

    def weight(self, key: str) -> Weight:
        return self.nodes[key]

    def copy(self) -> CrystalGraph:
        return CrystalGraph(self.lam, dict(self.nodes), list(self.edges), dict(self.payload),
                            None if self.e_edges is None else list(self.e_edges))


def highest_weight_boxes(lam: Partition | Iterable[int]) -> frozenset[tuple[int, int]]:
    """Right-flushed stairs: lam_i boxes at the right end of row i."""
    lam = as_partition(lam)
    s = lam.width
    return frozenset((i, q) for i in range(1, lam.n + 1) for q in range(s - lam[i] + 1, s + 1))


def highest_weight_model(lam: Partition | Iterable[int]) -> IceModel:
    return from_boxes(lam, highest_weight_boxes(lam))


def generate(lam: Partition | Iterable[int], node_cap: int | None = None) -> CrystalGraph:
    """Breadth-first closure of the highest weight model under every f_i."""
    lam = as_partition(lam)
    cap = node_cap_from_env() if node_cap is None else node_cap
    top = highest_weight_model(lam)
    models = {top.key(): top}
    edges: list[Edge] = []
    queue = deque([top])
    while queue:
        m = queue.popleft()
        src = m.key()
        for i in range(1, lam.n):
            image = f_op(m, i)
            if image is None:
                continue
            dst = image.key()
            if dst not in models:
                if len(models) >= cap:
                    raise CapExceeded(f"crystal of lambda=({lam}) exceeds node cap {cap}")
                models[dst] = image
                queue.append(image)
            edges.append((src, i, dst))

    # e-images are recorded independently; they must all land inside the graph.
    e_edges: list[Edge] = []
    for key, m in models.items():
        for i in range(1, lam.n):
            image = e_op(m, i)
            if image is None:
                continue
            dst = image.key()
            if dst not in models:
                raise RuntimeError(f"e_{i} of {key} leaves the f-closure: {dst}")
            e_edges.append((key, i, dst))

    log.debug("lambda=(%s): %d nodes, %d edges", lam, len(models), len(edges))
    return CrystalGraph(
        lam=lam,
        nodes={k: weight(m) for k, m in models.items()},
        edges=edges,
        payload=models,
        e_edges=e_edges,
    )


def find_highest_weights(g: CrystalGraph) -> list[str]:
    return g.sources()


@dataclass
class Report:
    """Violations grouped by clause; ``ok`` when every clause is empty."""

    clauses: dict[str, list[str]]

    @property
    def ok(self) -> bool:
        return not any(self.clauses.values())

    def failures(self) -> dict[str, list[str]]:
        return {k: v for k, v in self.clauses.items() if v}


def verify_staircase(m: IceModel) -> Report:
    """Check the staircase shape forced on a highest weight model.

    Clauses: ``a`` row-wise thresholds, ``b`` thresholds weakly increase going
    up, ``c`` every box (p, q) has q >= n - p + 2, ``d`` a diagonal of minus
    top-edges runs from each stair to the top row, ``e`` stairs biject with the
    top boundary minuses.  Stairs of length zero take part in ``d`` and ``e``.
    """
    n, s = m.n, m.s
    box_set = m.boxes
    out: dict[str, list[str]] = {c: [] for c in "abcde"}

    thresholds = {}
    for p in range(1, n + 1):
        cols = sorted(q for r, q in box_set if r == p)
        qp = cols[0] - 1 if cols else s
        thresholds[p] = qp
        if cols != list(range(qp + 1, s + 1)):
            out["a"].append(f"row {p}: boxes at columns {cols} are not a right-flushed run")

    for p in range(2, n + 1):
        if thresholds[p - 1] > thresholds[p]:
            out["b"].append(f"q_{p - 1}={thresholds[p - 1]} > q_{p}={thresholds[p]}")

    for p, q in sorted(box_set):
        if q < n - p + 2:
            out["c"].append(f"box ({p}, {q}) has q < n - p + 2 = {n - p + 2}")

    ends = {}
    for p in range(1, n + 1):
        qp = thresholds[p]
        for k in range(0, n - p + 1):
            col = qp - k
            if col < 1:
                out["d"].append(f"stair {p}: diagonal leaves the lattice at row {p + k}")
                break
            if m.v[p + k][col - 1] is not MINUS:
                out["d"].append(f"stair {p}: top edge of ({p + k}, {col}) is +")
                break
        else:
            ends[p] = qp - (n - p)

    top_minus = boundary_top_minus_columns(m.lam)
    if len(ends) == n:
        if len(set(ends.values())) != n:
            out["e"].append(f"two stairs reach the same top column: {ends}")
        elif set(ends.values()) != set(top_minus):
            out["e"].append(f"stairs reach top columns {sorted(ends.values())}, "
                            f"boundary minuses are at {sorted(top_minus)}")
    else:
        out["e"].append("some diagonal does not reach the top row")
    return Report(out)


def string_lengths(g: CrystalGraph, key: str, i: int) -> tuple[int, int] | None:
    """(epsilon_i, phi_i) as path lengths; ``None`` if the i-string loops."""
    lengths = []
    for step in (g.e, g.f):
        seen = {key}
        cur, k = step(key, i), 0
        while cur is not None:
            if cur in seen:
                return None
            seen.add(cur)
            k += 1
            cur = step(cur, i)
        lengths.append(k)
    return lengths[0], lengths[1]


@dataclass(frozen=True)
class AxiomViolation:
    node: str
    color: int
    clause: str
    detail: str

    def as_dict(self) -> dict:
        return {"node": self.node, "color": self.color, "clause": self.clause, "detail": self.detail}


def check_axioms_C1_C6(g: CrystalGraph) -> list[AxiomViolation]:
    """Evaluate the six crystal axioms at every node and color.

    epsilon/phi are lengths of the e- and f-strings through each node.
    """
    bad = []
    stats = {}
    for b in g.nodes:
        for i in g.colors:
            st = string_lengths(g, b, i)
            if st is None:
                bad.append(AxiomViolation(b, i, "structure", "i-string is a cycle"))
            stats[b, i] = st
    if bad:
        return bad

    def viol(b, i, clause, detail):
        bad.append(AxiomViolation(b, i, clause, detail))

    for b, wt in g.nodes.items():
        for i in g.colors:
            eps, ph = stats[b, i]
            if ph != eps + pairing(i, wt):
                viol(b, i, "C1", f"phi={ph} != eps={eps} + <h_i, wt>={pairing(i, wt)}")
            alpha = simple_root(i, g.n)
            up, down = g.e(b, i), g.f(b, i)
            if up is not None:
                if g.nodes[up] != wt + alpha:
                    viol(b, i, "C2", f"wt(e_i b)={g.nodes[up].counts} != wt(b)+alpha_i")
                if stats[up, i] != (eps - 1, ph + 1):
                    viol(b, i, "C4", f"(eps, phi) at e_i b is {stats[up, i]}, expected {(eps - 1, ph + 1)}")
                if g.f(up, i) != b:
                    viol(b, i, "C6", f"e_i b = {up} but f_i of it is {g.f(up, i)}")
            if down is not None:
                if g.nodes[down] != wt - alpha:
                    viol(b, i, "C3", f"wt(f_i b)={g.nodes[down].counts} != wt(b)-alpha_i")
                if stats[down, i] != (eps + 1, ph - 1):
                    viol(b, i, "C5", f"(eps, phi) at f_i b is {stats[down, i]}, expected {(eps + 1, ph - 1)}")
                if g.e(down, i) != b:
                    viol(b, i, "C6", f"f_i b = {down} but e_i of it is {g.e(down, i)}")
    return bad


def character(g: CrystalGraph) -> Counter:
    """Multiset of canonical node weights."""
    return Counter(w.canonical() for w in g.nodes.values())


def is_weakly_connected(g: CrystalGraph) -> bool:
    if not g.nodes:
        return True
    adj: dict[str, set[str]] = {k: set() for k in g.nodes}
    for a, _, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    start = next(iter(g.nodes))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(g.nodes)

"""Stembridge's local axioms for regular crystals of type A.

Works on any :class:`CrystalGraph`, reading only its colored f-edges; node
weights and payloads are ignored.  For a node b and colors i, j::

    d_phi = phi_j(e_i b) - phi_j(b)      d_eps = eps_j(b) - eps_j(e_i b)
    n_phi = phi_j(b) - phi_j(f_i b)      n_eps = eps_j(f_i b) - eps_j(b)
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .crystal_graph import CrystalGraph


@dataclass(frozen=True)
class CartanA:
    rank: int

    def entry(self, i: int, j: int) -> int:
        return 2 * (i == j) - (i + 1 == j) - (i == j + 1)

    def matrix(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.rank + 1)] for i in range(1, self.rank + 1)]


@dataclass(frozen=True)
class LocalQuantities:
    d_phi: int | None = None
    d_eps: int | None = None
    n_phi: int | None = None
    n_eps: int | None = None


@dataclass(frozen=True)
class RegularityViolation:
    axiom: str
    node: str | None
    colors: tuple[int, ...]
    detail: str

    def as_dict(self) -> dict:
        return {"axiom": self.axiom, "node": self.node, "colors": list(self.colors), "detail": self.detail}


@dataclass
class RegularityReport:
    violations: list[RegularityViolation] = field(default_factory=list)
    notices: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> Counter:
        return Counter(v.axiom for v in self.violations)


def _edges_only(g: CrystalGraph) -> CrystalGraph:
    if g.e_edges is None:
        return g
    return CrystalGraph(g.lam, g.nodes, g.edges)


def path_stats(g: CrystalGraph, b: str, i: int) -> tuple[int, int]:
    """(epsilon_i(b), phi_i(b)): steps to the head and to the tail of b's i-string.

    Assumes the i-colored subgraph is a disjoint union of paths, which
    :func:`verify_regular` establishes before calling this.
    """
    g = _edges_only(g)
    eps = 0
    cur = g.e(b, i)
    while cur is not None:
        eps += 1
        cur = g.e(cur, i)
    ph = 0
    cur = g.f(b, i)
    while cur is not None:
        ph += 1
        cur = g.f(cur, i)
    return eps, ph


class _Stats:
    def __init__(self, g: CrystalGraph):
        self.g = g
        self.cache: dict[tuple[str, int], tuple[int, int]] = {}

    def eps(self, b: str, j: int) -> int:
        return self.get(b, j)[0]

    def phi(self, b: str, j: int) -> int:
        return self.get(b, j)[1]

    def get(self, b, j):
        if (b, j) not in self.cache:
            self.cache[b, j] = path_stats(self.g, b, j)
        return self.cache[b, j]


def _local(st: _Stats, b: str, i: int, j: int) -> LocalQuantities:
    g = st.g
    up, down = g.e(b, i), g.f(b, i)
    d_phi = d_eps = n_phi = n_eps = None
    if up is not None:
        d_phi = st.phi(up, j) - st.phi(b, j)
        d_eps = st.eps(b, j) - st.eps(up, j)
    if down is not None:
        n_phi = st.phi(b, j) - st.phi(down, j)
        n_eps = st.eps(down, j) - st.eps(b, j)
    return LocalQuantities(d_phi, d_eps, n_phi, n_eps)


def local_quantities(g: CrystalGraph, b: str, i: int, j: int) -> LocalQuantities:
    return _local(_Stats(_edges_only(g)), b, i, j)


def _structure(g: CrystalGraph) -> list[RegularityViolation]:
    bad = []
    out_deg, in_deg = Counter(), Counter()
    for a, i, b in g.edges:
        out_deg[a, i] += 1
        in_deg[b, i] += 1
    for (a, i), k in sorted(out_deg.items()):
        if k > 1:
            bad.append(RegularityViolation("R2", a, (i,), f"{k} outgoing {i}-edges"))
    for (b, i), k in sorted(in_deg.items()):
        if k > 1:
            bad.append(RegularityViolation("R2", b, (i,), f"{k} incoming {i}-edges"))

    # R1 via Kahn's algorithm on each monochromatic subgraph.
    by_color: dict[int, list[tuple[str, str]]] = defaultdict(list)
    for a, i, b in g.edges:
        by_color[i].append((a, b))
    for i, pairs in sorted(by_color.items()):
        indeg = Counter(b for _, b in pairs)
        succ = defaultdict(list)
        for a, b in pairs:
            succ[a].append(b)
        ready = [v for v in {x for p in pairs for x in p} if indeg[v] == 0]
        while ready:
            v = ready.pop()
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        remaining = sorted(v for v in {x for p in pairs for x in p} if indeg[v] > 0)
        if remaining:
            bad.append(RegularityViolation("R1", remaining[0], (i,),
                                           f"{len(remaining)} nodes lie on or after an {i}-colored cycle"))
    return bad


def verify_regular(g: CrystalGraph, cartan: CartanA | None = None) -> RegularityReport:
    """Check R1-R6 and R5'-R6' at every node and every ordered pair of colors."""
    cartan = cartan or CartanA(g.n - 1)
    g = _edges_only(g)
    report = RegularityReport()
    report.violations.extend(_structure(g))
    if report.violations:
        report.notices.append("R1/R2 failed; string lengths are ill-defined, R3-R6' skipped")
        return report

    st = _Stats(g)
    e, f = g.e, g.f
    colors = list(g.colors)

    def viol(axiom, b, i, j, detail):
        report.violations.append(RegularityViolation(axiom, b, (i, j), detail))

    for b in sorted(g.nodes):
        for i in colors:
            for j in colors:
                if i == j:
                    continue
                q = _local(st, b, i, j)
                if q.d_phi is not None:
                    if q.d_phi + q.d_eps != cartan.entry(i, j):
                        viol("R3", b, i, j, f"d_phi + d_eps = {q.d_phi + q.d_eps}, "
                                            f"expected {cartan.entry(i, j)}")
                    if q.d_phi > 0 or q.d_eps > 0:
                        viol("R4", b, i, j, f"d_phi={q.d_phi}, d_eps={q.d_eps}")

                if e(b, i) is not None and e(b, j) is not None:
                    q_ji = _local(st, b, j, i)
                    if q.d_eps == 0:
                        y1, y2 = e(e(b, j), i), e(e(b, i), j)
                        if y1 is None or y1 != y2:
                            viol("R5", b, i, j, f"e_i e_j b = {y1} but e_j e_i b = {y2}")
                        elif _local(st, y1, j, i).n_phi != 0:
                            viol("R5", b, i, j, "nabla_j phi_i(y) != 0")
                    if q.d_eps == -1 and q_ji.d_eps == -1:
                        y1 = e(e(e(e(b, i), j), j), i)
                        y2 = e(e(e(e(b, j), i), i), j)
                        if y1 is None or y1 != y2:
                            viol("R6", b, i, j, f"e_i e_j^2 e_i b = {y1} but e_j e_i^2 e_j b = {y2}")
                        elif _local(st, y1, i, j).n_phi != -1 or _local(st, y1, j, i).n_phi != -1:
                            viol("R6", b, i, j, "nabla phi at y is not -1")

                if f(b, i) is not None and f(b, j) is not None:
                    q_ji = _local(st, b, j, i)
                    if q.n_phi == 0:
                        y1, y2 = f(f(b, j), i), f(f(b, i), j)
                        if y1 is None or y1 != y2:
                            viol("R5'", b, i, j, f"f_i f_j b = {y1} but f_j f_i b = {y2}")
                        elif _local(st, y1, j, i).d_eps != 0:
                            viol("R5'", b, i, j, "delta_j eps_i(y) != 0")
                    if q.n_phi == -1 and q_ji.n_phi == -1:
                        y1 = f(f(f(f(b, i), j), j), i)
                        y2 = f(f(f(f(b, j), i), i), j)
                        if y1 is None or y1 != y2:
                            viol("R6'", b, i, j, f"f_i f_j^2 f_i b = {y1} but f_j f_i^2 f_j b = {y2}")
                        elif _local(st, y1, i, j).d_eps != -1 or _local(st, y1, j, i).d_eps != -1:
                            viol("R6'", b, i, j, "delta eps at y is not -1")
    return report

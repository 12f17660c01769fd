"""Bipartite graphs with bitset rows.

Left vertex ``u`` has neighbourhood ``rows[u]``, an int whose bit ``v`` is set
iff ``{u, v}`` is an edge.  Graphs are immutable values.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable

from c4free.errors import FormatError, SizeMismatch


@dataclass(frozen=True)
class BiGraph:
    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("part sizes must be non-negative")
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise ValueError("row has bits outside the right part")

    @classmethod
    def from_edges(cls, m: int, n: int, edges: Iterable[tuple[int, int]]) -> "BiGraph":
        rows = [0] * m
        for u, v in edges:
            if not (0 <= u < m and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
        return cls(m, n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "BiGraph":
        matrix = [list(r) for r in matrix]
        m = len(matrix)
        n = len(matrix[0]) if m else 0
        rows = []
        for r in matrix:
            if len(r) != n:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << v for v, x in enumerate(r) if x))
        return cls(m, n, tuple(rows))

    @classmethod
    def complete(cls, m: int, n: int) -> "BiGraph":
        return cls(m, n, tuple([(1 << n) - 1] * m))

    @classmethod
    def empty(cls, m: int, n: int) -> "BiGraph":
        return cls(m, n, (0,) * m)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, r in enumerate(self.rows) for v in range(self.n) if r >> v & 1]

    def columns(self) -> tuple[int, ...]:
        """Right-side neighbourhoods as bitsets over the left part."""
        cols = [0] * self.n
        for u, r in enumerate(self.rows):
            v = 0
            while r:
                if r & 1:
                    cols[v] |= 1 << u
                r >>= 1
                v += 1
        return tuple(cols)

    def transpose(self) -> "BiGraph":
        return BiGraph(self.n, self.m, self.columns())

    def degrees(self, side: str = "L") -> list[int]:
        if side == "L":
            return [r.bit_count() for r in self.rows]
        if side == "R":
            return [c.bit_count() for c in self.columns()]
        raise ValueError("side must be 'L' or 'R'")

    def induced(self, left: Iterable[int], right: Iterable[int]) -> "BiGraph":
        """Subgraph induced on the given vertices, renumbered in the given order."""
        left, right = list(left), list(right)
        rows = []
        for u in left:
            r = self.rows[u]
            rows.append(sum(1 << j for j, v in enumerate(right) if r >> v & 1))
        return BiGraph(len(left), len(right), tuple(rows))

    def to_matrix(self) -> list[list[int]]:
        return [[r >> v & 1 for v in range(self.n)] for r in self.rows]

    def to_text(self) -> str:
        return format_graph(self)


def is_c4_free(g: BiGraph) -> bool:
    rows = g.rows
    for i in range(g.m):
        ri = rows[i]
        for j in range(i + 1, g.m):
            if (ri & rows[j]).bit_count() >= 2:
                return False
    return True


def count_lrl_paths(g: BiGraph) -> int:
    return sum(comb(d, 2) for d in g.degrees("R"))


def degree_multiset(g: BiGraph, side: str = "L") -> dict[int, int]:
    return dict(sorted(Counter(g.degrees(side)).items()))


# -- text format ------------------------------------------------------------

def format_graph(g: BiGraph) -> str:
    lines = [f"{g.m} {g.n}"]
    for r in g.rows:
        lines.append("".join("1" if r >> v & 1 else "0" for v in range(g.n)))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> BiGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty graph file", line=1)
    head = lines[0].split(" ")
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise FormatError(f"bad header {lines[0]!r}, expected 'm n'", line=1)
    m, n = int(head[0]), int(head[1])
    if len(lines) != m + 1:
        raise FormatError(f"expected {m} rows, found {len(lines) - 1}", line=len(lines))
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if len(line) != n or set(line) - {"0", "1"}:
            raise FormatError(f"row must be exactly {n} characters from {{0,1}}", line=i)
        rows.append(sum(1 << v for v, ch in enumerate(line) if ch == "1"))
    return BiGraph(m, n, tuple(rows))


# -- isomorphism ------------------------------------------------------------

def _refine(rows_list, cols_list):
    """Joint colour refinement on a list of graphs; returns per-graph vertex colours.

    Colours are comparable across graphs, so they constrain any isomorphism.
    """
    lcol = [[r.bit_count() for r in rows] for rows in rows_list]
    rcol = [[c.bit_count() for c in cols] for cols in cols_list]
    lcol = [[("L", x) for x in lc] for lc in lcol]
    rcol = [[("R", x) for x in rc] for rc in rcol]
    while True:
        sigs_l = []
        for gi, rows in enumerate(rows_list):
            sigs_l.append([
                (lcol[gi][u], tuple(sorted(rcol[gi][v] for v in _bits(r))))
                for u, r in enumerate(rows)
            ])
        sigs_r = []
        for gi, cols in enumerate(cols_list):
            sigs_r.append([
                (rcol[gi][v], tuple(sorted(lcol[gi][u] for u in _bits(c))))
                for v, c in enumerate(cols)
            ])
        palette = {s: i for i, s in enumerate(sorted({s for sl in sigs_l + sigs_r for s in sl}))}
        new_l = [[("L", palette[s]) for s in sl] for sl in sigs_l]
        new_r = [[("R", palette[s]) for s in sr] for sr in sigs_r]
        n_old = len({c for lc in lcol + rcol for c in lc})
        n_new = len({c for lc in new_l + new_r for c in lc})
        lcol, rcol = new_l, new_r
        if n_new == n_old:
            return lcol, rcol


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _perfect_matching(cands: list[int], size: int) -> bool:
    match_of = [-1] * size

    def augment(v, seen):
        for w in _bits(cands[v]):
            if seen >> w & 1:
                continue
            seen |= 1 << w
            if match_of[w] == -1:
                match_of[w] = v
                return True, seen
            ok, seen = augment(match_of[w], seen)
            if ok:
                match_of[w] = v
                return True, seen
        return False, seen

    for v in range(len(cands)):
        ok, _ = augment(v, 0)
        if not ok:
            return False
    return True


def _iso_same_orientation(g: BiGraph, h: BiGraph) -> bool:
    if (g.m, g.n) != (h.m, h.n):
        return False
    if g.edge_count != h.edge_count:
        return False
    gc, hc = g.columns(), h.columns()
    (gl, hl), (gr, hr) = _refine([g.rows, h.rows], [gc, hc])
    if sorted(gl) != sorted(hl) or sorted(gr) != sorted(hr):
        return False

    m, n = g.m, g.n
    full_r = (1 << n) - 1
    # candidate images of each g-vertex, restricted to equal refined colour
    lcands = [sum(1 << x for x in range(m) if hl[x] == gl[u]) for u in range(m)]
    rcands0 = [sum(1 << y for y in range(n) if hr[y] == gr[v]) for v in range(n)]

    # order left vertices so each one overlaps the already-covered columns as much as possible
    order = []
    covered = 0
    remaining = set(range(m))
    while remaining:
        u = max(remaining, key=lambda x: ((g.rows[x] & covered).bit_count(),
                                          -lcands[x].bit_count(), g.rows[x].bit_count(), -x))
        order.append(u)
        covered |= g.rows[u]
        remaining.discard(u)

    def search(depth, used, rcands, images):
        if depth == m:
            return _perfect_matching(rcands, n)
        u = order[depth]
        nu = g.rows[u]
        for x in _bits(lcands[u] & ~used):
            nx = h.rows[x]
            ok = True
            for w, y in images:
                if (nu & g.rows[w]).bit_count() != (nx & h.rows[y]).bit_count():
                    ok = False
                    break
            if not ok:
                continue
            new = list(rcands)
            for v in range(n):
                mask = nx if nu >> v & 1 else full_r & ~nx
                c = new[v] & mask
                if not c:
                    ok = False
                    break
                new[v] = c
            if not ok:
                continue
            images.append((u, x))
            if search(depth + 1, used | 1 << x, new, images):
                return True
            images.pop()
        return False

    return search(0, 0, rcands0, [])


def are_isomorphic(g: BiGraph, h: BiGraph, allow_side_swap: bool = False) -> bool:
    """Decide whether g and h are isomorphic as bipartite graphs with sides L, R.

    With ``allow_side_swap`` an isomorphism may also exchange the two sides.
    """
    same = (g.m, g.n) == (h.m, h.n)
    swapped = allow_side_swap and (g.m, g.n) == (h.n, h.m)
    if not same and not swapped:
        raise SizeMismatch(f"part sizes {g.m}+{g.n} and {h.m}+{h.n} are incompatible")
    if same and _iso_same_orientation(g, h):
        return True
    if swapped and _iso_same_orientation(g.transpose(), h):
        return True
    return False

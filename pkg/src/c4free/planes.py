"""Projective planes PG(2, q) and the C4-free graphs cut out of them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from c4free.bigraph import BiGraph
from c4free.errors import NotPrime, Unsatisfiable
from c4free.finite_field import Field, field_new, is_prime

# induced edges among the deleted vertices, indexed by h
DELETION_EDGES = (0, 1, 3, 6, 9)


def plane_edge_count(k: int) -> int:
    return k**3 + 2 * k**2 + 2 * k + 1


def deleted_edge_count(k: int, h: int) -> int:
    """Edge count of the plane graph of order k after an h-deletion."""
    return plane_edge_count(k) - 2 * (k + 1) * h + DELETION_EDGES[h]


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]
    incidence: BiGraph

    @property
    def order(self) -> int:
        return len(self.points)

    def points_on(self, line: int) -> list[int]:
        col = self.incidence.columns()[line]
        return [p for p in range(self.order) if col >> p & 1]

    def lines_through(self, point: int) -> list[int]:
        r = self.incidence.rows[point]
        return [ln for ln in range(self.order) if r >> ln & 1]

    def line_through(self, p1: int, p2: int) -> int:
        common = self.incidence.rows[p1] & self.incidence.rows[p2]
        return common.bit_length() - 1

    def meet(self, l1: int, l2: int) -> int:
        cols = self.incidence.columns()
        return (cols[l1] & cols[l2]).bit_length() - 1


def _normalized_triples(f: Field) -> list[tuple[int, int, int]]:
    out = []
    for t in product(range(f.q), repeat=3):
        if t == (0, 0, 0):
            continue
        lead = next(c for c in t if c)
        if lead == 1:
            out.append(t)
    return sorted(out)


@lru_cache(maxsize=None)
def build_plane(q: int) -> ProjectivePlane:
    """PG(2, q): normalized homogeneous triples, incidence by the dot product."""
    f = field_new(q)
    pts = _normalized_triples(f)
    add, mul = f.add, f.mul
    rows = []
    for p in pts:
        r = 0
        for j, ln in enumerate(pts):
            s = add(add(mul(p[0], ln[0]), mul(p[1], ln[1])), mul(p[2], ln[2]))
            if s == 0:
                r |= 1 << j
        rows.append(r)
    g = BiGraph(len(pts), len(pts), tuple(rows))
    return ProjectivePlane(q=q, points=tuple(pts), lines=tuple(pts), incidence=g)


@dataclass(frozen=True)
class DeletionSpec:
    h: int
    point_ids: tuple[int, ...]
    line_ids: tuple[int, ...]
    s: int


def _induced_edges(pl: ProjectivePlane, pts, lns) -> int:
    rows = pl.incidence.rows
    return sum(rows[p] >> ln & 1 for p in pts for ln in lns)


def _line_sets(pl: ProjectivePlane, pts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Line sets completing the sorted point tuple ``pts`` to an h-configuration."""
    inc = pl.incidence
    h = len(pts)
    out = []
    if h == 1:
        out = [(ln,) for ln in pl.lines_through(pts[0])]
    elif h == 2:
        # path p1 - l1 - p2 - l2, with l2 through either point
        l1 = pl.line_through(*pts)
        for p in pts:
            out += [(l1, l2) for l2 in pl.lines_through(p) if l2 != l1]
    elif h == 3:
        # three non-collinear points and the three lines they span
        a, b, c = pts
        lab = pl.line_through(a, b)
        if not inc.has_edge(c, lab):
            out = [(lab, pl.line_through(a, c), pl.line_through(b, c))]
    elif h == 4:
        # collinear p1, p2, p3 on l1, p4 off l1, and the lines p4-p1, p4-p2, p4-p3
        for i, p4 in enumerate(pts):
            trip = pts[:i] + pts[i + 1:]
            l1 = pl.line_through(trip[0], trip[1])
            if inc.has_edge(trip[2], l1) and not inc.has_edge(p4, l1):
                out.append((l1,) + tuple(pl.line_through(p4, x) for x in trip))
    return [tuple(sorted(x)) for x in out]


@lru_cache(maxsize=None)
def _deletion_set(q: int, h: int) -> DeletionSpec:
    pl = build_plane(q)
    if h == 0:
        return DeletionSpec(h=0, point_ids=(), line_ids=(), s=0)
    for pts in combinations(range(pl.order), h):
        cands = _line_sets(pl, pts)
        if cands:
            lns = min(cands)
            s = _induced_edges(pl, pts, lns)
            if s != DELETION_EDGES[h]:
                raise AssertionError(f"configuration induces {s} edges, expected {DELETION_EDGES[h]}")
            return DeletionSpec(h=h, point_ids=pts, line_ids=lns, s=s)
    raise Unsatisfiable(f"plane of order {q} has no h={h} configuration")


def find_deletion_set(pl: ProjectivePlane, h: int) -> DeletionSpec:
    """Lexicographically first deletion set (by point ids, then line ids).

    h=1: an incident point-line pair.  h=2: a path p1 l1 p2 l2.  h=3: a
    triangle and its three sides (a 6-cycle).  h=4: three collinear points,
    a fourth point off their line and the three lines joining it to them
    (9 induced edges).
    """
    if not 0 <= h <= 4:
        raise ValueError("h must be in 0..4")
    return _deletion_set(pl.q, h)


def construct_deleted(q: int, h: int) -> BiGraph:
    pl = build_plane(q)
    spec = find_deletion_set(pl, h)
    keep_p = [p for p in range(pl.order) if p not in spec.point_ids]
    keep_l = [ln for ln in range(pl.order) if ln not in spec.line_ids]
    return pl.incidence.induced(keep_p, keep_l)


def construct_affine(p: int, allow_prime_power: bool = False) -> BiGraph:
    """Delete one point and all lines through it from PG(2, p).

    Result: p^2 + p points against p^2 lines, p^2 (p + 1) edges.  Prime powers
    are accepted only with ``allow_prime_power``; the extremality statement
    this witnesses is only claimed for primes.
    """
    if not is_prime(p) and not allow_prime_power:
        raise NotPrime(f"{p} is not prime")
    pl = build_plane(p)
    point = 0
    through = set(pl.lines_through(point))
    keep_p = [x for x in range(pl.order) if x != point]
    keep_l = [ln for ln in range(pl.order) if ln not in through]
    return pl.incidence.induced(keep_p, keep_l)

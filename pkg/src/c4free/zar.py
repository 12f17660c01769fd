"""Upper and lower bounds on Zarankiewicz numbers z(m, n) for the 4-cycle."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from c4free.errors import OutOfRange
from c4free.finite_field import is_prime_power

TABLE1 = {
    1: 1, 2: 3, 3: 6, 4: 9, 5: 12, 6: 16, 7: 21,
    8: 24, 9: 29, 10: 34, 11: 39, 12: 45, 13: 52, 14: 56,
    15: 61, 16: 67, 17: 74, 18: 81, 19: 88, 20: 96, 21: 105,
}

# n -> (k, h) where n = k^2 + k + 1 - h with h <= 4, as annotated in the table
TABLE1_KH = {
    1: (1, 2), 2: (1, 1), 3: (1, 0), 4: (2, 3), 5: (2, 2), 6: (2, 1), 7: (2, 0),
    9: (3, 4), 10: (3, 3), 11: (3, 2), 12: (3, 1), 13: (3, 0),
    17: (4, 4), 18: (4, 3), 19: (4, 2), 20: (4, 1), 21: (4, 0),
}


@dataclass(frozen=True)
class ZTable:
    values: dict
    annotations: dict


Z_TABLE = ZTable(values=TABLE1, annotations=TABLE1_KH)


def table1(n: int) -> int:
    if n not in TABLE1:
        raise OutOfRange(f"known table covers 1 <= n <= 21, got {n}")
    return TABLE1[n]


def _kst_oriented(m: int, n: int) -> int:
    return (m + isqrt(m * m + 4 * m * n * (n - 1))) // 2


def kst_bound(m: int, n: int) -> int:
    """floor(m/2 + sqrt(m^2 + 4mn(n-1))/2), minimized over both orientations."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return min(_kst_oriented(m, n), _kst_oriented(n, m))


def poly_value(k: int, h: int) -> int:
    """k^3 + 2k^2 + c_h, the extremal count attached to n = k^2 + k + 1 - h."""
    tail = {0: 2 * k + 1, 1: 0, 2: -2 * k, 3: -4 * k + 1, 4: -6 * k + 2}[h]
    return k**3 + 2 * k**2 + tail


def decompose(n: int, max_h: int = 4) -> tuple[int, int] | None:
    """Return (k, h) with n = k^2 + k + 1 - h, k >= 1, 0 <= h <= max_h, if any."""
    k = 1
    while k * k + k + 1 - max_h <= n:
        h = k * k + k + 1 - n
        if 0 <= h <= max_h:
            return k, h
        k += 1
    return None


def structural_upper(n: int) -> int | None:
    kh = decompose(n, 3)
    if kh is None:
        return None
    k, h = kh
    if k < 2:
        return None
    if h == 0:
        return poly_value(k, 0) if is_prime_power(k) else None
    if h == 3 and k < 4:
        # k = 2, 3 are settled by the known exact values z(4) and z(10)
        return {2: TABLE1[4], 3: TABLE1[10]}[k]
    return poly_value(k, h)


def z_upper_best(n: int) -> int:
    cands = [kst_bound(n, n)]
    s = structural_upper(n)
    if s is not None:
        cands.append(s)
    if n in TABLE1:
        cands.append(TABLE1[n])
    return min(cands)


@dataclass(frozen=True)
class CountingReport:
    k: int
    h: int
    lhs: int
    rhs: int
    holds: bool
    lrl_min: int
    pair_count: int
    edge_total: int
    edge_total_ok: bool


def _c2(x: int) -> int:
    # polynomial binomial x(x-1)/2, valid for negative x at the small-k boundary
    return x * (x - 1) // 2


def verify_counting_inequality(k: int, h: int) -> CountingReport:
    """Evaluate the path-counting step of the upper bound for n = k^2+k+1-h.

    A graph with |L| = m rows and (k+1) m edges on |R| = k^2+k+1-h columns
    forces at least ``lrl_min`` LRL paths (degrees on R as equal as
    possible), while C4-freeness allows at most ``pair_count`` = C(m, 2).
    ``lhs`` and ``rhs`` are both quantities doubled; the bound follows when
    lhs > rhs.  ``edge_total`` recomputes the resulting cap on z(n).
    """
    if h not in (1, 2, 3):
        raise ValueError("h must be 1, 2 or 3")
    if h == 1:
        m = k * k + 1
        degs = [(k + 1, k + 1), (k * k - 1, k)]
        lhs_poly = k * (k + 1) * (k * k - k + 2)
        rhs_poly = k * k * (k * k + 1)
        total = (k + 1) * k * k + k * k
    elif h == 2:
        m = k * k - k + 1
        degs = [(2 * k, k), (k * k - k - 1, k - 1)]
        lhs_poly = (k - 1) * (k**3 - k * k + k + 2)
        rhs_poly = (k - 1) * (k**3 - k * k + k)
        total = (k + 1) * (k * k - k) + k * (2 * k - 1)
    else:
        m = k * k - 2 * k + 2
        degs = [(4 * k - 2, k - 1), (k * k - 3 * k, k - 2)]
        lhs_poly = (k - 2) * (k**3 - 2 * k * k + 3 * k + 2)
        rhs_poly = k**4 - 4 * k**3 + 7 * k * k - 6 * k + 2
        total = (k + 1) * (k * k - 2 * k + 1) + k * (3 * k - 3)
    lrl_min = sum(cnt * _c2(d) for cnt, d in degs)
    pair_count = _c2(m)
    if 2 * lrl_min != lhs_poly or 2 * pair_count != rhs_poly:
        raise AssertionError(f"closed forms disagree with direct counts at k={k}, h={h}")
    return CountingReport(
        k=k, h=h, lhs=lhs_poly, rhs=rhs_poly, holds=lhs_poly > rhs_poly,
        lrl_min=lrl_min, pair_count=pair_count, edge_total=total,
        edge_total_ok=total == poly_value(k, h),
    )


def min_lrl_paths(m_edges: int, n_right: int) -> int:
    """Fewest LRL paths a graph with this many edges on n_right columns can have."""
    q, r = divmod(m_edges, n_right)
    return r * comb(q + 1, 2) + (n_right - r) * comb(q, 2)


@dataclass(frozen=True)
class BoundReport:
    n: int
    kst: int
    structural: int | None
    best: int
    lower: int
    lower_source: str

    def to_text(self) -> str:
        s = "absent" if self.structural is None else str(self.structural)
        return (f"n={self.n}\nkst={self.kst}\nstructural={s}\nbest={self.best}\n"
                f"lower={self.lower}\nlower_source={self.lower_source}\n")


def constructive_lower(n: int):
    """Best explicit C4-free n x n witness available: (edges, source, graph)."""
    from c4free.bigraph import BiGraph, is_c4_free
    from c4free.planes import build_plane, construct_deleted

    options = []
    kh = decompose(n, 4)
    if kh is not None and kh[0] >= 2 and is_prime_power(kh[0]):
        k, h = kh
        g = construct_deleted(k, h)
        options.append((g.edge_count, f"plane(k={k},h={h})", g))
    # truncation of the smallest plane with at least n points
    q = 2
    while q * q + q + 1 < n or not is_prime_power(q):
        q += 1
    g = _greedy_truncate(build_plane(q).incidence, n)
    options.append((g.edge_count, f"truncated-plane(q={q})", g))
    if n <= 2:
        g = BiGraph.complete(n, 1) if n == 1 else BiGraph(2, 2, (0b11, 0b01))
        options.append((g.edge_count, "direct", g))
    best = max(options, key=lambda o: o[0])
    assert is_c4_free(best[2])
    return best


def _greedy_truncate(g, n: int):
    """Drop rows and columns of least current degree until n x n remains."""
    left = list(range(g.m))
    right = list(range(g.n))
    while len(left) > n or len(right) > n:
        sub = g.induced(left, right)
        if len(left) > n:
            dl = sub.degrees("L")
            i = min(range(len(left)), key=lambda j: (dl[j], j))
            left.pop(i)
            sub = g.induced(left, right)
        if len(right) > n:
            dr = sub.degrees("R")
            i = min(range(len(right)), key=lambda j: (dr[j], j))
            right.pop(i)
    return g.induced(left, right)


def bound_report(n: int) -> BoundReport:
    lower, source, _ = constructive_lower(n)
    best = z_upper_best(n)
    assert lower <= best
    return BoundReport(n=n, kst=kst_bound(n, n), structural=structural_upper(n),
                       best=best, lower=lower, lower_source=source)

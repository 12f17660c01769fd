"""Exact z(m, n) by branch and bound over rows.

Rows are bitmasks over the n columns and are generated in nonincreasing
(degree, mask) order.  Columns are split into classes by their signature
(the set of earlier rows containing them); columns in one class are
interchangeable, so a row only ever takes the highest-indexed columns of a
class.  Together these restrict the search to graphs in lexicographically
maximal form, and every graph has such a form.

A class with a nonempty signature contributes at most one column to a new
row (two of its columns already share a row), and two classes may both
contribute only when their signatures are disjoint.  This is exactly the
condition that no column pair is covered twice.

Pruning uses, for the r rows still to place: r times the current degree cap,
the number of still-unused column pairs, and the exact value of z(r, n)
computed recursively beforehand.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from c4free.bigraph import BiGraph
from c4free.errors import SearchBudgetExceeded
from c4free.zar import kst_bound

log = logging.getLogger(__name__)

DEFAULT_BUDGET = int(os.environ.get("C4FREE_NODE_BUDGET", 10**9))



@dataclass(frozen=True)
class SearchConfig:
    budget: int = DEFAULT_BUDGET  # nodes expanded per (m, n) search
    threads: int = 1


_cache: dict[tuple[int, int], tuple[int, BiGraph]] = {}


def pair_budget_bound(r: int, cap: int, pairs: int) -> int:
    """Max total degree of r rows, each of degree <= cap, using <= pairs column pairs.

    Raising a row from degree j to j+1 costs j new pairs, so rows are filled
    level by level.
    """
    total = 0
    for j in range(cap):
        cost = r * j
        if j and cost > pairs:
            total += pairs // j
            break
        pairs -= cost
        total += r
    return total


def _candidates(classes, free, prev_key):
    """Candidate rows: (degree, mask, chosen class indices, free count), best first."""
    out = []
    nc = len(classes)

    def rec(idx, sig_used, mask, deg, chosen):
        if idx == nc:
            cols = free
            base = mask
            for t in range(len(cols) + 1):
                if t:
                    base |= 1 << cols[t - 1]
                key = (deg + t, base)
                if key <= prev_key:
                    out.append((deg + t, base, tuple(chosen), t))
            return
        sig, cols = classes[idx]
        rec(idx + 1, sig_used, mask, deg, chosen)
        if not sig & sig_used:
            chosen.append(idx)
            rec(idx + 1, sig_used | sig, mask | 1 << cols[0], deg + 1, chosen)
            chosen.pop()

    rec(0, 0, 0, 0, [])
    out.sort(reverse=True)
    return out


def _split(classes, free, chosen, t, row_bit):
    new = []
    ch = set(chosen)
    for i, (sig, cols) in enumerate(classes):
        if i in ch:
            new.append((sig | row_bit, cols[:1]))
            if len(cols) > 1:
                new.append((sig, cols[1:]))
        else:
            new.append((sig, cols))
    if t:
        new.append((row_bit, free[:t]))
    return new, free[t:]


class _Search:
    def __init__(self, m, n, sub_bounds, budget):
        self.m, self.n = m, n
        self.sub = sub_bounds  # sub[r] = upper bound on z(r, n), r <= m
        self.budget = budget
        self.nodes = 0
        self.best = -1
        self.best_rows = None
        self.total_pairs = comb(n, 2)

    def bound(self, r, cap, used_pairs):
        if r == 0:
            return 0
        return min(r * cap,
                   pair_budget_bound(r, cap, self.total_pairs - used_pairs),
                   self.sub[r])

    def dfs(self, rows, cur, used_pairs, classes, free, prev_key):
        i = len(rows)
        if i == self.m:
            if cur > self.best:
                self.best = cur
                self.best_rows = tuple(rows)
            return
        r = self.m - i
        if cur + self.bound(r, prev_key[0], used_pairs) <= self.best:
            return
        for deg, mask, chosen, t in _candidates(classes, free, prev_key):
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(self.best, self._witness(), self.nodes)
            if cur + deg + self.bound(r - 1, deg, used_pairs + comb(deg, 2)) <= self.best:
                continue
            new_classes, new_free = _split(classes, free, chosen, t, 1 << i)
            rows.append(mask)
            self.dfs(rows, cur + deg, used_pairs + comb(deg, 2), new_classes, new_free, (deg, mask))
            rows.pop()

    def _witness(self):
        if self.best_rows is None:
            return None
        return BiGraph(self.m, self.n, self.best_rows)

    def prefixes(self, depth):
        """Search-tree nodes at the given depth, in traversal order."""
        out = []

        def rec(rows, cur, used, classes, free, prev_key):
            if len(rows) == depth or len(rows) == self.m:
                out.append((tuple(rows), cur, used, classes, free, prev_key))
                return
            for deg, mask, chosen, t in _candidates(classes, free, prev_key):
                nc, nf = _split(classes, free, chosen, t, 1 << len(rows))
                rec(rows + [mask], cur + deg, used + comb(deg, 2), nc, nf, (deg, mask))

        rec([], 0, 0, [], list(range(self.n - 1, -1, -1)), (self.n, (1 << self.n) - 1))
        return out


def _run_prefix(args):
    m, n, sub, budget, (rows, cur, used, classes, free, prev_key) = args
    s = _Search(m, n, sub, budget)
    s.dfs(list(rows), cur, used, classes, free, prev_key)
    return s.best, s.best_rows, s.nodes


def z_exact(m: int, n: int, budget: int | None = None, threads: int = 1,
            config: SearchConfig | None = None) -> tuple[int, BiGraph]:
    """Maximum edge count of a C4-free subgraph of K_{m,n}, with a witness.

    The witness is the first optimum in the deterministic traversal order and
    does not depend on ``threads``.  Raises SearchBudgetExceeded when more
    than ``budget`` nodes are expanded.  A ``config`` overrides both.
    """
    if config is not None:
        budget, threads = config.budget, config.threads
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    budget = DEFAULT_BUDGET if budget is None else budget
    if n > m:
        val, w = z_exact(n, m, budget, threads)
        return val, w.transpose()
    if (m, n) in _cache:
        return _cache[(m, n)]

    # sub[r] bounds z(r, n); the top entry has no exact value yet
    sub = [0] * (m + 1)
    for r in range(1, m):
        sub[r] = z_exact(r, n, budget, 1)[0]
    sub[m] = kst_bound(m, n)

    s = _Search(m, n, sub, budget)
    if threads <= 1:
        s.dfs([], 0, 0, [], list(range(n - 1, -1, -1)), (n, (1 << n) - 1))
        best, rows = s.best, s.best_rows
    else:
        jobs = [(m, n, sub, budget, p) for p in s.prefixes(2)]
        best, rows = -1, None
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for b, rw, _ in ex.map(_run_prefix, jobs):
                if b > best:
                    best, rows = b, rw
    log.info("z(%d,%d) = %d after %d nodes", m, n, best, s.nodes)
    result = (best, BiGraph(m, n, rows))
    _cache[(m, n)] = result
    return result

"""A small complete SAT solver: unit propagation on watched literals,
first-UIP conflict clauses and non-chronological backjumping.

Branching is fixed (lowest-numbered free variable, false first), so runs are
reproducible.  No restarts and no activity heuristics; learned clauses are
minimized and periodically thinned by literal-block distance so that
propagation stays cheap on long runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from c4free.errors import BudgetExceeded


@dataclass(frozen=True)
class SolveResult:
    sat: bool
    assignment: tuple[int, ...] | None = None  # literals for variables 1..num_vars
    conflicts: int = 0
    decisions: int = 0


REDUCE_FIRST = 2000
REDUCE_INC = 300


class _Solver:
    # Literal x is stored at slot x + n, so both polarities index flat lists.

    def __init__(self, num_vars, clauses):
        n = self.n = num_vars
        self.val = [0] * (2 * n + 1)  # val[x + n]: 1 true, -1 false, 0 free
        self.level = [0] * (n + 1)
        self.reason = [None] * (n + 1)
        self.trail = []
        self.trail_lim = []
        self.watches = [[] for _ in range(2 * n + 1)]
        self.units = []
        self.empty = False
        self.next_var = 1
        self.learnts = []
        for c in clauses:
            lits = list(dict.fromkeys(c))
            if any(-x in lits for x in lits):
                continue
            if not lits:
                self.empty = True
            elif len(lits) == 1:
                self.units.append(lits[0])
            else:
                self._attach(lits)

    def _attach(self, lits):
        n = self.n
        self.watches[lits[0] + n].append(lits)
        self.watches[lits[1] + n].append(lits)
        return lits

    def enqueue(self, lit, reason):
        n = self.n
        var = lit if lit > 0 else -lit
        self.val[lit + n] = 1
        self.val[n - lit] = -1
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)

    def propagate(self, qhead):
        """Propagate from trail position ``qhead``; return (conflict clause or None, qhead)."""
        n = self.n
        val = self.val
        watches = self.watches
        trail = self.trail
        level = self.level
        reason = self.reason
        dlevel = len(self.trail_lim)
        while qhead < len(trail):
            false_lit = -trail[qhead]
            qhead += 1
            wl = watches[false_lit + n]
            if not wl:
                continue
            # compact the watch list in place: wl[:k] keeps clauses still watching false_lit
            k = 0
            i = 0
            end = len(wl)
            while i < end:
                c = wl[i]
                i += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                if val[first + n] == 1:
                    wl[k] = c
                    k += 1
                    continue
                for j in range(2, len(c)):
                    lit = c[j]
                    if val[lit + n] != -1:
                        c[1] = lit
                        c[j] = false_lit
                        watches[lit + n].append(c)
                        break
                else:
                    wl[k] = c
                    k += 1
                    if val[first + n] == -1:
                        while i < end:
                            wl[k] = wl[i]
                            k += 1
                            i += 1
                        del wl[k:]
                        return c, qhead
                    val[first + n] = 1
                    val[n - first] = -1
                    var = first if first > 0 else -first
                    level[var] = dlevel
                    reason[var] = c
                    trail.append(first)
            del wl[k:]
        return None, qhead

    def analyze(self, confl):
        """First-UIP learned clause, minimized, and its backjump level."""
        level = self.level
        cur = len(self.trail_lim)
        seen = set()
        learnt = [None]
        counter = 0
        lit = None
        idx = len(self.trail) - 1
        clause = confl
        while True:
            for q in clause:
                if q == lit:
                    continue
                var = q if q > 0 else -q
                if var in seen or level[var] == 0:
                    continue
                seen.add(var)
                if level[var] == cur:
                    counter += 1
                else:
                    learnt.append(q)
            while abs(self.trail[idx]) not in seen:
                idx -= 1
            lit = self.trail[idx]
            idx -= 1
            counter -= 1
            if counter == 0:
                break
            clause = self.reason[abs(lit)]
        learnt[0] = -lit

        # drop literals implied by the rest of the clause
        in_clause = {abs(x) for x in learnt}
        levels = {level[abs(x)] for x in learnt[1:]}
        kept = [learnt[0]]
        for q in learnt[1:]:
            if self.reason[abs(q)] is None or not self._redundant(q, in_clause, levels):
                kept.append(q)
        learnt = kept

        if len(learnt) == 1:
            return learnt, 0, 1
        j = max(range(1, len(learnt)), key=lambda t: level[abs(learnt[t])])
        learnt[1], learnt[j] = learnt[j], learnt[1]
        lbd = len({level[abs(x)] for x in learnt})
        return learnt, level[abs(learnt[1])], lbd

    def _redundant(self, q, in_clause, levels):
        """Whether false literal q follows from the clause's other literals via reasons."""
        level, reason = self.level, self.reason
        stack = [q]
        visited = set()
        while stack:
            x = stack.pop()
            for y in reason[abs(x)]:
                if y == -x:
                    continue
                v = abs(y)
                if v in in_clause or v in visited or level[v] == 0:
                    continue
                if reason[v] is None or level[v] not in levels:
                    return False
                visited.add(v)
                stack.append(y)
        in_clause.update(visited)
        return True

    def backjump(self, lvl):
        if len(self.trail_lim) <= lvl:
            return
        n = self.n
        pos = self.trail_lim[lvl]
        val, reason = self.val, self.reason
        low = self.next_var
        for lit in self.trail[pos:]:
            val[lit + n] = 0
            val[n - lit] = 0
            var = lit if lit > 0 else -lit
            reason[var] = None
            if var < low:
                low = var
        self.next_var = low
        del self.trail[pos:]
        del self.trail_lim[lvl:]

    def reduce_db(self):
        """Forget the worse half of learned clauses (by LBD, then length)."""
        n = self.n
        locked = {id(self.reason[abs(x)]) for x in self.trail if self.reason[abs(x)] is not None}
        ranked = sorted(range(len(self.learnts)),
                        key=lambda i: (self.learnts[i][1], len(self.learnts[i][0]), i))
        keep_n = len(ranked) // 2
        drop = set()
        for pos, i in enumerate(ranked):
            c, lbd = self.learnts[i]
            if pos >= keep_n and lbd > 2 and id(c) not in locked:
                drop.add(id(c))
        if not drop:
            return
        self.learnts = [t for t in self.learnts if id(t[0]) not in drop]
        for w in range(2 * n + 1):
            wl = self.watches[w]
            if wl:
                self.watches[w] = [c for c in wl if id(c) not in drop]

    def pick(self):
        v = self.next_var
        val, n = self.val, self.n
        while v <= n and val[v + n] != 0:
            v += 1
        self.next_var = v
        return v if v <= n else 0

    def solve(self, budget):
        if self.empty:
            return SolveResult(False)
        n = self.n
        for u in self.units:
            x = self.val[u + n]
            if x == -1:
                return SolveResult(False)
            if x == 0:
                self.enqueue(u, None)
        conflicts = decisions = 0
        next_reduce = REDUCE_FIRST
        qhead = 0
        while True:
            confl, qhead = self.propagate(qhead)
            if confl is not None:
                conflicts += 1
                if not self.trail_lim:
                    return SolveResult(False, conflicts=conflicts, decisions=decisions)
                if budget is not None and conflicts > budget:
                    raise BudgetExceeded(f"conflict budget {budget} exhausted")
                learnt, back, lbd = self.analyze(confl)
                self.backjump(back)
                qhead = len(self.trail)
                if len(learnt) == 1:
                    self.enqueue(learnt[0], None)
                else:
                    self._attach(learnt)
                    self.learnts.append((learnt, lbd))
                    self.enqueue(learnt[0], learnt)
                if len(self.learnts) >= next_reduce:
                    self.reduce_db()
                    next_reduce += REDUCE_INC
                continue
            var = self.pick()
            if var == 0:
                assignment = tuple(v if self.val[v + n] > 0 else -v for v in range(1, n + 1))
                return SolveResult(True, assignment, conflicts, decisions)
            decisions += 1
            self.trail_lim.append(len(self.trail))
            qhead = len(self.trail)
            self.enqueue(-var, None)


def solve(formula, budget: int | None = None) -> SolveResult:
    """Decide satisfiability of a CnfFormula (or anything with num_vars and clauses).

    Raises BudgetExceeded after ``budget`` conflicts; that is not an UNSAT answer.
    """
    return _Solver(formula.num_vars, [list(c) for c in formula.clauses]).solve(budget)

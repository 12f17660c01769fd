"""CNF encoding of C4-free coloring completion, DIMACS and solution files.

With two free colors each uncolored edge gets one variable (false = the
lower color, true = the higher).  With more colors each (edge, color) pair
gets a variable, with at-least-one and pairwise at-most-one clauses per
edge.  For every 4-cycle and every color that could end up on all four of
its edges, one clause forbids that outcome; edges already carrying the color
drop out of the clause.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from c4free.errors import (AlreadyViolated, InconsistentOneHot, ParseError,
                           UnfillableCell)
from c4free.ramsey import Coloring, color_class
from c4free.bigraph import is_c4_free

SPLIT = "single_var_split"
ONE_HOT = "one_hot"


@dataclass
class CnfFormula:
    num_vars: int
    clauses: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} outside 1..{self.num_vars}")

    def same_as(self, other: "CnfFormula") -> bool:
        """Equal variable count and equal clause multiset."""
        key = lambda f: sorted(tuple(c) for c in f.clauses)
        return self.num_vars == other.num_vars and key(self) == key(other)


@dataclass(frozen=True)
class VarMap:
    mode: str
    colors: tuple[int, ...]
    keys: tuple[tuple[int, int, int], ...]  # keys[var - 1] = (u, v, color)

    @property
    def num_vars(self) -> int:
        return len(self.keys)

    def var(self, u: int, v: int, color: int) -> int:
        return self._index()[(u, v, color)]

    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {k: i + 1 for i, k in enumerate(self.keys)}
            object.__setattr__(self, "_idx", idx)
        return idx


def encode_completion(partial: Coloring, colors) -> tuple[CnfFormula, VarMap]:
    colors = tuple(sorted(set(colors)))
    for c in colors:
        if not 1 <= c <= partial.k:
            raise ValueError(f"color {c} outside 1..{partial.k}")
    n, cells = partial.n, partial.cells
    free = [(u, v) for u in range(n) for v in range(n) if cells[u][v] == 0]
    if free and not colors:
        u, v = free[0]
        raise UnfillableCell(f"cell ({u}, {v}) is uncolored and no colors are allowed")
    for a in range(1, partial.k + 1):
        if not is_c4_free(color_class(partial, a)):
            raise AlreadyViolated(f"fixed cells already contain a 4-cycle in color {a}")

    clauses: list[list[int]] = []
    if len(colors) == 2:
        mode = SPLIT
        keys = tuple((u, v, colors[1]) for u, v in free)
        var_of = {(u, v): i + 1 for i, (u, v) in enumerate(free)}

        def is_lit(u, v, c):
            x = var_of[(u, v)]
            return x if c == colors[1] else -x
    else:
        mode = ONE_HOT
        keys = tuple((u, v, c) for u, v in free for c in colors)
        var_of = {k: i + 1 for i, k in enumerate(keys)}
        for u, v in free:
            xs = [var_of[(u, v, c)] for c in colors]
            clauses.append(xs)
            clauses.extend([-a, -b] for a, b in combinations(xs, 2))

        def is_lit(u, v, c):
            return var_of[(u, v, c)]

    for u1, u2 in combinations(range(n), 2):
        r1, r2 = cells[u1], cells[u2]
        for v1, v2 in combinations(range(n), 2):
            quad = ((u1, v1, r1[v1]), (u1, v2, r1[v2]), (u2, v1, r2[v1]), (u2, v2, r2[v2]))
            for c in colors:
                clause = []
                for u, v, x in quad:
                    if x == 0:
                        clause.append(-is_lit(u, v, c))
                    elif x != c:
                        clause = None
                        break
                if clause is None:
                    continue
                if not clause:
                    raise AlreadyViolated(f"rows {u1},{u2} columns {v1},{v2} already monochromatic")
                clauses.append(clause)
    return CnfFormula(len(keys), clauses), VarMap(mode, colors, keys)


def decode(assignment, vm: VarMap, partial: Coloring) -> Coloring:
    """Fill the uncolored cells of ``partial`` from a satisfying assignment."""
    truth = {}
    for lit in assignment:
        truth[abs(lit)] = lit > 0
    missing = [v for v in range(1, vm.num_vars + 1) if v not in truth]
    if missing:
        raise ValueError(f"assignment does not cover variable {missing[0]}")
    cells = [list(r) for r in partial.cells]
    if vm.mode == SPLIT:
        lo, hi = vm.colors
        for var, (u, v, _) in enumerate(vm.keys, start=1):
            cells[u][v] = hi if truth[var] else lo
    else:
        chosen: dict[tuple[int, int], list[int]] = {}
        for var, (u, v, c) in enumerate(vm.keys, start=1):
            chosen.setdefault((u, v), [])
            if truth[var]:
                chosen[(u, v)].append(c)
        for (u, v), cs in chosen.items():
            if len(cs) != 1:
                raise InconsistentOneHot(f"cell ({u}, {v}) selects colors {cs}")
            cells[u][v] = cs[0]
    return Coloring(partial.n, partial.k, tuple(tuple(r) for r in cells))


# -- DIMACS -----------------------------------------------------------------

def write_dimacs(f: CnfFormula) -> str:
    out = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    out.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(out) + "\n"


def read_dimacs(text: str) -> CnfFormula:
    header = None
    clauses: list[list[int]] = []
    cur: list[int] = []
    for ln, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("c"):
            continue
        if header is None:
            parts = s.split()
            if len(parts) != 4 or parts[:2] != ["p", "cnf"] or not all(p.isdigit() for p in parts[2:]):
                raise ParseError(f"bad header {s!r}, expected 'p cnf <vars> <clauses>'", line=ln)
            header = (int(parts[2]), int(parts[3]))
            continue
        if s.startswith("p"):
            raise ParseError("duplicate header", line=ln)
        for tok in s.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", line=ln) from None
            if lit == 0:
                if not cur:
                    raise ParseError("empty clause", line=ln)
                clauses.append(cur)
                cur = []
            elif abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds declared {header[0]} variables", line=ln)
            else:
                cur.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header", line=1)
    if cur:
        raise ParseError("last clause is not 0-terminated", line=ln)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}", line=1)
    return CnfFormula(header[0], clauses)


def write_solution(result) -> str:
    if not result.sat:
        return "UNSAT\n"
    return "SAT\n" + " ".join(map(str, result.assignment)) + "\n"


def read_solution(text: str) -> tuple[bool, list[int] | None]:
    toks = text.split()
    if not toks or toks[0] not in ("SAT", "UNSAT"):
        raise ParseError("solution must start with SAT or UNSAT", line=1)
    if toks[0] == "UNSAT":
        return False, None
    try:
        lits = [int(t) for t in toks[1:]]
    except ValueError as e:
        raise ParseError(f"bad literal in solution: {e}", line=2) from None
    return True, [x for x in lits if x != 0]

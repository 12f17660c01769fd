"""Edge colorings of K_{n,n} without monochromatic 4-cycles, and b_k(2) bounds."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from c4free.bigraph import BiGraph, degree_multiset, is_c4_free, parse_graph
from c4free.errors import FormatError, NoBoundFound, SizeMismatch
from c4free.finite_field import field_new, is_prime_power
from c4free.zar import z_upper_best

MAX_TEXT_COLORS = 9


@dataclass(frozen=True)
class Coloring:
    """k-coloring of K_{n,n}; cells[u][v] in 1..k, or 0 for an uncolored edge."""

    n: int
    k: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.n or any(len(r) != self.n for r in self.cells):
            raise ValueError(f"coloring must be {self.n} x {self.n}")
        for r in self.cells:
            for c in r:
                if not 0 <= c <= self.k:
                    raise ValueError(f"color {c} outside 0..{self.k}")

    @classmethod
    def from_rows(cls, k: int, rows) -> "Coloring":
        cells = tuple(tuple(int(c) for c in r) for r in rows)
        return cls(len(cells), k, cells)

    @property
    def complete(self) -> bool:
        return all(c for r in self.cells for c in r)

    def erase(self, colors) -> "Coloring":
        colors = set(colors)
        return Coloring(self.n, self.k, tuple(
            tuple(0 if c in colors else c for c in r) for r in self.cells))

    def to_text(self) -> str:
        return format_coloring(self)


def format_coloring(c: Coloring) -> str:
    if c.k > MAX_TEXT_COLORS:
        raise FormatError(f"text format supports at most {MAX_TEXT_COLORS} colors")
    return f"{c.n} {c.k}\n" + "".join("".join(map(str, r)) + "\n" for r in c.cells)


def parse_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty coloring file", line=1)
    head = lines[0].split(" ")
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise FormatError(f"bad header {lines[0]!r}, expected 'n k'", line=1)
    n, k = map(int, head)
    if k > MAX_TEXT_COLORS:
        raise FormatError(f"text format supports at most {MAX_TEXT_COLORS} colors", line=1)
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", line=len(lines))
    allowed = set("0123456789"[: k + 1])
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if len(line) != n or set(line) - allowed:
            raise FormatError(f"row must be exactly {n} characters from 0..{k}", line=i)
        rows.append(tuple(int(ch) for ch in line))
    return Coloring(n, k, tuple(rows))


def field_coloring(k: int) -> Coloring:
    """Color (a, b)-(a', b') with the field element a a' - (b + b'), plus one.

    Vertices on each side are the pairs of GF(k) in lexicographic order of
    element indices, so vertex (a, b) is number a k + b.
    """
    f = field_new(k)
    add, sub, mul = f.add, f.sub, f.mul
    verts = [(a, b) for a in range(k) for b in range(k)]
    cells = tuple(
        tuple(sub(mul(a, a2), add(b, b2)) + 1 for (a2, b2) in verts)
        for (a, b) in verts
    )
    return Coloring(k * k, k, cells)


def color_class(c: Coloring, alpha: int) -> BiGraph:
    rows = tuple(sum(1 << v for v, x in enumerate(r) if x == alpha) for r in c.cells)
    return BiGraph(c.n, c.n, rows)


@dataclass(frozen=True)
class ColoringReport:
    complete: bool
    per_color_edges: tuple[int, ...]
    per_color_c4_free: tuple[bool, ...]

    @property
    def valid(self) -> bool:
        return self.complete and all(self.per_color_c4_free)

    def summary(self, k: int) -> str:
        edges = ",".join(map(str, self.per_color_edges))
        status = "valid" if self.valid else "invalid"
        extra = ""
        if not self.valid:
            bad = [str(i + 1) for i, ok in enumerate(self.per_color_c4_free) if not ok]
            extra = f" complete={str(self.complete).lower()} c4_colors={','.join(bad) or 'none'}"
        return f"{status} k={k} edges={edges}{extra}"


def verify_coloring(c: Coloring) -> ColoringReport:
    classes = [color_class(c, a) for a in range(1, c.k + 1)]
    return ColoringReport(
        complete=c.complete,
        per_color_edges=tuple(g.edge_count for g in classes),
        per_color_c4_free=tuple(is_c4_free(g) for g in classes),
    )


# -- embedded witnesses -----------------------------------------------------

G18_SHA256 = "3242b2ebfd95710e6e4e4b0834172bfa8f98c74622f2857239095e543a65e6e8"
D4_SHA256 = "be41ebffce6e97dd14eb9136fd7ededcda65312243a38d30d4b95991faa173ed"


def _load(name: str, digest: str) -> str:
    text = resources.files("c4free").joinpath("data", name).read_text()
    got = hashlib.sha256(text.encode()).hexdigest()
    if got != digest:
        raise RuntimeError(f"embedded witness {name} is corrupt (sha256 {got})")
    return text


@dataclass(frozen=True)
class WitnessRegistry:
    g18: BiGraph
    d_coloring: Coloring

    def colorings(self) -> dict[str, Coloring]:
        return {"d4": self.d_coloring}


@lru_cache(maxsize=None)
def registry() -> WitnessRegistry:
    return WitnessRegistry(
        g18=parse_graph(_load("g18.txt", G18_SHA256)),
        d_coloring=parse_coloring(_load("d4.txt", D4_SHA256)),
    )


def g18_text() -> str:
    return _load("g18.txt", G18_SHA256)


def d4_text() -> str:
    return _load("d4.txt", D4_SHA256)


@dataclass(frozen=True)
class G18Report:
    degree_ok: bool
    quarters_ok: bool
    details: dict

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.quarters_ok


def _components(g: BiGraph) -> list[tuple[int, int]]:
    """(left count, right count) of each connected component."""
    cols = g.columns()
    seen_l, seen_r = set(), set()
    out = []
    for start in range(g.m):
        if start in seen_l:
            continue
        stack, nl, nr = [("L", start)], 0, 0
        seen_l.add(start)
        while stack:
            side, x = stack.pop()
            if side == "L":
                nl += 1
                nbrs, seen, other = g.rows[x], seen_r, "R"
            else:
                nr += 1
                nbrs, seen, other = cols[x], seen_l, "L"
            y = 0
            while nbrs:
                if nbrs & 1 and y not in seen:
                    seen.add(y)
                    stack.append((other, y))
                nbrs >>= 1
                y += 1
        out.append((nl, nr))
    return out


def _regular(g: BiGraph, d: int) -> bool:
    return set(g.degrees("L")) <= {d} and set(g.degrees("R")) <= {d}


def verify_g18_structure(g: BiGraph) -> G18Report:
    """Check degrees and the block layout [[3C6, S^T], [S, 9K2]] of the 18+18 graph."""
    if (g.m, g.n) != (18, 18):
        raise SizeMismatch("expected an 18+18 graph")
    top, bot = range(9), range(9, 18)
    tl, tr = g.induced(top, top), g.induced(top, bot)
    bl, br = g.induced(bot, top), g.induced(bot, bot)
    degree_ok = degree_multiset(g, "L") == {4: 9, 5: 9} == degree_multiset(g, "R")
    d = {
        "three_c6": _regular(tl, 2) and sorted(_components(tl)) == [(3, 3)] * 3,
        "matching": _regular(br, 1) and br.edge_count == 9,
        "s_cubic": _regular(bl, 3),
        "s_linear": is_c4_free(bl),
        "s_transpose": bl == tr.transpose(),
    }
    return G18Report(degree_ok=degree_ok, quarters_ok=all(d.values()), details=d)


# -- b_k(2) bounds ----------------------------------------------------------

@dataclass(frozen=True)
class Bk2Report:
    k: int
    lower: int
    lower_source: str
    upper: int
    upper_source: str

    def to_text(self) -> str:
        return (f"k={self.k}\nlower={self.lower}\nlower_source={self.lower_source}\n"
                f"upper={self.upper}\nupper_source={self.upper_source}\n")


@lru_cache(maxsize=None)
def _verified_witnesses() -> tuple[tuple[str, int, int], ...]:
    out = []
    for name, c in registry().colorings().items():
        if verify_coloring(c).valid:
            out.append((name, c.k, c.n))
    return tuple(out)


def bk2_lower_report(k: int) -> tuple[int, str]:
    """Best lower bound on b_k(2) with its provenance.

    A valid coloring of K_{n,n} with at most k colors shows b_k(2) > n.
    Sources: the field coloring for every prime power q <= k, verified
    registry witnesses with at most k colors, and K_{1,1} in one color.
    """
    if k < 1:
        raise ValueError("k must be positive")
    best = (2, "trivial")
    for q in range(k, 1, -1):
        if is_prime_power(q):
            src = f"field(q={q})" if q == k else f"field(q={q}),monotone"
            best = max(best, (q * q + 1, src), key=lambda t: t[0])
            break
    for name, kk, n in _verified_witnesses():
        if kk <= k and n + 1 > best[0]:
            best = (n + 1, f"witness:{name}" if kk == k else f"witness:{name},monotone")
    return best


def bk2_lower(k: int) -> int:
    return bk2_lower_report(k)[0]


def bk2_upper(k: int) -> int:
    """Smallest n for which k colour classes cannot cover all n^2 edges of K_{n,n}."""
    if k < 2:
        raise ValueError("k must be at least 2")
    for n in range(1, k * k + 2 * k + 3):
        if k * z_upper_best(n) < n * n:
            return n
    raise NoBoundFound(f"no counting bound for k={k} up to n={k * k + 2 * k + 2}")


def bk2_report(k: int) -> Bk2Report:
    lower, src = bk2_lower_report(k)
    upper = bk2_upper(k)
    return Bk2Report(k=k, lower=lower, lower_source=src, upper=upper,
                     upper_source=f"counting:k*z({upper})<{upper}^2")

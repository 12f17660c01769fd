"""Command-line interface.

Exit status: 0 success or verified, 1 verification failed (or UNSAT), 2 usage
or parse error.  On 1 and 2 a one-line ``key=value`` summary goes to stderr.
Built-in witnesses are available as ``@g18`` (graph) and ``@d4`` (coloring).
"""

from __future__ import annotations

import argparse
import logging
import sys

from c4free import exact, planes, ramsey, sat, satenc, zar
from c4free.bigraph import (are_isomorphic, count_lrl_paths, degree_multiset,
                            format_graph, is_c4_free, parse_graph)
from c4free.errors import C4FreeError, FormatError, SearchBudgetExceeded, BudgetExceeded

SOFT_CAP = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "@g18":
        return ramsey.g18_text()
    if path == "@d4":
        return ramsey.d4_text()
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _colors(s: str) -> list[int]:
    try:
        cols = [int(x) for x in s.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad color list {s!r}") from None
    if not cols:
        raise UsageError("empty color list")
    return cols


class Fail(Exception):
    """Raised by a command whose check did not pass (exit 1)."""


# -- commands ---------------------------------------------------------------

def cmd_plane(args):
    _emit(args, format_graph(planes.build_plane(args.q).incidence))


def cmd_construct(args):
    if not 0 <= args.h <= 4:
        raise UsageError("h must be in 0..4")
    _emit(args, format_graph(planes.construct_deleted(args.q, args.h)))


def cmd_affine(args):
    _emit(args, format_graph(planes.construct_affine(args.p, allow_prime_power=args.allow_prime_power)))


def cmd_z_exact(args):
    if args.m < 1 or args.n < 1:
        raise UsageError("m and n must be positive")
    if max(args.m, args.n) > SOFT_CAP and not args.force:
        raise UsageError(f"m, n above {SOFT_CAP} need --force")
    print(f"searching z({args.m},{args.n})", file=sys.stderr)
    try:
        budget = exact.DEFAULT_BUDGET if args.budget is None else args.budget
        cfg = exact.SearchConfig(budget=budget, threads=args.threads)
        value, witness = exact.z_exact(args.m, args.n, config=cfg)
    except SearchBudgetExceeded as e:
        if e.witness is not None:
            _emit(args, f"{e.best}\n" + format_graph(e.witness))
        raise Fail(f"result=budget_exceeded nodes={e.nodes} best={e.best}") from None
    _emit(args, f"{value}\n" + format_graph(witness))


def cmd_z_bound(args):
    if args.n < 1:
        raise UsageError("n must be positive")
    _emit(args, zar.bound_report(args.n).to_text())


def cmd_table1(args):
    _emit(args, f"{zar.table1(args.n)}\n")


def cmd_counting_check(args):
    if args.h not in (1, 2, 3):
        raise UsageError("h must be 1, 2 or 3")
    r = zar.verify_counting_inequality(args.k, args.h)
    _emit(args, f"k={r.k}\nh={r.h}\nlhs={r.lhs}\nrhs={r.rhs}\nholds={_bool(r.holds)}\n"
                f"edge_total={r.edge_total}\nedge_total_ok={_bool(r.edge_total_ok)}\n")
    if not r.holds:
        raise Fail(f"result=fail check=counting k={r.k} h={r.h} lhs={r.lhs} rhs={r.rhs}")


def cmd_color_field(args):
    _emit(args, ramsey.format_coloring(ramsey.field_coloring(args.k)))


def cmd_verify_graph(args):
    g = parse_graph(_read(args.file))
    ok = is_c4_free(g)
    deg = ",".join(f"{d}:{c}" for d, c in degree_multiset(g, "L").items())
    line = (f"c4_free={_bool(ok)} m={g.m} n={g.n} edges={g.edge_count} "
            f"lrl_paths={count_lrl_paths(g)} left_degrees={deg}")
    _emit(args, line + "\n")
    if not ok:
        raise Fail(f"result=fail check=c4_free edges={g.edge_count}")


def cmd_verify_coloring(args):
    c = ramsey.parse_coloring(_read(args.file))
    rep = ramsey.verify_coloring(c)
    _emit(args, rep.summary(c.k) + "\n")
    if not rep.valid:
        raise Fail("result=fail check=coloring " + rep.summary(c.k))


def cmd_g18_check(args):
    g = parse_graph(_read(args.file))
    rep = ramsey.verify_g18_structure(g)
    parts = [f"degree_ok={_bool(rep.degree_ok)}", f"quarters_ok={_bool(rep.quarters_ok)}"]
    parts += [f"{k}={_bool(v)}" for k, v in rep.details.items()]
    _emit(args, " ".join(parts) + "\n")
    if not rep.ok:
        raise Fail("result=fail check=g18 " + " ".join(parts[:2]))


def cmd_bk2(args):
    if args.k < 2:
        raise UsageError("k must be at least 2")
    _emit(args, ramsey.bk2_report(args.k).to_text())


def cmd_encode(args):
    partial = ramsey.parse_coloring(_read(args.file))
    f, _ = satenc.encode_completion(partial, _colors(args.colors))
    _emit(args, satenc.write_dimacs(f))


def cmd_solve(args):
    f = satenc.read_dimacs(_read(args.cnf))
    try:
        res = sat.solve(f, budget=args.budget)
    except BudgetExceeded as e:
        raise Fail(f"result=budget_exceeded detail={str(e).replace(' ', '_')}") from None
    _emit(args, satenc.write_solution(res))
    print(f"conflicts={res.conflicts} decisions={res.decisions}", file=sys.stderr)
    if not res.sat:
        raise Fail(f"result=unsat conflicts={res.conflicts}")


def cmd_decode(args):
    sat_ok, lits = satenc.read_solution(_read(args.solution))
    if not sat_ok:
        raise Fail("result=unsat detail=nothing_to_decode")
    partial = ramsey.parse_coloring(_read(args.file))
    _, vm = satenc.encode_completion(partial, _colors(args.colors))
    _emit(args, ramsey.format_coloring(satenc.decode(lits, vm, partial)))


def cmd_iso(args):
    g, h = parse_graph(_read(args.file1)), parse_graph(_read(args.file2))
    ok = are_isomorphic(g, h, allow_side_swap=args.swap)
    _emit(args, f"isomorphic={_bool(ok)}\n")
    if not ok:
        raise Fail("result=fail check=isomorphic")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="c4free", description="C4-free bipartite graphs and colorings")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-o", "--output", help="write result here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    sp = add("plane", cmd_plane, "incidence graph of PG(2, q)")
    sp.add_argument("q", type=int)
    sp = add("construct", cmd_construct, "plane graph with h points and h lines deleted")
    sp.add_argument("q", type=int)
    sp.add_argument("h", type=int)
    sp = add("affine", cmd_affine, "PG(2, p) minus a point and the lines through it")
    sp.add_argument("p", type=int)
    sp.add_argument("--allow-prime-power", action="store_true",
                    help="accept prime powers (extremality is only claimed for primes)")
    sp = add("z-exact", cmd_z_exact, "exact z(m, n) by branch and bound")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--budget", type=int, default=None, help="node budget")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--force", action="store_true", help=f"allow m or n above {SOFT_CAP}")
    sp = add("z-bound", cmd_z_bound, "upper and lower bounds on z(n)")
    sp.add_argument("n", type=int)
    sp = add("table1", cmd_table1, "known z(n), 1 <= n <= 21")
    sp.add_argument("n", type=int)
    sp = add("counting-check", cmd_counting_check, "path-counting inequality for n = k^2+k+1-h")
    sp.add_argument("k", type=int)
    sp.add_argument("h", type=int)
    sp = add("color-field", cmd_color_field, "field coloring of K_{k^2,k^2}")
    sp.add_argument("k", type=int)
    sp = add("verify-graph", cmd_verify_graph, "check a graph file for 4-cycles")
    sp.add_argument("file")
    sp = add("verify-coloring", cmd_verify_coloring, "check a coloring file")
    sp.add_argument("file")
    sp = add("g18-check", cmd_g18_check, "block structure of the extremal 18+18 graph")
    sp.add_argument("file", nargs="?", default="@g18")
    sp = add("bk2", cmd_bk2, "lower and upper bounds on b_k(2)")
    sp.add_argument("k", type=int)
    sp = add("encode", cmd_encode, "CNF for completing a partial coloring")
    sp.add_argument("file")
    sp.add_argument("--colors", required=True, help="comma-separated colors for free cells")
    sp = add("solve", cmd_solve, "solve a DIMACS CNF file")
    sp.add_argument("cnf")
    sp.add_argument("--budget", type=int, default=None, help="conflict budget")
    sp = add("decode", cmd_decode, "apply a solution to the partial coloring it was encoded from")
    sp.add_argument("solution")
    sp.add_argument("file")
    sp.add_argument("--colors", required=True, help="the color list given to encode")
    sp = add("iso", cmd_iso, "isomorphism test for two graph files")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--swap", action="store_true", help="also allow exchanging the sides")
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error=usage detail={e}", file=sys.stderr)
        return 2
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr)
    try:
        args.func(args)
    except Fail as e:
        print(str(e), file=sys.stderr)
        return 1
    except UsageError as e:
        print(f"error=usage detail={e}", file=sys.stderr)
        return 2
    except FormatError as e:
        print(f"error=parse detail={e}", file=sys.stderr)
        return 2
    except (C4FreeError, ValueError) as e:
        print(f"error={type(e).__name__} detail={e}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

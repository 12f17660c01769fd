"""Independent brute-force references used by the tests.

Nothing here imports the code paths it is used to check.
"""

from itertools import combinations, product


def has_c4_matrix(mat):
    """Any 2x2 all-ones minor, by enumerating row and column pairs."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    for a, b in combinations(range(m), 2):
        for c, d in combinations(range(n), 2):
            if mat[a][c] and mat[a][d] and mat[b][c] and mat[b][d]:
                return True
    return False


def brute_force_z(m, n):
    """Max edges over all 2^(mn) subgraphs of K_{m,n} with no 4-cycle."""
    best = 0
    row_mask = (1 << n) - 1
    for code in range(1 << (m * n)):
        e = bin(code).count("1")
        if e <= best:
            continue
        rows = [(code >> (u * n)) & row_mask for u in range(m)]
        if all(bin(rows[a] & rows[b]).count("1") < 2
               for a in range(m) for b in range(a + 1, m)):
            best = e
    return best


def brute_force_z_rows(m, n):
    """Max edges via multisets of rows (row order is irrelevant)."""
    from itertools import combinations_with_replacement
    best = 0
    for rows in combinations_with_replacement(range(1 << n), m):
        e = sum(bin(r).count("1") for r in rows)
        if e <= best:
            continue
        if all(bin(rows[a] & rows[b]).count("1") < 2
               for a in range(m) for b in range(a + 1, m)):
            best = e
    return best


def completable(cells, colors):
    """Whether the 0-cells of a square partial coloring can be filled from colors
    with no monochromatic 4-cycle in any of those colors."""
    n = len(cells)
    free = [(u, v) for u in range(n) for v in range(n) if cells[u][v] == 0]
    for choice in product(colors, repeat=len(free)):
        grid = [list(r) for r in cells]
        for (u, v), c in zip(free, choice):
            grid[u][v] = c
        ok = True
        for c in colors:
            if has_c4_matrix([[int(x == c) for x in r] for r in grid]):
                ok = False
                break
        if ok:
            return True
    return False


def poly_has_root_mod_p(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))

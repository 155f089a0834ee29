"""Shared helpers: independent oracles and seeded random coloring builders.

The oracles here deliberately re-derive everything from first principles
(plain nested loops, inline index arithmetic) so that agreement with the
library is evidence, not circularity.
"""

import random
from itertools import combinations, permutations

from gallaikit.coloring import EdgeColoring, make_coloring


def naive_mono(c: EdgeColoring, pattern, color: int) -> bool:
    """Subset-bijection enumeration: does any injective copy sit in this color?

    Index arithmetic is inlined on purpose; it re-derives the row-major
    upper-triangle layout instead of calling the library's edge_index.
    """
    pe = tuple(pattern.edges)
    cols = c.colors
    n = c.n
    if pattern.m > n:
        return False
    for sub in combinations(range(n), pattern.m):
        for per in permutations(sub):
            for a, b in pe:
                u, v = per[a], per[b]
                if u > v:
                    u, v = v, u
                if cols[u * (2 * n - u - 1) // 2 + (v - u - 1)] != color:
                    break
            else:
                return True
    return False


def naive_rainbow(c: EdgeColoring) -> tuple[int, int, int] | None:
    """First triangle wearing three distinct colors, scanning lexicographically."""
    for u, v, w in combinations(range(c.n), 3):
        a, b, d = c.color(u, v), c.color(u, w), c.color(v, w)
        if a != b and a != d and b != d:
            return (u, v, w)
    return None


def random_coloring(rng: random.Random, n: int, k: int) -> EdgeColoring:
    cmap = {}
    for i in range(n):
        for j in range(i + 1, n):
            cmap[(i, j)] = rng.randint(1, k)
    return make_coloring(n, k, cmap)


def random_gallai_blowup(rng: random.Random, n: int, k: int) -> EdgeColoring:
    """Rainbow-triangle-free coloring built by recursive substitution.

    Any 2-colored base is rainbow-free, and blow-ups preserve that, so the
    result is rainbow-free by construction without ever running a checker.
    """
    from gallaikit.coloring import blowup

    if n == 1:
        return make_coloring(1, k, {})
    t = rng.randint(2, min(n, 5))
    # split n into t positive part sizes
    cuts = sorted(rng.sample(range(1, n), t - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    two = rng.sample(range(1, k + 1), min(2, k))
    base_map = {}
    for i in range(t):
        for j in range(i + 1, t):
            base_map[(i, j)] = rng.choice(two)
    base = make_coloring(t, k, base_map)
    parts = [random_gallai_blowup(rng, s, k) for s in sizes]
    return blowup(base, parts)


def recheck_partition(c: EdgeColoring, gp) -> None:
    """Independent validity conditions, re-derived with plain loops."""
    seen = sorted(v for part in gp.parts for v in part)
    assert seen == list(range(c.n)), "parts must partition the vertex set"
    assert len(gp.parts) >= 2
    assert gp.ell == len(gp.parts)
    cross_colors = set()
    for a in range(len(gp.parts)):
        for b in range(a + 1, len(gp.parts)):
            between = {c.color(u, v) for u in gp.parts[a] for v in gp.parts[b]}
            assert len(between) == 1, "each pair of parts must be mc-adjacent"
            cross_colors |= between
    assert len(cross_colors) <= 2, "at most two colors may appear between parts"
    for a in range(len(gp.parts)):
        for b in range(a + 1, len(gp.parts)):
            u, v = gp.parts[a][0], gp.parts[b][0]
            assert gp.quotient.color(a, b) == c.color(u, v)


def plant_rainbow(rng: random.Random, c: EdgeColoring) -> EdgeColoring:
    """Overwrite one triangle with three distinct colors (needs k >= 3, n >= 3)."""
    assert c.k >= 3 and c.n >= 3
    u, v, w = sorted(rng.sample(range(c.n), 3))
    chosen = rng.sample(range(1, c.k + 1), 3)
    cmap = {pair: col for pair, col in c.items()}
    cmap[(u, v)], cmap[(u, w)], cmap[(v, w)] = chosen
    return make_coloring(c.n, c.k, cmap)

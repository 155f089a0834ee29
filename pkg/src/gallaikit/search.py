"""Backtracking search over edge colorings of small complete graphs.

Edges are assigned in lexicographic order, colors in increasing order, so
the first witness found is the lexicographically least valid coloring.
Pruning is incremental: coloring an edge only re-checks pattern images and
triangles whose last edge (in assignment order) is that edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import EdgeColoring, edge_count, edge_index, edge_list
from .detect import AvoidanceSpec, enumerate_pattern_images, verify
from .patterns import canonical_id, resolve

# full-enumeration cap: k^(edge count) states
EXHAUST_BUDGET = 1 << 21


class SearchError(Exception):
    pass


class ScopeExceededError(SearchError):
    pass


@dataclass(frozen=True)
class SearchProblem:
    """Forbidden pattern per color (None = unconstrained) on K_n."""

    n: int
    per_color: tuple[Optional[str], ...]
    require_gallai: bool = False
    mode: str = "first"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise SearchError(f"need n >= 1, got {self.n}")
        if not self.per_color:
            raise SearchError("per_color must list at least one color")
        if self.mode not in ("first", "exhaust"):
            raise SearchError(f"mode must be first or exhaust, got {self.mode!r}")
        canon = tuple(
            None if pid is None else canonical_id(pid) for pid in self.per_color
        )
        for pid in canon:
            if pid is not None:
                resolve(pid)
        object.__setattr__(self, "per_color", canon)

    @property
    def k(self) -> int:
        return len(self.per_color)


@dataclass(frozen=True)
class SearchOutcome:
    kind: str  # "witness" or "exhausted"
    witness: Optional[EdgeColoring]
    nodes_explored: int
    symmetry_reduced: bool


def _completion_tables(problem: SearchProblem) -> list[list[list[int]]]:
    """mono[e][c] = masks of earlier edges that, all in color c, finish an
    image of the color's forbidden pattern when edge e takes color c."""
    n, k = problem.n, problem.k
    e_total = edge_count(n)
    table: list[list[list[int]]] = [[[] for _ in range(k + 1)] for _ in range(e_total)]
    for color, pid in enumerate(problem.per_color, start=1):
        if pid is None:
            continue
        pattern = resolve(pid)
        if pattern.m > n:
            continue
        for image in enumerate_pattern_images(pattern, n):
            mask = 0
            top = -1
            for i, j in image:
                e = edge_index(n, i, j)
                mask |= 1 << e
                top = max(top, e)
            table[top][color].append(mask ^ (1 << top))
    return table


def _triangle_tables(n: int) -> list[list[tuple[int, int]]]:
    """tri[e] = (earlier, earlier) edge index pairs closing a triangle at e."""
    tri: list[list[tuple[int, int]]] = [[] for _ in range(edge_count(n))]
    for pos, (y, z) in enumerate(edge_list(n)):
        for x in range(y):
            tri[pos].append((edge_index(n, x, y), edge_index(n, x, z)))
    return tri


def _spec_of(problem: SearchProblem) -> AvoidanceSpec:
    per = {c: pid for c, pid in enumerate(problem.per_color, start=1)}
    return AvoidanceSpec.from_map(per, require_gallai=problem.require_gallai)


def exhaustive_check(
    problem: SearchProblem, max_nodes: int | None = None
) -> SearchOutcome:
    """First lexicographic witness, or proof by traversal that none exists.

    Mode "exhaust" insists the whole state space fits under EXHAUST_BUDGET
    before starting; mode "first" has no such cap and may run long.  When
    every color forbids the same pattern, the first edge is pinned to color
    1 (any witness can be recolored to one of that form), and the outcome
    records that the traversal used the reduction.
    """
    n, k = problem.n, problem.k
    e_total = edge_count(n)
    if problem.mode == "exhaust" and k**e_total > EXHAUST_BUDGET:
        raise ScopeExceededError(
            f"{k}^{e_total} states exceeds the enumeration budget"
        )
    symmetric = k >= 2 and len(set(problem.per_color)) == 1
    if e_total == 0:
        witness = EdgeColoring(n, k, ())
        return SearchOutcome("witness", witness, 0, False)
    mono = _completion_tables(problem)
    tri = (
        _triangle_tables(n)
        if problem.require_gallai and k >= 3
        else [[] for _ in range(e_total)]
    )

    choice = [0] * e_total
    placed = [False] * e_total
    col_mask = [0] * (k + 1)
    pos = 0
    nodes = 0
    while True:
        if placed[pos]:
            col_mask[choice[pos]] ^= 1 << pos
            placed[pos] = False
        limit = 1 if pos == 0 and symmetric else k
        color = choice[pos] + 1
        advanced = False
        while color <= limit:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise ScopeExceededError(f"node budget {max_nodes} exhausted")
            cm = col_mask[color]
            ok = True
            for rem in mono[pos][color]:
                if rem & cm == rem:
                    ok = False
                    break
            if ok:
                for e1, e2 in tri[pos]:
                    c1, c2 = choice[e1], choice[e2]
                    if c1 != c2 and c1 != color and c2 != color:
                        ok = False
                        break
            if ok:
                choice[pos] = color
                col_mask[color] = cm | (1 << pos)
                placed[pos] = True
                advanced = True
                break
            color += 1
        if advanced:
            pos += 1
            if pos == e_total:
                witness = EdgeColoring(n, k, tuple(choice))
                report = verify(witness, _spec_of(problem))
                if not report.passed:
                    raise SearchError("witness failed its own certification")
                return SearchOutcome("witness", witness, nodes, symmetric)
            continue
        choice[pos] = 0
        pos -= 1
        if pos < 0:
            return SearchOutcome("exhausted", None, nodes, symmetric)

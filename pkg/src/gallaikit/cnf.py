"""DIMACS CNF encoding of coloring search problems for external solvers.

Variable v(e, c) = e*k + c for 0-based lexicographic edge index e and color
c in 1..k, so variables run 1..E*k.  Clause groups, in emission order:
one-color-at-least per edge, one-color-at-most per edge, rainbow-triangle
blockers (ordered color triples), and one all-negative clause per
monochromatic pattern image.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from .coloring import EdgeColoring, edge_count, edge_index, edge_list
from .detect import enumerate_pattern_images
from .patterns import resolve
from .search import SearchProblem


class CnfError(Exception):
    pass


class NotExactlyOneError(CnfError):
    pass


@dataclass(frozen=True)
class CnfDocument:
    n: int
    k: int
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars != edge_count(self.n) * self.k:
            raise CnfError("num_vars must be edge_count * k")
        for clause in self.clauses:
            if not clause:
                raise CnfError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range")

    def var_of(self, i: int, j: int, color: int) -> int:
        if not 1 <= color <= self.k:
            raise CnfError(f"color {color} outside 1..{self.k}")
        return edge_index(self.n, i, j) * self.k + color

    def decode_var(self, var: int) -> tuple[int, int, int]:
        """(i, j, color) for a positive variable index."""
        if not 1 <= var <= self.num_vars:
            raise CnfError(f"variable {var} outside 1..{self.num_vars}")
        e, color = divmod(var - 1, self.k)
        return (*edge_list(self.n)[e], color + 1)

    def var_map_lines(self) -> list[str]:
        lines = [f"c var((i,j),c) = edge_index(i,j)*{self.k} + c; edges lexicographic"]
        for i, j in edge_list(self.n):
            base = edge_index(self.n, i, j) * self.k
            lines.append(
                f"c edge ({i},{j}): vars {base + 1}..{base + self.k}"
            )
        return lines

    def to_dimacs(self, include_map: bool = True) -> str:
        lines = []
        if include_map:
            lines.extend(self.var_map_lines())
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"


def encode_cnf(problem: SearchProblem) -> CnfDocument:
    """CNF whose models are exactly the valid colorings of the problem."""
    n, k = problem.n, problem.k
    if n < 2:
        raise CnfError(f"need n >= 2, got {n}")
    e_total = edge_count(n)

    def var(e: int, c: int) -> int:
        return e * k + c

    clauses: list[tuple[int, ...]] = []
    for e in range(e_total):
        clauses.append(tuple(var(e, c) for c in range(1, k + 1)))
    for e in range(e_total):
        for c1, c2 in combinations(range(1, k + 1), 2):
            clauses.append((-var(e, c1), -var(e, c2)))
    if problem.require_gallai and k >= 3:
        for x, y, z in combinations(range(n), 3):
            exy = edge_index(n, x, y)
            exz = edge_index(n, x, z)
            eyz = edge_index(n, y, z)
            for c1, c2, c3 in permutations(range(1, k + 1), 3):
                clauses.append((-var(exy, c1), -var(exz, c2), -var(eyz, c3)))
    for color, pid in enumerate(problem.per_color, start=1):
        if pid is None:
            continue
        pattern = resolve(pid)
        if pattern.m > n:
            continue
        for image in enumerate_pattern_images(pattern, n):
            clauses.append(
                tuple(-var(edge_index(n, i, j), color) for i, j in image)
            )
    return CnfDocument(n, k, e_total * k, tuple(clauses))


def _true_set(doc: CnfDocument, assignment: Iterable[int]) -> set[int]:
    true_vars: set[int] = set()
    for lit in assignment:
        if lit == 0 or abs(lit) > doc.num_vars:
            raise CnfError(f"literal {lit} out of range")
        if lit > 0:
            true_vars.add(lit)
    return true_vars


def decode_assignment(
    doc: CnfDocument,
    assignment: Iterable[int],
    n: int | None = None,
    k: int | None = None,
) -> EdgeColoring:
    """Coloring selected by the positive literals of a total assignment."""
    if n is not None and n != doc.n:
        raise CnfError(f"n={n} disagrees with the document's {doc.n}")
    if k is not None and k != doc.k:
        raise CnfError(f"k={k} disagrees with the document's {doc.k}")
    true_vars = _true_set(doc, assignment)
    colors = []
    for e, (i, j) in enumerate(edge_list(doc.n)):
        picked = [c for c in range(1, doc.k + 1) if e * doc.k + c in true_vars]
        if len(picked) != 1:
            raise NotExactlyOneError(
                f"edge ({i},{j}) has {len(picked)} colors set"
            )
        colors.append(picked[0])
    return EdgeColoring(doc.n, doc.k, tuple(colors))


def assignment_satisfies(doc: CnfDocument, assignment: Iterable[int]) -> bool:
    true_vars = _true_set(doc, assignment)
    for clause in doc.clauses:
        if not any(
            (lit > 0 and lit in true_vars) or (lit < 0 and -lit not in true_vars)
            for lit in clause
        ):
            return False
    return True


def parse_dimacs(text: str) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """(num_vars, clauses) from DIMACS text; comments are skipped."""
    num_vars: Optional[int] = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise CnfError(f"bad problem line {line!r}")
            num_vars = int(fields[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if pending:
                    clauses.append(tuple(pending))
                    pending = []
            else:
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if num_vars is None:
        raise CnfError("missing problem line")
    return num_vars, tuple(clauses)


def parse_model(text: str) -> Optional[set[int]]:
    """True variables from solver output, or None for an UNSAT result."""
    true_vars: set[int] = set()
    saw_lits = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        upper = line.upper()
        if upper.startswith("S "):
            if "UNSAT" in upper:
                return None
            continue
        if upper in ("SAT", "SATISFIABLE"):
            continue
        if upper in ("UNSAT", "UNSATISFIABLE"):
            return None
        if line.startswith(("v", "V")):
            line = line[1:]
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                break
            saw_lits = True
            if lit > 0:
                true_vars.add(lit)
    if not saw_lits:
        raise CnfError("no literals found in model text")
    return true_vars

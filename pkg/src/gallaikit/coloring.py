"""Edge colorings of complete graphs.

An EdgeColoring assigns a color from {1, ..., k} to every unordered pair of
n labeled vertices.  Colors are stored densely over the upper triangle in
lexicographic edge order: (0,1), (0,2), ..., (0,n-1), (1,2), ...

The text format ("grc") mirrors that layout.  Line 1 is the header
``grc 1 <n> <k>``; line i+1 (for i = 0 .. n-2) lists the colors of the edges
(i,i+1), (i,i+2), ..., (i,n-1) separated by single spaces.  serialize always
emits exactly that shape; parse tolerates extra whitespace but checks every
count against the header.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence, Union


class ColoringError(Exception):
    """Base class for coloring construction and io errors."""


class MissingEdgeError(ColoringError):
    """An explicit edge list left some pair uncolored."""


class DuplicateEdgeError(ColoringError):
    """An explicit edge list colored some pair twice."""


class ColorRangeError(ColoringError):
    """A color fell outside 1..k."""


class ArityMismatchError(ColoringError):
    """A composition got the wrong number of arguments."""


class NonInjectiveMapError(ColoringError):
    """A relabeling sent two used colors to the same target."""


class UnmappedColorError(ColoringError):
    """A relabeling left a used color without a target."""


class GrcSyntaxError(ColoringError):
    """Malformed grc text."""


class GrcHeaderError(ColoringError):
    """grc body inconsistent with its header counts."""


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    """Position of edge (i, j) in lexicographic order over K_n."""
    if i > j:
        i, j = j, i
    if i == j or i < 0 or j >= n:
        raise ColoringError(f"bad edge ({i}, {j}) for n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def edge_list(n: int) -> list[tuple[int, int]]:
    """All edges of K_n in lexicographic order."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class EdgeColoring:
    """Complete graph on n vertices, one color in 1..k per edge.

    Immutable; equality and hashing are structural.  k is declared, not
    inferred, so a coloring may use fewer colors than it reserves.
    """

    n: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ColoringError(f"need n >= 1, got n={self.n}")
        if self.k < 1:
            raise ColorRangeError(f"need k >= 1, got k={self.k}")
        if len(self.colors) != edge_count(self.n):
            raise ColoringError(
                f"n={self.n} needs {edge_count(self.n)} colors, got {len(self.colors)}"
            )
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise ColorRangeError(f"color {c} outside 1..{self.k}")

    def color(self, i: int, j: int) -> int:
        return self.colors[edge_index(self.n, i, j)]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Yield ((i, j), color) in lexicographic edge order."""
        for idx, pair in enumerate(combinations(range(self.n), 2)):
            yield pair, self.colors[idx]

    def colors_used(self) -> frozenset[int]:
        return frozenset(self.colors)


EntrySpec = Union[Mapping[tuple[int, int], int], Iterable[tuple[int, int, int]]]


def make_coloring(n: int, k: int, entries: EntrySpec) -> EdgeColoring:
    """Build a coloring from explicit per-edge entries.

    entries is either a {(i, j): color} mapping or an iterable of
    (i, j, color) triples; endpoint order within a pair does not matter.
    Every edge must appear exactly once.
    """
    if isinstance(entries, Mapping):
        triples = [(i, j, c) for (i, j), c in entries.items()]
    else:
        triples = [(i, j, c) for i, j, c in entries]
    if n < 1:
        raise ColoringError(f"need n >= 1, got n={n}")
    if k < 1:
        raise ColorRangeError(f"need k >= 1, got k={k}")
    slots: list[int | None] = [None] * edge_count(n)
    for i, j, c in triples:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ColoringError(f"bad edge ({i}, {j}) for n={n}")
        idx = edge_index(n, i, j)
        if slots[idx] is not None:
            raise DuplicateEdgeError(f"edge ({min(i, j)}, {max(i, j)}) colored twice")
        if not 1 <= c <= k:
            raise ColorRangeError(f"color {c} outside 1..{k} on edge ({i}, {j})")
        slots[idx] = c
    for idx, c in enumerate(slots):
        if c is None:
            raise MissingEdgeError(f"edge {edge_list(n)[idx]} has no color")
    return EdgeColoring(n, k, tuple(slots))  # type: ignore[arg-type]


def join(left: EdgeColoring, right: EdgeColoring, bridge_color: int) -> EdgeColoring:
    """Disjoint copies of left and right with all cross edges in bridge_color.

    Left keeps its labels, right is shifted by left.n.  The result declares
    max(left.k, right.k, bridge_color) colors.
    """
    if bridge_color < 1:
        raise ColorRangeError(f"need bridge color >= 1, got {bridge_color}")
    n = left.n + right.n
    k = max(left.k, right.k, bridge_color)
    ln = left.n
    out = []
    for i, j in combinations(range(n), 2):
        if j < ln:
            out.append(left.color(i, j))
        elif i >= ln:
            out.append(right.color(i - ln, j - ln))
        else:
            out.append(bridge_color)
    return EdgeColoring(n, k, tuple(out))


def blowup(base: EdgeColoring, parts: Sequence[EdgeColoring]) -> EdgeColoring:
    """Substitute parts[v] for each base vertex v.

    Edges inside a part keep the part's colors; edges between two parts take
    the base color of the corresponding base edge.  Vertices are numbered
    part by part in base vertex order, preserving within-part order.
    """
    if len(parts) != base.n:
        raise ArityMismatchError(f"base has {base.n} vertices, got {len(parts)} parts")
    owner: list[int] = []
    local: list[int] = []
    for p_id, part in enumerate(parts):
        owner.extend([p_id] * part.n)
        local.extend(range(part.n))
    n = len(owner)
    k = max([base.k] + [p.k for p in parts])
    out = []
    for i, j in combinations(range(n), 2):
        pi, pj = owner[i], owner[j]
        if pi == pj:
            out.append(parts[pi].color(local[i], local[j]))
        else:
            out.append(base.color(pi, pj))
    return EdgeColoring(n, k, tuple(out))


@dataclass(frozen=True)
class ColorRelabeling:
    """Injective map on used colors, plus the new declared color count."""

    mapping: tuple[tuple[int, int], ...]
    new_k: int

    @classmethod
    def of(cls, mapping: Mapping[int, int], new_k: int) -> "ColorRelabeling":
        return cls(tuple(sorted(mapping.items())), new_k)

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)


def relabel_colors(
    c: EdgeColoring,
    relabeling: Union[ColorRelabeling, Mapping[int, int]],
    new_k: int | None = None,
) -> EdgeColoring:
    """Apply a color relabeling.

    The map must cover every color the coloring actually uses, be injective
    on those, and land inside 1..new_k.  Unused colors may be left unmapped.
    """
    if isinstance(relabeling, ColorRelabeling):
        table = relabeling.as_dict()
        new_k = relabeling.new_k
    else:
        table = dict(relabeling)
        if new_k is None:
            raise ColoringError("new_k is required with a plain mapping")
    if new_k < 1:
        raise ColorRangeError(f"need new_k >= 1, got {new_k}")
    used = sorted(set(c.colors))
    for old in used:
        if old not in table:
            raise UnmappedColorError(f"color {old} is used but not mapped")
    targets = [table[old] for old in used]
    for t in targets:
        if not 1 <= t <= new_k:
            raise ColorRangeError(f"relabel target {t} outside 1..{new_k}")
    if len(set(targets)) != len(targets):
        raise NonInjectiveMapError("two used colors map to the same target")
    lookup = {old: table[old] for old in used}
    return EdgeColoring(c.n, new_k, tuple(lookup[x] for x in c.colors))


def serialize(c: EdgeColoring) -> str:
    """Canonical grc text: header, then one row per leading vertex."""
    lines = [f"grc 1 {c.n} {c.k}"]
    for i in range(c.n - 1):
        lines.append(" ".join(str(c.color(i, j)) for j in range(i + 1, c.n)))
    return "\n".join(lines) + "\n"


def parse(text: str) -> EdgeColoring:
    """Inverse of serialize; raises on any structural inconsistency."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GrcSyntaxError("empty document")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "grc":
        raise GrcSyntaxError("header must be 'grc 1 <n> <k>'")
    if head[1] != "1":
        raise GrcSyntaxError(f"unsupported format version {head[1]!r}")
    try:
        n, k = int(head[2]), int(head[3])
    except ValueError:
        raise GrcSyntaxError("header n and k must be integers") from None
    if n < 1 or k < 1:
        raise GrcHeaderError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    rows = list(lines[1:])
    while rows and not rows[-1].strip():
        rows.pop()
    if len(rows) != n - 1:
        raise GrcHeaderError(f"expected {n - 1} rows after the header, got {len(rows)}")
    flat: list[int] = []
    for i, row in enumerate(rows):
        toks = row.split()
        if len(toks) != n - 1 - i:
            raise GrcHeaderError(
                f"row {i} should list {n - 1 - i} colors, got {len(toks)}"
            )
        for t in toks:
            try:
                col = int(t)
            except ValueError:
                raise GrcSyntaxError(f"bad color token {t!r} in row {i}") from None
            if not 1 <= col <= k:
                raise ColorRangeError(f"color {col} outside 1..{k} in row {i}")
            flat.append(col)
    return EdgeColoring(n, k, tuple(flat))


def read_grc(path) -> EdgeColoring:
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read())


def write_grc(c: EdgeColoring, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize(c))

"""Builders for the lower-bound colorings.

Everything here assembles edge colorings that avoid a monochromatic target
pattern in every color (or, for the mixed family, a fan in low colors and a
two-edge path in high colors) while staying rainbow-triangle-free.  The
recursive towers realize the closed-form sizes in formulas; every public
builder certifies its output with detect.verify before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .coloring import (
    EdgeColoring,
    blowup,
    edge_list,
    join,
    parse,
    relabel_colors,
    serialize,
)
from .detect import AvoidanceSpec, color_neighbor_masks, verify
from .formulas import (
    RangeViolationError,
    UnsupportedTargetError,
    fan_param,
    g_value,
    ramsey_two,
    w_value,
)
from .patterns import canonical_id

# node budget for fixture searches; generous for n <= 9 hosts
_SEARCH_NODE_CAP = 20_000_000


class ConstructionError(Exception):
    pass


class EqualColorsError(ConstructionError):
    pass


class ParityViolationError(ConstructionError):
    pass


class UnsupportedKipasError(ConstructionError):
    pass


class NoFixtureAndSearchFailedError(ConstructionError):
    pass


class CertificationError(ConstructionError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class BaseParams:
    """Effective base-pattern parameters driving the tower branch rule."""

    h_order: int
    r2: int

    def __post_init__(self) -> None:
        if self.h_order < 3:
            raise RangeViolationError(f"need h_order >= 3, got {self.h_order}")
        if self.r2 <= self.h_order:
            raise RangeViolationError(f"need r2 > h_order, got {self.r2}")


@dataclass(frozen=True)
class ConstructionRequest:
    """One build order: a target tower, or the mixed family when s is set."""

    target: str | None
    k: int
    s: int | None = None
    r2: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise RangeViolationError(f"need k >= 1, got {self.k}")
        if (self.s is None) == (self.target is None):
            raise ConstructionError("give exactly one of target or s")

    def build(self, certify: bool = True) -> EdgeColoring:
        if self.s is not None:
            return build_mixed(self.k, self.s, certify=certify)
        return build_lower(self.target, self.k, r2=self.r2, certify=certify)


def _certify(c: EdgeColoring, spec: AvoidanceSpec, label: str) -> None:
    report = verify(c, spec)
    if not report.passed:
        raise CertificationError(f"{label} failed certification", report)


def mono_complete(n: int, color: int = 1, k: int | None = None) -> EdgeColoring:
    """Complete graph with every edge in one color."""
    if n < 1:
        raise RangeViolationError(f"need n >= 1, got {n}")
    if color < 1:
        raise RangeViolationError(f"need color >= 1, got {color}")
    if k is None:
        k = color
    return EdgeColoring(n, k, tuple(color for _ in range(n * (n - 1) // 2)))


def base_pentagon(cycle_color: int, chord_color: int) -> EdgeColoring:
    """K5 in two colors with no monochromatic triangle.

    The 5-cycle (i, i+1 mod 5) takes cycle_color, the five chords take
    chord_color; both color classes are 5-cycles.
    """
    if cycle_color == chord_color:
        raise EqualColorsError("cycle and chord colors must differ")
    if cycle_color < 1 or chord_color < 1:
        raise RangeViolationError("colors start at 1")
    k = max(cycle_color, chord_color)
    out = []
    for i, j in edge_list(5):
        on_cycle = (j - i) % 5 in (1, 4)
        out.append(cycle_color if on_cycle else chord_color)
    return EdgeColoring(5, k, tuple(out))


def _two_blocks() -> EdgeColoring:
    # color 1: two disjoint K4 blocks; color 2: the complete bipartite rest
    return EdgeColoring(
        8, 2, tuple(1 if i // 4 == j // 4 else 2 for i, j in edge_list(8))
    )


def _rook_grid() -> EdgeColoring:
    # 3x3 grid; color 1 joins same row or same column.  Both color classes
    # are strongly regular (9,4,1,2): every edge lies in exactly one
    # triangle, so neither contains a K4 minus an edge.
    def shade(i: int, j: int) -> int:
        return 1 if i // 3 == j // 3 or i % 3 == j % 3 else 2

    return EdgeColoring(9, 2, tuple(shade(i, j) for i, j in edge_list(9)))


def _k4_plus_cone() -> EdgeColoring:
    # color 1: K4 on {0..3}; color 2: everything meeting {4,5}.  Color 2's
    # triangles all use both 4 and 5, leaving no disjoint same-color edge.
    return EdgeColoring(
        6, 2, tuple(1 if j < 4 else 2 for i, j in edge_list(6))
    )


_SEEDS = {
    "kipas(2)": lambda: base_pentagon(1, 2),
    "h10": _k4_plus_cone,
    "h1": _two_blocks,
    "h2": _two_blocks,
    "h3": _two_blocks,
    "h4": _two_blocks,
    "h5": _rook_grid,
    "h6": _rook_grid,
    "h11": _rook_grid,
    "h12": _rook_grid,
    "kipas(3)": _rook_grid,
    "kipas(4)": _rook_grid,
}

# h12 is isomorphic to kipas(4); they share one fixture file
_FIXTURE_ALIASES = {"h12": "kipas(4)"}


def fixture_basename(target: str) -> str:
    cid = canonical_id(target)
    cid = _FIXTURE_ALIASES.get(cid, cid)
    return cid.replace("(", "_").replace(")", "") + ".grc"


def load_fixture(target: str) -> EdgeColoring | None:
    """Parse the packaged extremal coloring for target, or None if absent."""
    name = fixture_basename(target)
    ref = resources.files(__package__).joinpath("fixtures").joinpath(name)
    if not ref.is_file():
        return None
    return parse(ref.read_text(encoding="ascii"))


def _searched_extremal(cid: str, n: int, max_nodes: int) -> EdgeColoring:
    from .search import ScopeExceededError, SearchProblem, exhaustive_check

    problem = SearchProblem(
        n=n, per_color=(cid, cid), require_gallai=False, mode="first"
    )
    try:
        outcome = exhaustive_check(problem, max_nodes=max_nodes)
    except ScopeExceededError as exc:
        raise NoFixtureAndSearchFailedError(
            f"extremal search for {cid} on {n} vertices ran out of budget"
        ) from exc
    if outcome.kind != "witness":
        raise NoFixtureAndSearchFailedError(
            f"no {cid}-avoiding 2-coloring on {n} vertices exists"
        )
    return outcome.witness


def extremal_two_coloring(
    target: str,
    certify: bool = True,
    r2: int | None = None,
    use_fixture: bool = True,
) -> EdgeColoring:
    """Two-coloring on R2(target)-1 vertices avoiding target in both colors.

    Prefers the packaged fixture, falls back to the hardcoded seed, and as a
    last resort runs a first-witness backtracking search (the route for a
    fan outside the stored table, where r2 must be supplied).
    """
    cid = canonical_id(target)
    if r2 is None:
        r2 = ramsey_two(cid)
    elif r2 < 3:
        raise RangeViolationError(f"need r2 >= 3, got {r2}")
    n = r2 - 1
    c = load_fixture(cid) if use_fixture else None
    if c is not None and (c.n != n or c.k != 2):
        raise ConstructionError(
            f"fixture for {cid} has shape ({c.n}, {c.k}), expected ({n}, 2)"
        )
    if c is None:
        maker = _SEEDS.get(cid)
        c = maker() if maker is not None else _searched_extremal(cid, n, _SEARCH_NODE_CAP)
    if c.n != n:
        raise ConstructionError(f"extremal for {cid} has {c.n} vertices, want {n}")
    if certify:
        _certify(c, AvoidanceSpec.forbid_all(cid, 2), f"extremal({cid})")
    return c


def _aux(m: int, k: int, top: int) -> EdgeColoring:
    # recursion keeps the caller's top color, so top may exceed k here
    if k == 4:
        return blowup(base_pentagon(1, 2), [mono_complete(m // 2, top)] * 5)
    return blowup(base_pentagon(k - 3, k - 2), [_aux(m, k - 2, top)] * 5)


def _clique_cover_ok(c: EdgeColoring, color: int, order: int) -> bool:
    """True iff the color class is a disjoint union of K_order covering V."""
    nbr = color_neighbor_masks(c)[color]
    seen = 0
    for v in range(c.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        while True:
            grown = comp
            w = comp
            while w:
                low = w & -w
                grown |= nbr[low.bit_length() - 1]
                w ^= low
            if grown == comp:
                break
            comp = grown
        if comp.bit_count() != order:
            return False
        w = comp
        while w:
            low = w & -w
            u = low.bit_length() - 1
            if nbr[u] != comp ^ low:
                return False
            w ^= low
        seen |= comp
    return True


def build_kipas_aux(
    m: int, k: int, top_color: int, certify: bool = True
) -> EdgeColoring:
    """Auxiliary tower for the even-fan assembly.

    (m/2) * 5^((k-2)/2) vertices; the top_color class is a disjoint union of
    K_{m/2} cliques, and no other color holds a monochromatic kipas(m).
    """
    if m < 2 or m % 2:
        raise ParityViolationError(f"need even m >= 2, got {m}")
    if k < 4 or k % 2:
        raise ParityViolationError(f"need even k >= 4, got {k}")
    if top_color not in (k - 1, k):
        raise RangeViolationError(f"top color must be {k - 1} or {k}, got {top_color}")
    c = _aux(m, k, top_color)
    if c.n != (m // 2) * 5 ** ((k - 2) // 2):
        raise ConstructionError("auxiliary tower size drifted")
    if certify:
        if not _clique_cover_ok(c, top_color, m // 2):
            raise CertificationError(
                f"top color {top_color} is not a disjoint K_{m // 2} cover"
            )
        spec = AvoidanceSpec.from_map(
            {i: f"kipas({m})" for i in range(1, k - 1)}
        )
        _certify(c, spec, f"build_kipas_aux({m}, {k}, {top_color})")
    return c


def _base_params(cid: str, r2: int | None) -> tuple[str, BaseParams]:
    """Seed id and effective (h_order, r2) pair for the tower recursion."""
    if cid == "h10":
        # any triangle-free color class is h10-free, and the triangle
        # parameters give the larger tower
        return "kipas(2)", BaseParams(3, 6)
    if cid == "h12":
        return "kipas(4)", BaseParams(5, 10)
    m = fan_param(cid)
    if m is not None:
        if r2 is None:
            try:
                r2 = ramsey_two(cid)
            except UnsupportedTargetError:
                raise UnsupportedKipasError(
                    f"kipas({m}) has no stored Ramsey value; pass r2"
                ) from None
        return cid, BaseParams(m + 1, r2)
    return cid, BaseParams(5, ramsey_two(cid))


def _tower(seed_id: str, p: BaseParams, k: int, r2_arg: int | None) -> EdgeColoring:
    if k == 1:
        return mono_complete(p.h_order - 1, 1)
    if k == 2:
        return extremal_two_coloring(seed_id, certify=False, r2=r2_arg)
    if k % 2:
        if 2 * (p.r2 - 1) >= 5 * (p.h_order - 1):
            side = _tower(seed_id, p, k - 1, r2_arg)
            return join(side, side, k)
        part = _tower(seed_id, p, k - 2, r2_arg)
        return blowup(base_pentagon(k - 1, k), [part] * 5)
    m = fan_param(seed_id)
    if m is not None and m % 2 == 0:
        # five-part assembly: the two color-k towers sit on a chord, the
        # two color-(k-1) towers sit adjacent on the cycle
        hi = _aux(m, k, k)
        lo = _aux(m, k, k - 1)
        sub = _tower(seed_id, p, k - 2, r2_arg)
        return blowup(base_pentagon(k, k - 1), [hi, lo, lo, hi, sub])
    part = _tower(seed_id, p, k - 2, r2_arg)
    return blowup(base_pentagon(k - 1, k), [part] * 5)


def build_lower(
    target: str, k: int, r2: int | None = None, certify: bool = True
) -> EdgeColoring:
    """k-coloring on g_value(target, k) vertices with no monochromatic target.

    k=1 is a bare clique, k=2 the extremal two-coloring; odd k joins two
    towers when 2(R2-1) >= 5(|H|-1) and otherwise blows up a fresh pentagon
    with five k-2 towers; even k blows up a pentagon, except even fans,
    which take the five-part assembly.  h10 rides the triangle tower for
    k >= 3 and h12 rides kipas(4).
    """
    if k < 1:
        raise RangeViolationError(f"need k >= 1, got {k}")
    cid = canonical_id(target)
    if k <= 2 and cid == "h10":
        seed_id, p = "h10", BaseParams(5, ramsey_two("h10"))
    else:
        seed_id, p = _base_params(cid, r2)
    c = _tower(seed_id, p, k, r2)
    expect = g_value(cid, k, r2)
    if c.n != expect:
        raise ConstructionError(f"built {c.n} vertices for {cid}, k={k}; want {expect}")
    if certify:
        _certify(c, AvoidanceSpec.forbid_all(cid, k), f"build_lower({cid}, {k})")
    return c


def assemble_case3(
    m: int, k: int, r2: int | None = None, certify: bool = True
) -> EdgeColoring:
    """Five-part assembly for an even fan at even k.

    Pentagon with cycle color k and chord color k-1; parts in cycle order
    are two top-color-k towers at cycle distance two, two top-color-(k-1)
    towers adjacent on the cycle, and one k-2 tower in the last slot.
    """
    if m < 2 or m % 2:
        raise ParityViolationError(f"need even m >= 2, got {m}")
    if k < 4 or k % 2:
        raise ParityViolationError(f"need even k >= 4, got {k}")
    cid = f"kipas({m})"
    seed_id, p = _base_params(cid, r2)
    hi = _aux(m, k, k)
    lo = _aux(m, k, k - 1)
    sub = _tower(seed_id, p, k - 2, r2)
    c = blowup(base_pentagon(k, k - 1), [hi, lo, lo, hi, sub])
    expect = g_value(cid, k, r2)
    if c.n != expect:
        raise ConstructionError(f"assembled {c.n} vertices for {cid}; want {expect}")
    if certify:
        _certify(c, AvoidanceSpec.forbid_all(cid, k), f"assemble_case3({m}, {k})")
    return c


def _mixed(k: int, s: int) -> EdgeColoring:
    if s == k:
        seed_id, p = _base_params("kipas(4)", None)
        return _tower(seed_id, p, k, None)
    if s == 0:
        return EdgeColoring(2, k, (k,))
    if s == 1:
        edge = mono_complete(2, k)
        return join(edge, edge, 1)
    inner = _mixed(k - 2, s - 2)
    # reserve colors s-1 and s for the pentagon; everything above shifts up
    shifted = relabel_colors(
        inner,
        {c: (c if c <= s - 2 else c + 2) for c in range(1, k - 1)},
        new_k=k,
    )
    return blowup(base_pentagon(s - 1, s), [shifted] * 5)


def build_mixed(k: int, s: int, certify: bool = True) -> EdgeColoring:
    """Coloring with no kipas(4) in colors 1..s and no P3 in colors s+1..k."""
    if k < 1:
        raise RangeViolationError(f"need k >= 1, got {k}")
    if not 0 <= s <= k:
        raise RangeViolationError(f"need 0 <= s <= k, got s={s}")
    c = _mixed(k, s)
    expect = w_value(k, s)
    if c.n != expect:
        raise ConstructionError(f"built {c.n} vertices for s={s}, k={k}; want {expect}")
    if certify:
        per_color: dict[int, str] = {}
        for i in range(1, s + 1):
            per_color[i] = "kipas(4)"
        for j in range(s + 1, k + 1):
            per_color[j] = "path(3)"
        _certify(c, AvoidanceSpec.from_map(per_color), f"build_mixed({k}, {s})")
    return c


def fixture_targets() -> tuple[str, ...]:
    """Targets with packaged extremal colorings, one per distinct file."""
    ids = [cid for cid in _SEEDS if cid not in _FIXTURE_ALIASES]
    return tuple(sorted(ids))


def regenerate_fixtures(
    dest=None, method: str = "auto", max_nodes: int = 2_000_000
) -> list[str]:
    """Rewrite the fixture files; returns the paths written.

    method "seed" writes the hardcoded colorings, "search" insists on a
    fresh backtracking witness, "auto" searches within max_nodes and falls
    back to the seed.  Every file is certified before it is written.
    """
    if method not in ("auto", "seed", "search"):
        raise ConstructionError(f"unknown method {method!r}")
    from pathlib import Path

    if dest is None:
        dest = Path(__file__).resolve().parent / "fixtures"
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    written = []
    for cid in fixture_targets():
        n = ramsey_two(cid) - 1
        c = None
        if method in ("auto", "search"):
            try:
                c = _searched_extremal(cid, n, max_nodes)
            except NoFixtureAndSearchFailedError:
                if method == "search":
                    raise
        if c is None:
            c = _SEEDS[cid]()
        _certify(c, AvoidanceSpec.forbid_all(cid, 2), f"fixture({cid})")
        path = dest / fixture_basename(cid)
        path.write_text(serialize(c), encoding="ascii")
        written.append(str(path))
    return written

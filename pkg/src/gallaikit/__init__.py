"""Toolkit for rainbow-triangle-free edge colorings of complete graphs.

Materializes Gallai-Ramsey lower-bound colorings, verifies what a
coloring avoids, extracts Gallai partitions, evaluates the closed-form
numbers the constructions realize, and certifies small Ramsey anchors by
exhaustive search or DIMACS CNF export.
"""

from .cnf import (
    CnfDocument,
    CnfError,
    NotExactlyOneError,
    assignment_satisfies,
    decode_assignment,
    encode_cnf,
    parse_dimacs,
    parse_model,
)
from .coloring import (
    ColoringError,
    EdgeColoring,
    blowup,
    edge_count,
    edge_index,
    edge_list,
    join,
    make_coloring,
    parse,
    read_grc,
    relabel_colors,
    serialize,
    write_grc,
)
from .construct import (
    BaseParams,
    ConstructionError,
    ConstructionRequest,
    EqualColorsError,
    NoFixtureAndSearchFailedError,
    ParityViolationError,
    assemble_case3,
    base_pentagon,
    build_kipas_aux,
    build_lower,
    build_mixed,
    extremal_two_coloring,
    fixture_targets,
    mono_complete,
    regenerate_fixtures,
)
from .decompose import (
    DecompositionError,
    GallaiPartition,
    InvalidPartitionError,
    RainbowTriangleError,
    TooSmallError,
    gallai_partition,
    reduced_coloring,
)
from .detect import (
    AvoidanceSpec,
    CheckStats,
    Embedding,
    VerificationReport,
    find_mono_embedding,
    find_rainbow_triangle,
    verify,
)
from .formulas import (
    FormulaError,
    GrValue,
    MissingR2Error,
    UnsupportedTargetError,
    case3_recurrence_check,
    check_inequalities_star,
    check_inequalities_star2,
    conjecture_kipas,
    fan_param,
    g_value,
    gr_mixed_value,
    gr_value,
    ramsey_mixed,
    ramsey_two,
    w_value,
)
from .patterns import (
    Pattern,
    PatternError,
    UnknownPatternError,
    are_isomorphic,
    canonical_id,
    catalog,
    chromatic_number,
    make_pattern,
    resolve,
)
from .search import (
    ScopeExceededError,
    SearchError,
    SearchOutcome,
    SearchProblem,
    exhaustive_check,
)

__version__ = "0.1.0"

__all__ = [
    "AvoidanceSpec",
    "BaseParams",
    "CheckStats",
    "CnfDocument",
    "CnfError",
    "ColoringError",
    "ConstructionError",
    "ConstructionRequest",
    "DecompositionError",
    "EdgeColoring",
    "Embedding",
    "EqualColorsError",
    "FormulaError",
    "GallaiPartition",
    "GrValue",
    "InvalidPartitionError",
    "MissingR2Error",
    "NoFixtureAndSearchFailedError",
    "NotExactlyOneError",
    "ParityViolationError",
    "Pattern",
    "PatternError",
    "RainbowTriangleError",
    "ScopeExceededError",
    "SearchError",
    "SearchOutcome",
    "SearchProblem",
    "TooSmallError",
    "UnknownPatternError",
    "UnsupportedTargetError",
    "VerificationReport",
    "are_isomorphic",
    "assemble_case3",
    "assignment_satisfies",
    "base_pentagon",
    "blowup",
    "build_kipas_aux",
    "build_lower",
    "build_mixed",
    "canonical_id",
    "case3_recurrence_check",
    "catalog",
    "check_inequalities_star",
    "check_inequalities_star2",
    "chromatic_number",
    "conjecture_kipas",
    "decode_assignment",
    "edge_count",
    "edge_index",
    "edge_list",
    "encode_cnf",
    "exhaustive_check",
    "extremal_two_coloring",
    "fan_param",
    "find_mono_embedding",
    "find_rainbow_triangle",
    "fixture_targets",
    "g_value",
    "gallai_partition",
    "gr_mixed_value",
    "gr_value",
    "join",
    "make_coloring",
    "make_pattern",
    "mono_complete",
    "parse",
    "parse_dimacs",
    "parse_model",
    "ramsey_mixed",
    "ramsey_two",
    "read_grc",
    "reduced_coloring",
    "regenerate_fixtures",
    "relabel_colors",
    "resolve",
    "serialize",
    "verify",
    "w_value",
    "write_grc",
]

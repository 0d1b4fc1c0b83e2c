"""rackenum: enumeration of finitely presented racks and quandles.

Given a presentation by generators and relations, the enumeration builds a
table of elements driven by relation scanning, deduction, and coincidence
resolution, completing exactly when the rack is finite.  Completed tables
yield operation tables, Cayley graphs, and algebraic components; a coset
mode enumerates the cosets of a finitely generated subrack.
"""

from .words import (
    EMPTY_WORD,
    Letter,
    Word,
    concat,
    cyclic_reduce,
    invert_word,
    minimal_cyclic_representative,
    reduce_word,
)
from .presentation import (
    CrossingList,
    Presentation,
    PresentationError,
    PrimaryRelation,
    build_link_presentation,
    derive_secondary,
    format_element,
    format_word,
    inject_axioms,
    parse_element,
    parse_presentation,
    render_presentation,
)
from .engine import (
    EnumerationTable,
    ScanKind,
    ScanOutcome,
    TraceWord,
    init,
    validate_properties,
)
from .driver import (
    EnumOptions,
    EnumResult,
    InvariantViolation,
    Metrics,
    RunStatus,
    SubrackSpec,
    collect_metrics,
    enumerate_cosets,
    enumerate_rack,
    metrics_json,
)
from .rackout import (
    CayleyGraph,
    ComponentPartition,
    RackTable,
    cayley_graph,
    compact,
    components,
    operation_table,
    operation_table_csv,
    representative_word,
    representative_words,
    verify_rack_axioms,
)
from .fixtures import fixture_path, fixture_names

__version__ = "0.1.0"

__all__ = [
    "EMPTY_WORD", "Letter", "Word", "concat", "cyclic_reduce", "invert_word",
    "minimal_cyclic_representative", "reduce_word",
    "CrossingList", "Presentation", "PresentationError", "PrimaryRelation",
    "build_link_presentation", "derive_secondary", "format_element", "format_word",
    "inject_axioms", "parse_element", "parse_presentation", "render_presentation",
    "EnumerationTable", "ScanKind", "ScanOutcome", "TraceWord", "init",
    "validate_properties",
    "EnumOptions", "EnumResult", "InvariantViolation", "Metrics", "RunStatus",
    "SubrackSpec", "collect_metrics", "enumerate_cosets", "enumerate_rack",
    "metrics_json",
    "CayleyGraph", "ComponentPartition", "RackTable", "cayley_graph", "compact",
    "components", "operation_table", "operation_table_csv", "representative_word",
    "representative_words", "verify_rack_axioms",
    "fixture_path", "fixture_names",
]

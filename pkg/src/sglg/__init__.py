"""Simple generative logic grammars from finite partition logics.

Parse a logic, enumerate its two-valued states, compile the generative
grammar, derive the token artifact, and render it (SVG tiles, incidence
schema, ANSI, HTML, logic-program source, or event stream); optionally
verify a Hilbert-space realization of the logic.
"""

from .errors import (
    CyclicGrammarError,
    EmptyStateSetError,
    LogicFileError,
    MissingPaletteEntryError,
    MissingVectorError,
    NotAPartitionError,
    NotSeparatingError,
    PinnedStatesError,
    ThetaOutOfRangeError,
    ValidationError,
)
from .grammar import (
    Derivation,
    Grammar,
    IncidenceReport,
    Production,
    RowViolation,
    Symbol,
    SymbolKind,
    check_incidence,
    compile_grammar,
    derive,
    parse_production_listing,
    production_text,
    productions_json,
)
from .logic import (
    BaseSetSpec,
    LogicFile,
    PartitionLogic,
    SeparationResult,
    StateOrder,
    StateSet,
    SupportTable,
    TwoValuedState,
    enumerate_states,
    is_admissible,
    is_separating,
    logic_from_partitions,
    parse_logic_file,
    parse_logic_spec,
    partition_representation,
    pinned_state_set,
    resolve_states,
    supports,
)
from .orthorep import (
    CheckResult,
    FaithfulnessReport,
    VectorRealization,
    build_v_realization,
    load_vector_file,
    verify_faithful,
)
from .render import (
    Backend,
    Event,
    EventStream,
    RenderSpec,
    default_palette,
    emit_events,
    emit_logic_program,
    render_schema,
    render_text,
    render_tiles,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "BaseSetSpec",
    "CheckResult",
    "CyclicGrammarError",
    "Derivation",
    "EmptyStateSetError",
    "Event",
    "EventStream",
    "FaithfulnessReport",
    "Grammar",
    "IncidenceReport",
    "LogicFile",
    "LogicFileError",
    "MissingPaletteEntryError",
    "MissingVectorError",
    "NotAPartitionError",
    "NotSeparatingError",
    "PartitionLogic",
    "PinnedStatesError",
    "Production",
    "RenderSpec",
    "RowViolation",
    "SeparationResult",
    "StateOrder",
    "StateSet",
    "SupportTable",
    "Symbol",
    "SymbolKind",
    "ThetaOutOfRangeError",
    "TwoValuedState",
    "ValidationError",
    "VectorRealization",
    "build_v_realization",
    "check_incidence",
    "compile_grammar",
    "default_palette",
    "derive",
    "emit_events",
    "emit_logic_program",
    "enumerate_states",
    "is_admissible",
    "is_separating",
    "load_vector_file",
    "logic_from_partitions",
    "parse_logic_file",
    "parse_logic_spec",
    "parse_production_listing",
    "partition_representation",
    "pinned_state_set",
    "production_text",
    "productions_json",
    "render_schema",
    "render_text",
    "render_tiles",
    "resolve_states",
    "supports",
    "verify_faithful",
]

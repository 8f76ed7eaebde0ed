"""Check-worthiness ranking of news items by energy flow on an inconsistency graph."""

from .baselines import (
    Comparison,
    RankingResult,
    compare_rankings,
    rank_by_count,
    rank_by_percentage,
    rank_fands,
    rank_hits,
    tie_groups,
)
from .errors import (
    ConvergenceWarning,
    DegenerateGraphError,
    FandsError,
    FormatError,
    ParameterError,
    RecordError,
    SelfPairWarning,
    UniverseMismatchError,
)
from .export import to_dot, to_force_json
from .flow import (
    EnergyState,
    FlowParams,
    attraction_factors,
    build_matrix,
    relative_energy,
    run_flow,
    step,
)
from .incograph import (
    Component,
    IncoGraph,
    IncoPair,
    Shape,
    build_graph,
    build_pairs,
    classify_shape,
    components,
    graph_from_corpus,
    pipeline_stats,
)
from .ingest import (
    Corpus,
    Stance,
    StanceRecord,
    corpus_stats,
    parse_fnc,
    parse_stance_table,
    write_stance_table,
)
from .report import TopKRow, checkworthy_list, top_k_report
from .synth import make_preset, preset_corpus

__version__ = "0.1.0"

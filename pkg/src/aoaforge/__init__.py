"""Activity-on-node to activity-on-arc (PERT) network conversion."""

from .aoa import (
    AoaArc,
    AoaDag,
    AoaEvent,
    Conversion,
    DummyRecord,
    EquivalenceReport,
    NetworkStats,
    aoa_to_json,
    build_aoa,
    convert,
    convert_aon,
    eliminate_z,
    line_graph_roundtrip_check,
    verify_equivalence,
)
from .cpm import CpmResult, aon_longest_path, schedule
from .dot import render_dot
from .errors import (
    AoaError,
    CycleError,
    GraphValidationError,
    InputError,
    InvariantViolation,
    NotALineGraphError,
    ScheduleError,
    UnknownNodeError,
)
from .generate import generate_random_table
from .graph import (
    Activity,
    AonDag,
    NodeKind,
    group_levels,
    neighbors,
    topological_levels,
    transitive_closure,
    validate_dag,
)
from .linegraph import (
    CompleteBipartite,
    DeltaConfiguration,
    ZConfiguration,
    find_delta_configurations,
    find_z_configurations,
    is_line_graph,
    line_graph,
    partition_bipartites,
    z_bars,
)
from .schedule import (
    ScheduleRow,
    ScheduleTable,
    aon_to_table,
    build_aon,
    emit_table,
    parse_schedule_table,
    read_schedule_table,
)

__version__ = "0.1.0"

"""Round-robin scheduling simulator with a min-max adaptive time quantum.

The heavy lifting lives in the compiled extension; this package just
re-exports its surface.
"""

from ._core import (
    ArrivalMode,
    ComparisonRow,
    MetricsReport,
    ParseError,
    Policy,
    Process,
    ProcessMetrics,
    ProcessSet,
    QuantumDecision,
    Rational,
    ReferenceCase,
    ReproLine,
    ReproReport,
    RoundRecord,
    Schedule,
    SimConfig,
    Slice,
    ValidationError,
    aggregate,
    builtin_cases,
    compute_min_max_quantum,
    count_context_switches,
    export_plot_data,
    generate_random_workload,
    parse_workload,
    per_process_turnaround,
    per_process_waiting,
    render_comparison_table,
    render_gantt_ascii,
    render_gantt_svg,
    reproduce_cases,
    run_simulation,
    serialize_workload,
    tick_oracle_simulate,
)

__all__ = [
    "ArrivalMode",
    "ComparisonRow",
    "MetricsReport",
    "ParseError",
    "Policy",
    "Process",
    "ProcessMetrics",
    "ProcessSet",
    "QuantumDecision",
    "Rational",
    "ReferenceCase",
    "ReproLine",
    "ReproReport",
    "RoundRecord",
    "Schedule",
    "SimConfig",
    "Slice",
    "ValidationError",
    "aggregate",
    "builtin_cases",
    "compute_min_max_quantum",
    "count_context_switches",
    "export_plot_data",
    "generate_random_workload",
    "parse_workload",
    "per_process_turnaround",
    "per_process_waiting",
    "render_comparison_table",
    "render_gantt_ascii",
    "render_gantt_svg",
    "reproduce_cases",
    "run_simulation",
    "serialize_workload",
    "tick_oracle_simulate",
]

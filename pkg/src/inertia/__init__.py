"""Exact algebra of delay conditions for asynchronous switching signals.

The package models two-level signals over integer ticks, the window
conditions that relate a gate's input to its admissible outputs, the
closed-form parameter algebra on those conditions, a brute-force grid
oracle used to validate every law, and a small gate-level simulator
with VCD output.
"""

from .circuit import (
    BridcDelay,
    Envelope,
    FixedDelay,
    Gate,
    Netlist,
    NetlistError,
    classify_delay,
    envelope_propagate,
    netlist_from_dict,
    netlist_to_dict,
    simulate,
)
from .conditions import (
    AicParams,
    BdcParams,
    CondExpr,
    ConsistencyError,
    FdcParams,
    RicParams,
    aic_member,
    baidc_consistent,
    bdc_as_translation,
    bdc_compose,
    bdc_includes,
    bdc_intersection,
    bdc_is_deterministic,
    bdc_is_symmetrical,
    bdc_jointly_solvable,
    bdc_lower,
    bdc_max_solution,
    bdc_member,
    bdc_min_solution,
    bdc_union_envelope,
    bdc_upper,
    bridc_consistency_cases,
    bridc_consistent,
    bridc_det_output,
    cc_failures,
    cc_holds,
    cond_member,
    falling_edges,
    fdc_member,
    ric_member,
    ric_to_aic,
    rising_edges,
)
from .oracle import (
    GridConfig,
    HorizonError,
    enumerate_solutions,
    find_empty_witness,
    set_equal,
    set_subset,
    solution_count,
)
from .signals import (
    Edge,
    Signal,
    SignalError,
    forward_window_and,
    make_signal,
    pointwise,
    window_and,
    window_or,
)
from .verify import THEOREM_CHECKS, CheckReport, run_check
from .waveio import (
    RunConfig,
    WaveParseError,
    emit_vcd,
    emit_waveforms,
    parse_config,
    parse_waveforms,
)

__version__ = "0.1.0"

__all__ = [
    "AicParams",
    "BdcParams",
    "BridcDelay",
    "CheckReport",
    "CondExpr",
    "ConsistencyError",
    "Edge",
    "Envelope",
    "FdcParams",
    "FixedDelay",
    "Gate",
    "GridConfig",
    "HorizonError",
    "Netlist",
    "NetlistError",
    "RicParams",
    "RunConfig",
    "Signal",
    "SignalError",
    "THEOREM_CHECKS",
    "WaveParseError",
    "aic_member",
    "baidc_consistent",
    "bdc_as_translation",
    "bdc_compose",
    "bdc_includes",
    "bdc_intersection",
    "bdc_is_deterministic",
    "bdc_is_symmetrical",
    "bdc_jointly_solvable",
    "bdc_lower",
    "bdc_max_solution",
    "bdc_member",
    "bdc_min_solution",
    "bdc_union_envelope",
    "bdc_upper",
    "bridc_consistency_cases",
    "bridc_consistent",
    "bridc_det_output",
    "cc_failures",
    "cc_holds",
    "classify_delay",
    "cond_member",
    "emit_vcd",
    "emit_waveforms",
    "enumerate_solutions",
    "envelope_propagate",
    "falling_edges",
    "fdc_member",
    "find_empty_witness",
    "forward_window_and",
    "make_signal",
    "netlist_from_dict",
    "netlist_to_dict",
    "parse_config",
    "parse_waveforms",
    "pointwise",
    "ric_member",
    "ric_to_aic",
    "rising_edges",
    "run_check",
    "set_equal",
    "set_subset",
    "simulate",
    "solution_count",
    "window_and",
    "window_or",
]

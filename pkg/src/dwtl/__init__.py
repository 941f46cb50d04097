"""Weighted spin-minority / threshold logic toolkit."""

from .gates import (
    ArityError,
    SpinMinorityGate,
    ThresholdGate,
    TieError,
    bit_to_spin,
    spin_to_bit,
)
from .netlist import (
    CONST_ONE,
    CostReport,
    Counterexample,
    EquivalenceResult,
    GateDef,
    Netlist,
    NetlistError,
    OutputDef,
    check_equivalence,
    check_equivalence_sampled,
    cost_report,
)
from .table import MAX_INPUTS, TooManyInputsError, TruthTable
from .textio import (
    ParseError,
    format_truth_table,
    parse_netlist,
    parse_truth_table,
    print_netlist,
)
from .tsolve import (
    ChowVector,
    NotThreshold,
    NotThresholdError,
    NotUnate,
    ThresholdRealization,
    Unateness,
    chow_parameters,
    enumerate_threshold_functions,
    is_unate,
    minimize_weights,
    solve_threshold,
    threshold_tables_by_search,
)
from . import constructions

__all__ = [
    "ArityError",
    "CONST_ONE",
    "ChowVector",
    "CostReport",
    "Counterexample",
    "EquivalenceResult",
    "GateDef",
    "MAX_INPUTS",
    "Netlist",
    "NetlistError",
    "NotThreshold",
    "NotThresholdError",
    "NotUnate",
    "OutputDef",
    "ParseError",
    "SpinMinorityGate",
    "ThresholdGate",
    "ThresholdRealization",
    "TieError",
    "TooManyInputsError",
    "TruthTable",
    "Unateness",
    "bit_to_spin",
    "check_equivalence",
    "check_equivalence_sampled",
    "chow_parameters",
    "constructions",
    "cost_report",
    "enumerate_threshold_functions",
    "format_truth_table",
    "is_unate",
    "minimize_weights",
    "parse_netlist",
    "parse_truth_table",
    "print_netlist",
    "solve_threshold",
    "spin_to_bit",
    "threshold_tables_by_search",
]

"""wdiam: geometric entanglement of N-qubit W states.

Exact critical values and entanglement diameters, region-dispatched maximal
product overlaps and nearest product states, closed-form and large-N
approximations, a brute-force overlap oracle, and randomized verification
campaigns.
"""

from .asymptotics import (
    TwoParamFamily,
    g_asymmetric_closed,
    g_interpolating,
    g_symmetric_limit,
    g_three_qubit,
    r1_largeN_estimate,
    r_asymmetric_closed,
    r_two_param,
)
from .campaign import (
    CampaignConfig,
    CampaignReport,
    PropertyResult,
    run_campaign,
    sample_state,
    sample_state_in_region,
)
from .diameter import (
    Branch,
    DiameterSolution,
    solve,
    solve_asymmetric,
    solve_symmetric,
)
from .errors import (
    AmbiguousRoot,
    BoundaryOptimum,
    ConvergenceFailure,
    DegenerateTriangle,
    DivergedToInfinity,
    InconsistentInput,
    NegativeDiscriminant,
    NoConvergedStart,
    NonFinite,
    NormalizationViolated,
    NotNormalizable,
    OutOfDomain,
    TooFewQubits,
    WdiamError,
    WrongRegion,
)
from .oracle import (
    OracleResult,
    StationarityReport,
    maximize_overlap,
    maximize_overlap_many,
    maximize_overlap_signed,
    stationarity_check,
)
from .overlap import (
    OverlapReport,
    ProductState,
    geometric_measure,
    nearest_product,
    overlap_from_diameter,
    product_overlap_value,
)
from .regions import Region, RegionReport, classify, first_critical, second_critical
from .state import (
    BlochReport,
    PartitionSpec,
    WState,
    bloch_report,
    expand_partition,
    load_state_file,
    make_wstate,
    nineteen_qubit_state,
    partition_blocks,
    state_from_dict,
    three_block_state,
    two_block_plus_one_state,
    two_block_state,
)
from .sweeps import SweepSpec, sweep_rows, write_sweep

__version__ = "0.1.0"

__all__ = [
    "AmbiguousRoot",
    "BlochReport",
    "BoundaryOptimum",
    "Branch",
    "CampaignConfig",
    "CampaignReport",
    "ConvergenceFailure",
    "DegenerateTriangle",
    "DiameterSolution",
    "DivergedToInfinity",
    "InconsistentInput",
    "NegativeDiscriminant",
    "NoConvergedStart",
    "NonFinite",
    "NormalizationViolated",
    "NotNormalizable",
    "OracleResult",
    "OutOfDomain",
    "OverlapReport",
    "PartitionSpec",
    "ProductState",
    "PropertyResult",
    "Region",
    "RegionReport",
    "StationarityReport",
    "SweepSpec",
    "TooFewQubits",
    "TwoParamFamily",
    "WState",
    "WdiamError",
    "WrongRegion",
    "bloch_report",
    "classify",
    "expand_partition",
    "first_critical",
    "g_asymmetric_closed",
    "g_interpolating",
    "g_symmetric_limit",
    "g_three_qubit",
    "geometric_measure",
    "load_state_file",
    "make_wstate",
    "maximize_overlap",
    "maximize_overlap_many",
    "maximize_overlap_signed",
    "nearest_product",
    "nineteen_qubit_state",
    "overlap_from_diameter",
    "partition_blocks",
    "product_overlap_value",
    "r1_largeN_estimate",
    "r_asymmetric_closed",
    "r_two_param",
    "run_campaign",
    "sample_state",
    "sample_state_in_region",
    "second_critical",
    "solve",
    "solve_asymmetric",
    "solve_symmetric",
    "state_from_dict",
    "stationarity_check",
    "sweep_rows",
    "three_block_state",
    "two_block_plus_one_state",
    "two_block_state",
    "write_sweep",
]

"""Multiparty distance-minimization benchmarks and optimizers."""

from ._mpdmp import (
    Config,
    Dominance,
    IgdReport,
    Individual,
    PartyLayout,
    Problem,
    PsRegion,
    RunResult,
    compare,
    crowding_distance,
    crowding_entropy,
    evaluate,
    final_mps_filter,
    igd,
    mpnds2,
    nds,
    party_level_rows,
    ps_oracle,
    run_algorithm,
    sample_ps_points,
    sample_reference_front,
    suite,
    true_ps,
)

__all__ = [
    "Config",
    "Dominance",
    "IgdReport",
    "Individual",
    "PartyLayout",
    "Problem",
    "PsRegion",
    "RunResult",
    "compare",
    "crowding_distance",
    "crowding_entropy",
    "evaluate",
    "final_mps_filter",
    "igd",
    "mpnds2",
    "nds",
    "party_level_rows",
    "ps_oracle",
    "run_algorithm",
    "sample_ps_points",
    "sample_reference_front",
    "suite",
    "true_ps",
]

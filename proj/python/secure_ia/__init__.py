"""Interference-alignment transceiver designs for a K-pair MIMO network
observed by a multi-antenna eavesdropper.

The heavy lifting lives in the compiled extension ``secure_ia._core``; this
package re-exports its public surface. Matrices cross the boundary as numpy
complex arrays.
"""

from ._core import (
    ChannelDims,
    ChannelSet,
    DiagnosticsReport,
    ExperimentSpec,
    IAOptions,
    IASolution,
    IATrace,
    ImprovementRow,
    LeakageReport,
    NeSweepOutcome,
    Orthonormal,
    RateReport,
    Scheme,
    SsrAggregate,
    SweepResult,
    SweepRow,
    SystemConfig,
    Termination,
    WslmFeasibility,
    ZfwsFeasibility,
    conventional_ia,
    draw_channels,
    eave_rate,
    eig_largest,
    eig_smallest,
    evaluate_leakage,
    ia_diagnostics,
    legit_rate,
    logdet2,
    null_space_precoder_basis,
    orthonormal_complement,
    projection_residual,
    read_channel_dump,
    run_convergence,
    run_ne_sweep,
    run_snr_sweep,
    scaling_alignment_angle,
    scheme_from_name,
    scheme_name,
    secrecy_report,
    snr_to_power,
    ssr_improvement,
    trial_seed,
    wslm_feasible,
    wslm_ia,
    write_aggregate_csv,
    write_channel_dump,
    write_csv,
    zfws_feasible,
    zfws_ia,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelDims",
    "ChannelSet",
    "DiagnosticsReport",
    "ExperimentSpec",
    "IAOptions",
    "IASolution",
    "IATrace",
    "ImprovementRow",
    "LeakageReport",
    "NeSweepOutcome",
    "Orthonormal",
    "RateReport",
    "Scheme",
    "SsrAggregate",
    "SweepResult",
    "SweepRow",
    "SystemConfig",
    "Termination",
    "WslmFeasibility",
    "ZfwsFeasibility",
    "conventional_ia",
    "draw_channels",
    "eave_rate",
    "eig_largest",
    "eig_smallest",
    "evaluate_leakage",
    "ia_diagnostics",
    "legit_rate",
    "logdet2",
    "null_space_precoder_basis",
    "orthonormal_complement",
    "projection_residual",
    "read_channel_dump",
    "run_convergence",
    "run_ne_sweep",
    "run_snr_sweep",
    "scaling_alignment_angle",
    "scheme_from_name",
    "scheme_name",
    "secrecy_report",
    "snr_to_power",
    "ssr_improvement",
    "trial_seed",
    "wslm_feasible",
    "wslm_ia",
    "write_aggregate_csv",
    "write_channel_dump",
    "write_csv",
    "zfws_feasible",
    "zfws_ia",
]

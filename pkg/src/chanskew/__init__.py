"""Skew-information uncertainty bounds for quantum channels and unitaries."""

from .bounds import (
    BoundArgmax,
    BoundReport,
    UnitaryBoundReport,
    channel_bound_report,
    enumerate_tuples,
    lb1,
    lb2,
    lb3,
    norm_inequality_check,
    ob1,
    ob2,
    ob3,
    tuple_bound_values,
    unitary_bound_report,
    unitary_lb1,
    unitary_lb2,
    unitary_lb3,
)
from .cmatrix import (
    EigenDecomposition,
    adjoint,
    commutator,
    eig_hermitian,
    hs_norm_sq,
    matrix_power,
)
from .quantum import (
    DensityMatrix,
    KrausChannel,
    UnitaryOp,
    amplitude_damping,
    bit_flip,
    bloch_state,
    channel_from_json,
    density_matrix_from_json,
    pauli_rotation,
    phase_damping,
    validate_channel,
)
from .repro import SweepConfig, channel_sweep, eighth_turn_unitaries, unitary_sweep
from .skewinfo import (
    SkewParams,
    WeightedOperatorCache,
    skew_info_channel,
    skew_info_op,
    skew_info_unitary,
    skew_with_cache,
    weighted_ops,
)

__all__ = [
    "BoundArgmax",
    "BoundReport",
    "DensityMatrix",
    "EigenDecomposition",
    "KrausChannel",
    "SkewParams",
    "SweepConfig",
    "UnitaryBoundReport",
    "UnitaryOp",
    "WeightedOperatorCache",
    "adjoint",
    "amplitude_damping",
    "bit_flip",
    "bloch_state",
    "channel_bound_report",
    "channel_from_json",
    "channel_sweep",
    "commutator",
    "density_matrix_from_json",
    "eig_hermitian",
    "eighth_turn_unitaries",
    "enumerate_tuples",
    "hs_norm_sq",
    "lb1",
    "lb2",
    "lb3",
    "matrix_power",
    "norm_inequality_check",
    "ob1",
    "ob2",
    "ob3",
    "pauli_rotation",
    "phase_damping",
    "skew_info_channel",
    "skew_info_op",
    "skew_info_unitary",
    "skew_with_cache",
    "tuple_bound_values",
    "unitary_bound_report",
    "unitary_lb1",
    "unitary_lb2",
    "unitary_lb3",
    "unitary_sweep",
    "validate_channel",
    "weighted_ops",
]

__version__ = "0.1.0"

"""Output entropies and information bounds of a Pauli channel with memory."""

from memchan._memchan import (
    DEFAULT_DENSE_CAP,
    DenseCapError,
    critical_memory,
    encode_state,
    entropy,
    entropy_gap,
    entropy_of_spectrum,
    mutual_info_bound,
    separable_entropy_closed,
    spectrum,
    sweep,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_DENSE_CAP",
    "DenseCapError",
    "critical_memory",
    "encode_state",
    "entropy",
    "entropy_gap",
    "entropy_of_spectrum",
    "mutual_info_bound",
    "separable_entropy_closed",
    "spectrum",
    "sweep",
    "verify",
]

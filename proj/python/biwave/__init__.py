"""Biquaternion wave fields: twistors, solvers and claim checks."""

from ._core import (
    Biquaternion,
    BiwaveError,
    PlaneWave,
    claim_ids,
    cli,
    evanescent_twistor,
    h_twistor,
    omega_twistor,
    read_field,
    run_claim,
    static_twistor,
    verify_json,
    xi_twistor,
)

__all__ = [
    "Biquaternion",
    "BiwaveError",
    "PlaneWave",
    "claim_ids",
    "cli",
    "evanescent_twistor",
    "h_twistor",
    "omega_twistor",
    "read_field",
    "run_claim",
    "static_twistor",
    "verify_json",
    "xi_twistor",
]

"""Multipole currents and magnetic fields of atomic bound states."""

from ._atomfield import (
    Field,
    RadialIntegralError,
    StagnationError,
    State,
    clebsch_gordan,
    hydrogen_field,
    orbital_coefficients,
    sampled_field,
    total_coefficients,
    verify,
)

__all__ = [
    "Field",
    "RadialIntegralError",
    "StagnationError",
    "State",
    "clebsch_gordan",
    "hydrogen_field",
    "orbital_coefficients",
    "sampled_field",
    "total_coefficients",
    "verify",
]

"""Torsion packets on y^2 = x^6 + 1 and the Fermat quartic, computed with
length-2 Witt vectors and elliptic Teichmuller lifts."""

from ._core import (
    WittpackError,
    packet_report,
    selftest,
    solutions,
    special_points,
    tau_poly,
)

__all__ = [
    "WittpackError",
    "packet_report",
    "selftest",
    "solutions",
    "special_points",
    "tau_poly",
]

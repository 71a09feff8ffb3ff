"""Billiards in Koch snowflake prefractals, exact over Q(sqrt 3)."""

from ._core import (
    KochBilliardError,
    cf_convergents_pi_over_3,
    cone_angle,
    gamma,
    orbit_json_round_trip,
    ppf_footprint,
    run_experiment,
    simulate,
    surface,
    table,
)

__all__ = [
    "KochBilliardError",
    "cf_convergents_pi_over_3",
    "cone_angle",
    "gamma",
    "orbit_json_round_trip",
    "ppf_footprint",
    "run_experiment",
    "simulate",
    "surface",
    "table",
]

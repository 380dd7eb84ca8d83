"""PIBT / LaCAM toolkit for one-shot and lifelong multi-agent pathfinding."""

from mapfpibt._core import (
    GridMap,
    Instance,
    generate_empty_map,
    generate_random_map,
    generate_sortation_map,
    normalized_soc,
    parse_scen,
    pibt_step,
    random_instance,
    run_lifelong,
    soc_lower_bound,
    solve,
    sum_of_costs,
    validate_solution,
)

__all__ = [
    "GridMap",
    "Instance",
    "generate_empty_map",
    "generate_random_map",
    "generate_sortation_map",
    "normalized_soc",
    "parse_scen",
    "pibt_step",
    "random_instance",
    "run_lifelong",
    "soc_lower_bound",
    "solve",
    "sum_of_costs",
    "validate_solution",
]

"""Life-cycle emission engine for virgin and remanufactured single-use devices."""

from ._core import (  # noqa: F401
    ComputationError,
    FactorStore,
    InputError,
    LocationProfile,
    ProductSystem,
    ValidationError,
    __version__,
    apply_location,
    apply_rejection,
    compare_systems,
    evaluate_scenario,
    gwp_aggregate,
    life_saving,
    load_factors,
    load_locations,
    load_system,
    parse_system,
    per_life,
    per_turn,
    scheme_emissions,
    scheme_saving,
    simulate_fleet,
    solve_injection,
    system_emissions,
    validate_system,
)

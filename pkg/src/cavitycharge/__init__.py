"""Cavity loss metrology and stray-charge impact budgets.

The analysis chain runs ring-down trace -> linewidth -> finesse -> mirror
reflectivity -> thin-film extinction coefficient, with companion models
for what stray surface charge on the mirrors does to trapped ions and
Rydberg atoms, and for how laser-induced photocurrent charges a grounded
conductive film. Measured values carry one-sigma uncertainties and are
propagated linearly or by Monte Carlo.
"""

from .quantities import (
    CODATA,
    Constants,
    UncertainQuantity,
    propagate_linear,
    propagate_monte_carlo,
)
from .ringdown import (
    RingdownFit,
    RingdownTrace,
    finesse,
    fit_ringdown,
    fit_ringdown_ensemble,
    fsr_from_length,
    load_trace_csv,
    pool_linewidths,
    synthesize_trace,
)
from .cavity_optics import (
    CavityAssembly,
    MirrorState,
    excess_reflection_loss,
    extinction_from_finesse,
    finesse_from_reflectivities,
    r0_from_symmetric_finesse,
    r1_from_asymmetric_finesse,
    resonant_response,
)
from .film_optics import (
    AbsorptionSpectrum,
    ComplexIndex,
    DrudeModel,
    drude_from_transport,
    drude_index,
    lambda_cubed_ratio,
    power_attenuation,
    tauc_bandgap,
)
from .electrostatics import (
    ChargeScenario,
    disc_point_ratios,
    expansion_coefficients,
    field_at,
    potential_exact,
    potential_quadratic,
    sheet_pair_field,
)
from .ion_impact import (
    GateParams,
    TrapConfig,
    bessel_j0,
    carrier_intensity_factor,
    equilibrium_position,
    gate_detuning_verdict,
    lamb_dicke_budget,
    max_charge_for_cooling,
    micromotion_amplitude,
    shifted_frequency,
    zero_point_spread,
)
from .rydberg_impact import (
    RydbergConfig,
    blockade_infidelity,
    decoherence_time,
    dephasing,
    max_charge_for_infidelity,
    stark_shift,
)
from .charging import (
    FilmSample,
    IlluminationScenario,
    TransportSample,
    equilibrium_charge,
    film_resistance,
    gaussian_clipping_factor,
    photocurrent,
    transport_consistency,
)
from .scenario import Scenario, load_scenario, parse_scenario, serialize_scenario

__version__ = "0.1.0"

"""Signless Laplacian spectra, wheel detection, and extremal search for pure
simplicial complexes."""

from .complex_core import (
    Complex,
    Cycle,
    Face,
    are_isomorphic,
    canonical_complex,
    canonical_facets,
    format_complex,
    from_facets,
    join,
    parse_complex,
)
from .constructions import (
    book,
    cocycle_complex,
    cycle_complex,
    isolated_vertices,
    remark2_complex,
    simplex,
    wheel,
)
from .errors import QsimplexError
from .operators import (
    Laplacians,
    OperatorMatrix,
    boundary,
    laplacians,
    q_down,
    q_up,
    signless_boundary,
)
from .search import (
    SearchReport,
    enumerate_pure,
    random_complex,
    random_complexes,
    search_extremal,
    verify_extremal_classification,
    verify_upper_bound,
)
from .spectral import (
    SpectralResult,
    dense_eigenvalues,
    exact_radius_if_uniform,
    q_signless,
    spectral_radius,
)
from .structure_checks import (
    Classification,
    UniformityReport,
    WheelWitness,
    classify_r_plus_3,
    contains_wheel,
    down_neighbor_bound_violations,
    neighbor_uniformity,
)

__version__ = "0.1.0"

__all__ = [
    "Complex", "Cycle", "Face", "are_isomorphic", "canonical_complex",
    "canonical_facets", "format_complex", "from_facets", "join",
    "parse_complex",
    "book", "cocycle_complex", "cycle_complex", "isolated_vertices",
    "remark2_complex", "simplex", "wheel",
    "QsimplexError",
    "Laplacians", "OperatorMatrix", "boundary", "laplacians", "q_down",
    "q_up", "signless_boundary",
    "SearchReport", "enumerate_pure", "random_complex", "random_complexes",
    "search_extremal", "verify_extremal_classification", "verify_upper_bound",
    "SpectralResult", "dense_eigenvalues", "exact_radius_if_uniform",
    "q_signless", "spectral_radius",
    "Classification", "UniformityReport", "WheelWitness", "classify_r_plus_3",
    "contains_wheel", "down_neighbor_bound_violations", "neighbor_uniformity",
]

"""Combinatorics of translation quivers at desk scale.

Diagonal quivers of polygons, their powers via sectional paths, finite
orbit quotients of the infinite strip, and cluster-algebra mutation,
with deterministic DOT/JSON output and a named verification suite.
"""

from .config import default_vertex_cap
from .errors import (
    NonFreeActionError,
    QuiverkitError,
    QuiverkitWarning,
    SizeCapError,
)
from .export import quiver_json_dict, to_dot, to_json
from .iso import check_iso, iso_translation_quivers
from .mutation import (
    ClosureResult,
    ExchangeMatrix,
    LaurentFraction,
    Seed,
    a_path_matrix,
    counting_check,
    enumerate_cluster_variables,
    initial_cluster,
    initial_seed,
    is_laurent,
    mutate_matrix,
    mutate_seed,
    variables,
)
from .orbit import (
    AutoEq,
    ComponentMatch,
    ComponentReport,
    OrbitQuiver,
    ZARule,
    classify_components,
    orbit_quiver,
    shift,
    za_arrows_and_tau,
)
from .polygon import (
    crossing,
    cyclic_gap,
    diagonals,
    enumerate_angulations,
    gamma,
    is_diagonal,
    is_m_diagonal,
    m_diagonals,
    normalize_pair,
    row_of,
)
from .power import (
    PowerQuiver,
    compose_tau,
    decompose,
    is_sectional,
    power,
    principal_component,
    sectional_paths,
)
from .quiver import (
    Quiver,
    TranslationQuiver,
    ValidationResult,
    Violation,
    connected_components,
    restrict_translation_quiver,
    split_components,
    tau_orbits,
    translation_components,
    validate_translation_quiver,
    vertex_key,
    vertex_label,
)
from .verify import CheckResult, check_names, run_checks

__version__ = "0.1.0"

__all__ = [
    "AutoEq",
    "CheckResult",
    "ClosureResult",
    "ComponentMatch",
    "ComponentReport",
    "ExchangeMatrix",
    "LaurentFraction",
    "NonFreeActionError",
    "OrbitQuiver",
    "PowerQuiver",
    "Quiver",
    "QuiverkitError",
    "QuiverkitWarning",
    "Seed",
    "SizeCapError",
    "TranslationQuiver",
    "ValidationResult",
    "Violation",
    "ZARule",
    "a_path_matrix",
    "check_iso",
    "check_names",
    "classify_components",
    "compose_tau",
    "connected_components",
    "counting_check",
    "crossing",
    "cyclic_gap",
    "decompose",
    "default_vertex_cap",
    "diagonals",
    "enumerate_angulations",
    "enumerate_cluster_variables",
    "gamma",
    "initial_cluster",
    "initial_seed",
    "is_diagonal",
    "is_laurent",
    "is_m_diagonal",
    "is_sectional",
    "iso_translation_quivers",
    "m_diagonals",
    "mutate_matrix",
    "mutate_seed",
    "normalize_pair",
    "orbit_quiver",
    "power",
    "principal_component",
    "quiver_json_dict",
    "restrict_translation_quiver",
    "row_of",
    "run_checks",
    "sectional_paths",
    "shift",
    "split_components",
    "tau_orbits",
    "to_dot",
    "to_json",
    "translation_components",
    "validate_translation_quiver",
    "variables",
    "vertex_key",
    "vertex_label",
    "za_arrows_and_tau",
]

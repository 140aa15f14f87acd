"""Freiman's structure theory of set addition, computationally.

Sumsets and doubling, additive isomorphism and dimension, exact volume of
1-dimensional sets, the extremal constructions with their |2A| and volume
formulas, the extremal family, exhaustive scans of the volume Hypothesis,
and a baseline 0-1 equation solver.
"""
from .checks import (
    ScanReport,
    check_lemma,
    dim1_threshold_scan,
    hypothesis_scan,
    lemma_bound,
    partial_case_form,
)
from .extremal import (
    ExtremalParams,
    construct_base,
    construct_multi,
    decompose_T,
    hypothesis_bound,
    predicted_T,
    predicted_V,
    t_range,
)
from .family import FamilyNode, children, enumerate_base_sets, enumerate_family, family_stats
from .isomorphism import (
    find_isomorphism,
    freiman_dimension,
    is_isomorphic,
    oracle_dimension,
    quadruple_pattern,
    relation_lattice,
    universal_model,
)
from .knapsack import Instance, Solution, density_profile, solve
from .sets import (
    DoublingStats,
    IntSet,
    LatticeSet,
    MagnitudeError,
    doubling_size,
    doubling_stats,
    is_arithmetic_progression,
    normalize,
    normalized_sets,
    parse_set,
    sumset,
    sym,
)
from .volume import (
    BoundExceeded,
    Parallelepiped,
    VolumeResult,
    hull_point_count,
    parallelepiped_upper,
    volume_exact_1d,
    volume_oracle,
)

__version__ = "0.1.0"

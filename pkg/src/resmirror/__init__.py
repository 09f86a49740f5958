"""Exact two-point intersection numbers via iterated residues, and the
mirror maps / Gromov-Witten invariants / j-function coefficients they
generate.  Everything is computed in exact rational arithmetic.
"""

from .polys import (
    Fraction,
    IdenticallySingular,
    MultiPoly,
    RatFunc,
    VarSet,
    frac_from_str,
    frac_to_str,
    poly_combine,
    poly_from_json,
    poly_to_json,
    ratfunc_arith,
    ratfunc_reduce,
    ratfunc_substitute,
)
from .residues import (
    DuplicatePole,
    PoleSpec,
    ResidueSchedule,
    iterated_residue,
    laurent_expand,
    residue_at,
    residue_sum,
)
from .parts import InvalidDegree, ordered_bipartitions, ordered_partitions
from .geoms import (
    Insertion,
    InvalidInsertion,
    amplitude,
    classical_triple,
    geometry,
    parse_insertion,
    two_point_cpn,
    two_point_f3,
    two_point_kf0,
    two_point_wp1,
    two_point_wp2,
    two_point_wp3,
)
from .vsc import (
    InvalidComb,
    check_theorem1,
    decomposition_coefficient,
    poly_d,
    vsc_merged_contour,
    vsc_recursive,
    vsc_residue,
)
from .cache import (
    CacheCorruption,
    CacheStore,
    activate,
    cache_lookup,
    cache_store,
    cached_two_point,
    two_point_key,
)
from .series import (
    GradedSeries,
    InvalidExp,
    JExpansion,
    MirrorMap,
    SingularMetric,
    build_generating_function,
    gmt_upto3,
    invert_mirror_map,
    j_coefficients,
    mirror_map,
    picard_fuchs_basis,
    reversion_weights,
    series_arith,
    series_from_json,
    series_to_json,
    transform,
)
from .refdata import ConnectionReport, check_conjecture2

__all__ = [
    "Fraction",
    "IdenticallySingular",
    "MultiPoly",
    "RatFunc",
    "VarSet",
    "frac_from_str",
    "frac_to_str",
    "poly_combine",
    "poly_from_json",
    "poly_to_json",
    "ratfunc_arith",
    "ratfunc_reduce",
    "ratfunc_substitute",
    "DuplicatePole",
    "PoleSpec",
    "ResidueSchedule",
    "iterated_residue",
    "laurent_expand",
    "residue_at",
    "residue_sum",
    "InvalidDegree",
    "ordered_bipartitions",
    "ordered_partitions",
    "Insertion",
    "InvalidInsertion",
    "amplitude",
    "classical_triple",
    "geometry",
    "parse_insertion",
    "two_point_cpn",
    "two_point_f3",
    "two_point_kf0",
    "two_point_wp1",
    "two_point_wp2",
    "two_point_wp3",
    "InvalidComb",
    "check_theorem1",
    "decomposition_coefficient",
    "poly_d",
    "vsc_merged_contour",
    "vsc_recursive",
    "vsc_residue",
    "CacheCorruption",
    "CacheStore",
    "activate",
    "cache_lookup",
    "cache_store",
    "cached_two_point",
    "two_point_key",
    "GradedSeries",
    "InvalidExp",
    "JExpansion",
    "MirrorMap",
    "SingularMetric",
    "build_generating_function",
    "gmt_upto3",
    "invert_mirror_map",
    "j_coefficients",
    "mirror_map",
    "picard_fuchs_basis",
    "reversion_weights",
    "series_arith",
    "series_from_json",
    "series_to_json",
    "transform",
    "ConnectionReport",
    "check_conjecture2",
]

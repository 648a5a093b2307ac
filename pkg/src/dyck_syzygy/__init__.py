"""Dyck patterns, Kac composition factors and syzygies of GL-invariant ideals."""
from .dyck import (
    Admissibility,
    AugmentedDyckPath,
    DyckPath,
    DyckPattern,
    decompose_bullets,
    is_admissible,
    lambda_of,
    path_corners,
    support,
    validate_dyck_path,
)
from .enumeration import (
    PatternFamily,
    a_to_b,
    b_to_a,
    enumerate_b_side,
    enumerate_kac_patterns,
    enumerate_syzygy_patterns,
)
from .errors import (
    ComparablePair,
    DyckSyzygyError,
    Mismatch,
    NegativeCoefficient,
    NotAPartition,
    NotAPath,
    NotDyck,
    Overlap,
    RegionOverflow,
    UncoverableBullet,
)
from .grothendieck import (
    GrothendieckClass,
    HilbertCache,
    HilbertSeries,
    hilbert_series_kac,
    hilbert_series_simple,
    kac_class,
    simple_in_kac_basis,
)
from .oracle import (
    brute_force_patterns,
    cube_complex_check,
    eagon_northcott_betti,
    euler_check,
    exact_rank,
    ssyt_count,
)
from .partitions import Partition, conjugate, corners, from_boxes, leq, parse_partition, schur_dim, union
from .syzygy import BettiTable, betti_table, general_ideal_terms, homology_classes

__version__ = "0.1.0"

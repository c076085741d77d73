"""Exact arithmetic for joint core partitions and their bar analogues.

Partitions, bar partitions, core/quotient towers, runner encodings, signed
lattice grids with their path bijections, truncated integer series for six
families of generating functions, a brute-force enumeration oracle, and named
verification suites tying them together. Everything is exact integer
arithmetic; nothing here floats.
"""

from .bar_partitions import (
    BarPartition,
    as_bar_partition,
    bar_length_multiset,
    enumerate_bar_partitions,
    is_bar_partition,
    is_tbar_core,
)
from .core_quotient import (
    BarTower,
    StraightTower,
    bar_decompose,
    bar_reconstruct,
    decompose,
    is_st_core,
    is_stbar_core,
    reconstruct,
)
from .encodings import (
    gks_decode,
    gks_encode,
    olsson_decode,
    olsson_encode,
    zeta,
    zeta_inverse,
)
from .lattice import (
    SignedGrid,
    anderson_grid,
    anderson_path_to_core,
    big_gamma,
    big_gamma_inverse,
    dh_grid,
    dh_path_to_selfconj,
    enumerate_barcores_by_yy,
    enumerate_paths,
    enumerate_selfconj_by_dh,
    enumerate_st_cores_by_paths,
    gamma,
    gamma_inverse,
    yinyang_grid,
    yy_path_to_barcore,
)
from .oracle import (
    CountTable,
    barcore_counts,
    core_counts,
    count_filtered,
    enumerate_partitions,
    enumerate_self_conjugate,
    extremal_stats,
    selfconj_core_counts,
    selfconj_st_core_counts,
    st_core_counts,
    stbar_core_counts,
)
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    diagonal_hooks,
    first_column_hooks,
    from_diagonal_hooks,
    from_first_column_hooks,
    hook_length_multiset,
    is_self_conjugate,
    is_t_core,
    size,
)
from .series import (
    TruncatedSeries,
    barcore_gf,
    congruence_scan,
    convolution_psi,
    convolution_psi_bar,
    convolution_psi_star,
    core_gf,
    partition_gf,
    product_term,
    progression_extract,
    psi_bar_st_gf,
    psi_st_gf,
    psi_star_st_gf,
    selfconj_core_gf,
)
from .verify import run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "BarPartition",
    "BarTower",
    "CountTable",
    "Partition",
    "SignedGrid",
    "StraightTower",
    "TruncatedSeries",
    "anderson_grid",
    "anderson_path_to_core",
    "as_bar_partition",
    "as_partition",
    "bar_decompose",
    "bar_length_multiset",
    "bar_reconstruct",
    "barcore_counts",
    "barcore_gf",
    "big_gamma",
    "big_gamma_inverse",
    "congruence_scan",
    "conjugate",
    "convolution_psi",
    "convolution_psi_bar",
    "convolution_psi_star",
    "core_counts",
    "core_gf",
    "count_filtered",
    "decompose",
    "dh_grid",
    "dh_path_to_selfconj",
    "diagonal_hooks",
    "enumerate_bar_partitions",
    "enumerate_barcores_by_yy",
    "enumerate_partitions",
    "enumerate_paths",
    "enumerate_self_conjugate",
    "enumerate_selfconj_by_dh",
    "enumerate_st_cores_by_paths",
    "extremal_stats",
    "first_column_hooks",
    "from_diagonal_hooks",
    "from_first_column_hooks",
    "gamma",
    "gamma_inverse",
    "gks_decode",
    "gks_encode",
    "hook_length_multiset",
    "is_bar_partition",
    "is_self_conjugate",
    "is_st_core",
    "is_stbar_core",
    "is_t_core",
    "is_tbar_core",
    "olsson_decode",
    "olsson_encode",
    "partition_gf",
    "product_term",
    "progression_extract",
    "psi_bar_st_gf",
    "psi_st_gf",
    "psi_star_st_gf",
    "reconstruct",
    "run_all",
    "run_suite",
    "selfconj_core_counts",
    "selfconj_core_gf",
    "selfconj_st_core_counts",
    "size",
    "st_core_counts",
    "stbar_core_counts",
    "yinyang_grid",
    "yy_path_to_barcore",
    "zeta",
    "zeta_inverse",
]

"""Exact domino-tiling counts for Aztec diamonds with zig/zag barriers.

Everything runs in exact arithmetic:

* ``aztec`` counts and enumerates barrier-constrained tilings and extracts
  spine signatures,
* ``partitions`` handles balanced zig/zag partitions and their tableau
  weights,
* ``symfunc`` evaluates complete homogeneous and Schur polynomials and the
  split-determinant identity behind the barrier-placement invariance,
* ``stats`` builds the induced probability distributions with their
  independence, moment, and correlation structure,
* ``cli`` exposes all of it as a JSON/CSV command line.
"""

from .aztec import (
    ZAG,
    ZIG,
    ZIP,
    barrier_sweep,
    blocked_edges,
    count_tilings,
    diamond_cells,
    enumerate_tilings,
    partition_signature,
    signature_class_size,
    signature_partition,
    spine_cells,
    spine_k,
    spine_signature,
)
from .partitions import (
    BalancedPartition,
    Shape,
    enumerate_balanced,
    iter_ssyt,
    shape_of_zigs,
    ssyt_count,
    weight,
)
from .stats import (
    CovarianceReport,
    MomentReport,
    PartitionDistribution,
    SubsetDistribution,
    build_distribution,
    build_subset_distribution,
    independence_check,
    pair_correlation,
    prefix_zig_moments,
    sample_partitions,
    subset_correlation_report,
    variance_profile,
)
from .symfunc import (
    balanced_det_sum,
    det_exact,
    h_eval,
    jt_row,
    jt_vector_family,
    parity_det_product,
    random_vector_family,
    schur_eval_jt,
    schur_eval_tableau,
    staircase_product_eval,
    staircase_shapes,
)

__version__ = "0.1.0"

"""Induced matching distances between 0-dimensional barcodes of dissimilarity spaces.

Typical use::

    from inducedmatch import validate_dissimilarity, vr_zero_pers
    from inducedmatch import induced_block_function, induced_matching_distance

    tx, bx = vr_zero_pers(validate_dissimilarity(dx))
    tz, bz = vr_zero_pers(validate_dissimilarity(dz))
    dist = induced_matching_distance(induced_block_function(tx, tz), q=1)
"""

from .blockfn import (
    BlockFunction,
    block_function_of_spaces,
    delta_shift,
    induced_block_function,
    min_nonexpansive_delta,
)
from .dtw import dtw_distance, pairwise_dtw, pose_ground_distance
from .errors import InducedMatchError
from .gf2 import Gf2Subspace, gf2_intersection_basis, gf2_span_dim
from .matching import InducedMatching, induced_matching, induced_matching_distance, sorted_wasserstein
from .persistence import kernel_basis, vr_zero_pers
from .pipeline import SignalSeries, WindowConfig, frame_space, matching_signal, summarize_signals
from .synthetic import gen_synthetic
from .trajio import TrajectoryDataset, load_trajectories_csv, save_trajectories_csv
from .types import (
    Barcode,
    DissimilaritySpace,
    PointBijection,
    Pose,
    Trajectory,
    Triplet,
    TripletMergeTree,
    validate_dissimilarity,
)

__version__ = "0.1.0"

"""
Model parameters, seeded graph generation, community labels and the partial-recovery metric
"""

from sbmrecovery.model.generator import generate, generate_ego, generate_labels
from sbmrecovery.model.graph import SparseGraph, format_labels, parse_labels, read_edge_list, write_edge_list
from sbmrecovery.model.labels import (
    CommunityLabels,
    ImbalanceStats,
    RecoveryResult,
    hoeffding_radius,
    imbalance_check,
    mislabel_counts,
    recovery_error,
)
from sbmrecovery.model.params import SbmParams

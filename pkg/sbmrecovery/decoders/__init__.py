"""
Decoders that estimate community labels: minimum bisection, the genie-aided single-node test, the two-step
procedure and reference baselines
"""

from sbmrecovery.decoders.base import (
    BisectionResult,
    DecoderBase,
    NeighborCounts,
    SeedStream,
    community_edge_counts,
    cut_size,
    neighbor_counts,
)
from sbmrecovery.decoders.baselines import RandomGuessDecoder, TruthStubDecoder
from sbmrecovery.decoders.bisection import (
    EXACT_BISECTION_MAX_NODES,
    ExactBisectionDecoder,
    LocalBisectionDecoder,
    min_bisection_exact,
    min_bisection_local,
)
from sbmrecovery.decoders.genie import GenieDecoder, genie_single_node_test, threshold_decisions
from sbmrecovery.decoders.registry import decoder_names, make_decoder
from sbmrecovery.decoders.two_step import (
    FAITHFUL_MAX_NODES,
    TwoStepDecoder,
    align_to_reference,
    leave_one_out_estimates,
    refine_labels,
    two_step_decode,
)

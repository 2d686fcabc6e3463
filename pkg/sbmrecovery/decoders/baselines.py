from typing import Optional

from sbmrecovery.decoders.base import DecoderBase, SeedStream
from sbmrecovery.model.graph import SparseGraph
from sbmrecovery.model.labels import LABEL_DTYPE, CommunityLabels
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.seeding import derive_seed, make_rng


class RandomGuessDecoder(DecoderBase):
    """Ignores the graph and labels every node by an independent fair coin"""

    name = "random-guess"

    def decode(
        self, graph: SparseGraph, params: SbmParams, seed: int, reference: Optional[CommunityLabels] = None
    ) -> CommunityLabels:
        rng = make_rng(derive_seed(seed, SeedStream.GUESS))
        return CommunityLabels(rng.integers(1, 3, size=graph.n, dtype=LABEL_DTYPE))


class TruthStubDecoder(DecoderBase):
    """Returns the true labels; checks the harness, not a decoding method"""

    name = "truth-stub"
    requires_reference = True

    def decode(
        self, graph: SparseGraph, params: SbmParams, seed: int, reference: Optional[CommunityLabels] = None
    ) -> CommunityLabels:
        return self._require_reference(graph, reference)

from typing import Callable, Dict, List

from sbmrecovery.decoders.base import DecoderBase
from sbmrecovery.decoders.baselines import RandomGuessDecoder, TruthStubDecoder
from sbmrecovery.decoders.bisection import DEFAULT_RESTARTS, ExactBisectionDecoder, LocalBisectionDecoder
from sbmrecovery.decoders.genie import GenieDecoder
from sbmrecovery.decoders.two_step import TwoStepDecoder
from sbmrecovery.utils.exceptions import ParameterError

DecoderFactory = Callable[[int, bool], DecoderBase]

_DECODER_FACTORIES: Dict[str, DecoderFactory] = {
    "exact-bisection": lambda restarts, use_threshold_rule: ExactBisectionDecoder(),
    "local-bisection": lambda restarts, use_threshold_rule: LocalBisectionDecoder(restarts),
    "two-step": lambda restarts, use_threshold_rule: TwoStepDecoder(
        LocalBisectionDecoder(restarts), faithful=False, use_threshold_rule=use_threshold_rule
    ),
    "two-step-faithful": lambda restarts, use_threshold_rule: TwoStepDecoder(
        LocalBisectionDecoder(restarts), faithful=True, use_threshold_rule=use_threshold_rule
    ),
    "genie": lambda restarts, use_threshold_rule: GenieDecoder(),
    "random-guess": lambda restarts, use_threshold_rule: RandomGuessDecoder(),
    "truth-stub": lambda restarts, use_threshold_rule: TruthStubDecoder(),
}

for key, factory in _DECODER_FACTORIES.items():
    assert factory(1, False).name == key, f"Decoder registered as {key} reports an inconsistent name"


def decoder_names() -> List[str]:
    return list(_DECODER_FACTORIES)


def make_decoder(name: str, restarts: int = DEFAULT_RESTARTS, use_threshold_rule: bool = False) -> DecoderBase:
    """
    Instantiate a decoder by its command-line name

    :param restarts: local-search restarts, for the decoders that use local search
    :param use_threshold_rule: two-step refinement with the imbalance-corrected threshold instead of plain majority
    """
    try:
        factory = _DECODER_FACTORIES[name]
    except KeyError:
        raise ParameterError(f"Unknown decoder {name!r}; choose one of {', '.join(decoder_names())}") from None
    return factory(restarts, use_threshold_rule)

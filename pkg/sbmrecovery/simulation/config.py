import dataclasses
import os

from sbmrecovery.decoders.bisection import DEFAULT_RESTARTS


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if isinstance(value, str) and value.strip() else default


DEFAULT_WORKERS = 1
DEFAULT_TRIALS = 200
DEFAULT_OUTPUT_DIR = "."
DEFAULT_ITERATIONS = 2  # conjectured refinement steps reported next to the refined bound
DEFAULT_DECODER = "two-step"


@dataclasses.dataclass
class SimulationConfig:
    workers: int = dataclasses.field(default_factory=lambda: _env_int("SBMRECOVERY_WORKERS", DEFAULT_WORKERS))
    trials: int = dataclasses.field(default_factory=lambda: _env_int("SBMRECOVERY_TRIALS", DEFAULT_TRIALS))
    output_dir: str = dataclasses.field(
        default_factory=lambda: os.getenv("SBMRECOVERY_OUTPUT_DIR") or DEFAULT_OUTPUT_DIR
    )  # where the CLI writes files when no explicit path is given
    decoder: str = DEFAULT_DECODER
    restarts: int = DEFAULT_RESTARTS  # local-search restarts per first-step run
    iterations: int = DEFAULT_ITERATIONS

    def output_path(self, filename: str) -> str:
        return os.path.join(self.output_dir, filename)

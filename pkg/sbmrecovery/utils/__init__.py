from sbmrecovery.utils.exceptions import (
    BudgetError,
    Error,
    ParameterError,
    PreconditionError,
    SolverError,
    TrialError,
)
from sbmrecovery.utils.logging import get_logger, use_sbmrecovery_log_handler
from sbmrecovery.utils.seeding import derive_seed, make_rng

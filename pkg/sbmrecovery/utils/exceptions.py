from typing import Optional


class Error(Exception):
    pass


class ParameterError(ValueError, Error):
    """
    Model, bound or decoder parameters violate a stated constraint (e.g. ``a > b > 0``)
    """


class BudgetError(ValueError, Error):
    """
    A decoder refuses an instance that exceeds its enumeration or runtime budget
    """

    def __init__(self, decoder: str, n: int, limit: int, suggestion: Optional[str] = "local-bisection"):
        self.decoder = decoder
        self.n = n
        self.limit = limit
        self.suggestion = suggestion

        message = f"{decoder} is limited to n <= {limit} nodes, got n = {n}"
        if suggestion is not None:
            message += f"; use --decoder {suggestion} for larger graphs"
        super().__init__(message)

    def __reduce__(self):
        return self.__class__, (self.decoder, self.n, self.limit, self.suggestion)


class PreconditionError(RuntimeError, Error):
    pass


class SolverError(ArithmeticError, Error):
    pass


class TrialError(RuntimeError, Error):
    """
    Raised by the Monte Carlo harness when a single trial fails
    """

    def __init__(self, trial_index: int, seed: int, original: BaseException):
        self.trial_index = trial_index
        self.seed = seed
        self.original = original

        super().__init__(f"Trial {trial_index} (seed {seed}) failed: {original!r}")

    def __reduce__(self):
        return self.__class__, (self.trial_index, self.seed, self.original)

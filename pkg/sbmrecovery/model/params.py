import pydantic.v1 as pydantic

PositiveReal = pydantic.confloat(gt=0, allow_inf_nan=False)


@pydantic.dataclasses.dataclass
class SbmParams:
    """
    Symmetric two-community block model on ``n`` nodes: a pair of nodes is joined with probability a/n when both
    share a community and b/n otherwise.
    """

    a: PositiveReal  # type: ignore
    b: PositiveReal  # type: ignore
    n: pydantic.conint(ge=2)  # type: ignore

    @pydantic.validator("b")
    def _b_below_a(cls, b, values):
        a = values.get("a")
        if a is not None and not b < a:
            raise ValueError(f"a must be > b, got a={a}, b={b}")
        return b

    @pydantic.validator("n")
    def _probabilities_at_most_one(cls, n, values):
        a = values.get("a")
        if a is not None and a > n:
            raise ValueError(f"a/n must be <= 1 for valid edge probabilities, got a={a}, n={n}")
        return n

    @property
    def p_in(self) -> float:
        return self.a / self.n

    @property
    def p_out(self) -> float:
        return self.b / self.n

    def with_nodes(self, n: int) -> "SbmParams":
        return SbmParams(a=self.a, b=self.b, n=n)

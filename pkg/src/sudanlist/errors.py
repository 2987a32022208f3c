class FieldMismatchError(ValueError):
    """Operands live in different prime fields."""


class ParameterError(ValueError):
    """Decoder parameters violate the guarantees the algorithm relies on."""


class GridInfeasible(ParameterError):
    """No (m, l) split satisfies both the existence and the divisibility bound."""


class InterpolationFailure(RuntimeError):
    """The constraint system had only the trivial solution where one was guaranteed."""


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured candidate budget."""

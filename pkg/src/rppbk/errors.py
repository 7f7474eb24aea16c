"""Exception hierarchy shared by all modules."""


class RppbkError(Exception):
    """Base class for every error raised by this package."""


class ParseError(RppbkError, ValueError):
    pass


class NotAPartition(RppbkError, ValueError):
    pass


class NotContained(RppbkError, ValueError):
    pass


class EmptyRestriction(RppbkError, ValueError):
    pass


class NonConvexDomain(RppbkError, ValueError):
    pass


class VariableOutOfRange(RppbkError, ValueError):
    pass


class NotATable(RppbkError, ValueError):
    """A {1,2}-filling whose columns do not weakly increase downward."""


class NotMixed(RppbkError, ValueError):
    pass


class NotADescent(RppbkError, ValueError):
    pass


class NotBenign(RppbkError, ValueError):
    pass


class NotAnRpp(RppbkError, ValueError):
    pass


class NotAnSsyt(RppbkError, ValueError):
    pass


class NotAdmissible(RppbkError, ValueError):
    pass


class NonRepresentableInput(RppbkError, ValueError):
    pass


class DisconnectedShape(RppbkError, ValueError):
    pass


class EmptyColumns(RppbkError, ValueError):
    """A shape with an unoccupied column left of its last column."""


class InfeasibleCeq(RppbkError, ValueError):
    pass


class TerminationError(RppbkError, RuntimeError):
    """A rewriting step failed to decrease the potential function."""

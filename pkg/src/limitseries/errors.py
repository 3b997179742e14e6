"""Exception types raised by the library."""


class LimitSeriesError(ValueError):
    """Base class for every error raised on bad input."""


class InvalidPairError(LimitSeriesError):
    """A vanishing-sequence pair fails (A1)-(A3) or a size guard."""


class LengthMismatch(InvalidPairError):
    def __init__(self, side, expected, got):
        self.side = side
        self.expected = expected
        self.got = got
        super().__init__(f"LengthMismatch(side={side}, expected={expected}, got={got})")


class NotStrictlyIncreasing(InvalidPairError):
    def __init__(self, side, index):
        self.side = side
        self.index = index
        super().__init__(f"NotStrictlyIncreasing(side={side}, index={index})")


class OutOfRange(InvalidPairError):
    def __init__(self, side, index):
        self.side = side
        self.index = index
        super().__init__(f"OutOfRange(side={side}, index={index})")


class A3Violation(InvalidPairError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"A3Violation(i={i})")


class IndexOutOfRange(LimitSeriesError):
    def __init__(self, i, r):
        self.i = i
        super().__init__(f"IndexOutOfRange(i={i}, valid range 0..{r})")


class TripleLengthMismatch(LimitSeriesError):
    def __init__(self, field, expected, got):
        self.field = field
        super().__init__(f"LengthMismatch({field}: expected {expected}, got {got})")


class NotAdmissible(LimitSeriesError):
    def __init__(self, violations):
        self.violations = list(violations)
        shown = ", ".join(f"{v.cond}@j={v.j}" for v in self.violations[:6])
        more = "" if len(self.violations) <= 6 else ", ..."
        super().__init__(f"NotAdmissible({shown}{more})")


class NotConnectedAt(LimitSeriesError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"NotConnectedAt(i={i})")


class NotConnected(LimitSeriesError):
    def __init__(self, indices):
        self.indices = tuple(indices)
        super().__init__(f"NotConnected(at i in {list(self.indices)})")


class InvalidRange(LimitSeriesError):
    def __init__(self, r, d):
        super().__init__(f"InvalidRange(r={r}, d={d}): need 0 <= r <= d")


class BudgetExceeded(LimitSeriesError):
    def __init__(self, d, budget):
        self.d = d
        self.budget = budget
        super().__init__(f"d={d} exceeds the sweep budget {budget}; raise the budget to proceed")


class PolicyError(LimitSeriesError):
    pass

"""Three-valued logic for mathematical predicates."""

import enum


class Truth(enum.Enum):
    """Outcome of a predicate: TRUE and FALSE are certified, UNKNOWN means
    the work limits were exhausted without a decision."""

    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    def __bool__(self):
        raise TypeError(
            "Truth value cannot be coerced to bool implicitly; "
            "use to_bool() or compare against Truth members")

    def to_bool(self):
        """Strict conversion; raises UnknownTruthError on UNKNOWN."""
        if self is Truth.UNKNOWN:
            raise UnknownTruthError("predicate is undecided")
        return self is Truth.TRUE

    def negate(self):
        if self is Truth.TRUE:
            return Truth.FALSE
        if self is Truth.FALSE:
            return Truth.TRUE
        return Truth.UNKNOWN

    def __str__(self):
        return self.value


class UnknownTruthError(ValueError):
    """Raised when an Unknown predicate is forced to a native boolean."""

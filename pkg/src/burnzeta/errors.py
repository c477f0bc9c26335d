class BurnzetaError(Exception):
    """Base class for every error raised by the library."""

    kind = "error"

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class ValidationError(BurnzetaError, ValueError):
    kind = "validation"


class CapacityError(BurnzetaError):
    kind = "capacity"


class LatticeMismatchError(BurnzetaError, ValueError):
    kind = "lattice-mismatch"


class NonIntegralMarksError(BurnzetaError, ArithmeticError):
    """A marks vector that is not the marks of any virtual G-set."""

    kind = "non-integral"

    def __init__(self, message, cls_label=None, remainder=None):
        super().__init__(message)
        self.cls_label = cls_label
        self.remainder = remainder

    def to_dict(self):
        return {"error": self.kind, "message": str(self), "class": self.cls_label,
                "remainder": self.remainder}


class NotDivisibleError(BurnzetaError, ArithmeticError):
    kind = "not-divisible"

    def __init__(self, divisor, cls_label, remainder):
        super().__init__(f"coefficient at {cls_label} leaves remainder {remainder} modulo {divisor}")
        self.divisor = divisor
        self.cls_label = cls_label
        self.remainder = remainder

    def to_dict(self):
        return {"error": self.kind, "message": str(self), "divisor": self.divisor,
                "class": self.cls_label, "remainder": self.remainder}


class RationalExponentError(BurnzetaError, ValueError):
    kind = "rational-exponent"


class StratumError(BurnzetaError, ValueError):
    kind = "invalid-stratum"

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))

    def to_dict(self):
        return {"error": self.kind, "message": str(self), "problems": self.problems}

"""Exception hierarchy. Every domain error carries a stable short ``code``."""


class RatGaugeError(ValueError):
    code = "E_DOMAIN"


class ComplexParseError(RatGaugeError):
    code = "E_PARSE"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class CapacityError(RatGaugeError):
    code = "E_CAPACITY"


class BasepointError(RatGaugeError):
    code = "E_BASEPOINT"


class GroupSpecError(RatGaugeError):
    code = "E_GROUP_SPEC"


class FactorizationError(RatGaugeError):
    code = "E_FACTOR"


class StabilityRangeError(RatGaugeError):
    code = "E_RANGE"

    def __init__(self, s, n):
        from fractions import Fraction

        bound = Fraction(s, 2) + 1
        self.s = s
        self.n = n
        self.minimal_n = s // 2 + 2
        text = str(bound) if bound.denominator == 1 else f"{float(bound):g}"
        super().__init__(
            f"Lc_n stable range violated for s={s}: requires n > {text} "
            f"(smallest valid n is {self.minimal_n}, got n={n})"
        )


class InvalidParameterError(RatGaugeError):
    code = "E_PARAM"

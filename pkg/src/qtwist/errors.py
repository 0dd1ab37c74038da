"""Exception hierarchy.  Every error carries a short machine-readable name."""


class QtwistError(Exception):
    pass


class QEqualsOne(QtwistError, ValueError):
    pass


class DegenerateQ(QtwistError, ValueError):
    pass


class MissingRadical(QtwistError, KeyError):
    pass


class BadRadical(QtwistError, ValueError):
    pass


class BadDiagonal(QtwistError, ValueError):
    pass


class PositiveOffDiagonal(QtwistError, ValueError):
    pass


class ZeroAsymmetry(QtwistError, ValueError):
    pass


class NotSymmetrizable(QtwistError, ValueError):
    pass


class QiiOne(QtwistError, ValueError):
    pass


class CartanCompatibility(QtwistError, ValueError):
    pass


class OrderViolation(QtwistError, ValueError):
    pass


class ZeroEntry(QtwistError, ValueError):
    pass


class SizeMismatch(QtwistError, ValueError):
    pass


class RootMismatch(QtwistError, ValueError):
    pass


class NotTwistEquivalent(QtwistError, ValueError):
    pass


class NotPositive(QtwistError, ValueError):
    pass


class SizeBudgetExceeded(QtwistError, RuntimeError):
    pass


class DegreeBudgetExceeded(QtwistError, RuntimeError):
    pass


class ModelMismatch(QtwistError, ValueError):
    pass


class NotHomogeneous(QtwistError, ValueError):
    pass


class InhomogeneousRelations(QtwistError, ValueError):
    pass


class NotInvariant(QtwistError, ValueError):
    pass


class CocycleViolation(QtwistError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotBijective(QtwistError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotSelfDistributive(QtwistError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class BadTwistTable(QtwistError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class UnsupportedN(QtwistError, ValueError):
    pass


class ParseError(QtwistError, ValueError):
    def __init__(self, reason, line=None):
        super().__init__(reason if line is None else f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class SchemaError(QtwistError, ValueError):
    def __init__(self, field, reason=""):
        super().__init__(f"{field}: {reason}" if reason else field)
        self.field = field


class UnknownCommand(QtwistError, ValueError):
    pass

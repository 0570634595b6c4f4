class ValidationError(ValueError):
    def __init__(self, message, errors):
        super(ValidationError, self).__init__(message)
        self.errors = errors
        self.message = message

    def __str__(self):
        msg = "{}\n".format(self.message)
        for error in self.errors:
            msg += "\t{}\n".format(error)
        return msg


class HorizonExceeded(ValueError):
    pass


class NumericFailure(ArithmeticError):
    """Base class for numerical failures. `reason` is the machine readable
    tag written to reports."""

    @property
    def reason(self):
        return type(self).__name__


class NonConvergence(NumericFailure):
    def __init__(self, message, value=None, oscillation=None, n_used=None):
        super(NonConvergence, self).__init__(message)
        self.value = value
        self.oscillation = oscillation
        self.n_used = n_used


class EigenvalueHit(NumericFailure):
    pass


class PoleHit(NumericFailure):
    pass


class SingularAtOmega(NumericFailure):
    pass


class ExtrapolationUnstable(NumericFailure):
    pass


class QuadratureFailure(NumericFailure):
    pass


class BetaFailure(NumericFailure):
    pass


class SpectrumIncomplete(NumericFailure):
    pass


class NotApplicable(NumericFailure):
    pass

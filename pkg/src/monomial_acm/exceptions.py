class MonomialAcmError(Exception):
    pass


class MathError(MonomialAcmError):
    """
    The input is well formed, but the requested object does not exist or the operation is undefined for it
    """
    pass


class ParseError(MonomialAcmError, ValueError):
    pass


class ValidationMismatch(MonomialAcmError):
    """
    Two routes which must agree produced different answers
    """
    pass


class UnitIdealError(MathError):
    pass


class ZeroIdealError(MathError):
    pass


class AmbientMismatchError(MathError, ValueError):
    pass


class NotSquarefreeError(MathError):
    pass


class VoidComplexError(MathError):
    pass


class FullSimplexError(MathError):
    pass


class FaceNotInComplexError(MathError):
    pass


class SkeletonRangeError(MathError, ValueError):
    pass


class NotRegularSequenceError(MathError):
    pass


class TheoremOutOfScopeError(MathError):
    pass


class NotFullSupportedError(MathError):
    pass


class NotPolymatroidalError(MathError):
    pass


class WrongDimensionError(MathError):
    pass


class PreconditionNotACMError(MathError):
    pass

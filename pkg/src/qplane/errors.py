"""Exception types raised by the library, with stable codes for the CLI.

Every error carries a machine-readable ``code`` and the exit status the
command-line front end uses when the error escapes to it.
"""


class QAlgebraError(Exception):
    """Base class for all library errors."""

    code = "error"
    exit_code = 1


class ParseInputError(QAlgebraError):
    """Problems with textual input (expressions, weights, scalars)."""

    code = "parse"
    exit_code = 2


class ExprSyntaxError(ParseInputError):
    code = "syntax"

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class CategoryError(ParseInputError):
    """A syntactically valid expression used a symbol or operation that its
    syntactic category does not allow (e.g. ``t`` inside an algebra
    expression, or a negative power of ``y``)."""

    code = "category"

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class PreconditionError(QAlgebraError):
    """An operation was called outside its domain of validity."""

    code = "precondition"
    exit_code = 3


class NotCoprimeError(PreconditionError):
    code = "not_coprime"


class ZeroArgumentError(PreconditionError):
    code = "zero_argument"


class ZeroDilationError(PreconditionError):
    code = "zero_dilation"


class InvalidParamError(PreconditionError):
    code = "invalid_param"


class InvalidWParamsError(PreconditionError):
    code = "invalid_w_params"


class UnsupportedNError(PreconditionError):
    code = "unsupported_n"


class RootOfUnityError(QAlgebraError):
    """The deformation parameter is zero, one, or a root of unity."""

    code = "root_of_unity"
    exit_code = 4

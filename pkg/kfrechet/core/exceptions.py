from pydantic import ValidationError


class KFrechetError(Exception):
    """Base class for every error the library raises on purpose."""


class CurveFormatError(KFrechetError, ValueError):
    """Curve text or JSON could not be turned into a valid polygonal curve."""


class ParameterRangeError(KFrechetError, ValueError):
    """A numeric argument lies outside the domain the operation is defined on."""


class SelectionError(KFrechetError, ValueError):
    """A selection names components the diagram does not have."""


class FormulaError(KFrechetError, ValueError):
    """A CNF formula is malformed or outside what the reduction accepts."""


class BoxInstanceError(KFrechetError, ValueError):
    """A box-problem instance could not be loaded."""


class OracleError(KFrechetError, ValueError):
    """An oracle was handed an input it cannot enumerate exhaustively."""


class SearchError(KFrechetError, RuntimeError):
    """The epsilon search could not bracket the optimum."""


def summarize_validation_error(error: ValidationError) -> str:
    """One line per failing location, without the input values.

    pydantic renders every input into its message; curve files can be large and
    settings can carry values nobody wants echoed, so only locations and messages
    are kept.
    """
    return "; ".join(
        f"{'.'.join(str(part) for part in problem['loc']) or 'input'} ({problem['msg']})"
        for problem in error.errors()
    )

import argparse
import logging
import sys
from collections.abc import Callable
from functools import wraps

from pydantic import ValidationError

from kfrechet.constants import EXIT_ERROR
from kfrechet.core.exceptions import KFrechetError
from kfrechet.core.settings import SettingsError

logger = logging.getLogger(__name__)

type Command = Callable[[argparse.Namespace], int]


def log_exception(func: Command) -> Command:
    """Turn expected failures of a command into exit status 2 and one stderr line."""

    @wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            return func(args)
        except (KFrechetError, SettingsError, ValidationError, OSError) as exc:
            error_details = {
                "command": args.command,
                "error_type": exc.__class__.__name__,
                "error_message": str(exc),
                "handler": func.__name__,
            }
            logger.error(
                f"Exception occurred: {exc.__class__.__name__} - {exc!s}", extra=error_details
            )
            print(f"kfrechet {args.command}: {exc}", file=sys.stderr)
            return EXIT_ERROR

    return wrapper

"""Main entry point for CLI commands."""
import logging
import sys

from ..constants import EXIT_CHECK_FAILED
from ..exceptions import IHCalculatorError
from . import app, generic, hypersurface, schubert, verify

logger = logging.getLogger(__name__)

app.command("generic")(generic.generic)
app.command("schubert")(schubert.schubert)
app.command("hypersurface")(hypersurface.hypersurface)
app.command("verify")(verify.verify)


def main() -> None:  # noqa: D401
    """CLI entrypoint."""
    try:
        app()
    except IHCalculatorError as e:
        logger.error("%s: %s", type(e).__name__, e)
        sys.exit(e.exit_code)
    except Exception as e:
        logger.exception(f"Unhandled exception: {e}")
        sys.exit(EXIT_CHECK_FAILED)


if __name__ == "__main__":
    main()

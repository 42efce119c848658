import logging
import sys

from seqalg.config import Settings

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_configured = False


def configure_logging(settings: Settings) -> bool:
    """
    Configure root logging for a CLI run. Returns True the first time.
    Logs go to stderr so stdout carries rendered results only.
    """
    global _configured
    if _configured:
        return False

    level = getattr(logging, settings.log_level, None)
    if not isinstance(level, int):
        level = logging.WARNING
        logger.warning("Unknown SEQALG_LOG_LEVEL %r, using WARNING", settings.log_level)

    logging.basicConfig(level=level, format=_LOG_FORMAT, stream=sys.stderr)
    if sys.getrecursionlimit() < settings.recursion_limit:
        sys.setrecursionlimit(settings.recursion_limit)
    _configured = True
    logger.debug(
        "Logging configured: level=%s recursion_limit=%d",
        settings.log_level,
        sys.getrecursionlimit(),
    )
    return True


def run_metadata(command: str, mode: str = "rational/univariate") -> dict:
    """Per-run tags logged at INFO by the CLI: the command and its evaluation mode."""
    return {"command": command, "mode": mode}

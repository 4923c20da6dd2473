"""Main entry point for the drinfeld-charpoly command line."""

from .cli import app
from .config import LOG_LEVEL
from .logger import get_logger, setup_logging

logger = get_logger(__name__)


def main():
    """Configure logging and run the CLI."""
    setup_logging(level=LOG_LEVEL)
    logger.debug("Starting drinfeld-charpoly")
    app()


if __name__ == "__main__":
    main()

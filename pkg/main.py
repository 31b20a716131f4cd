import logging
import sys
from logging.handlers import TimedRotatingFileHandler

from src.cli import cli
from src.utils.load_env import load_dotenv_helper
from src.utils.settings import Settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATEFMT = "%Y-%m-%dT%H:%M:%S%z"


def configure_logging(log_file=None, level="INFO"):
    """Attach one handler to the root logger.

    A midnight-rotating file handler keeping 30 days is used when ``log_file``
    is set, otherwise records go to stderr.
    """
    if log_file:
        handler = TimedRotatingFileHandler(
            filename=log_file,
            when="midnight",
            interval=1,
            backupCount=30,
        )
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))

    root = logging.getLogger()
    root.setLevel(level.upper())
    root.addHandler(handler)
    return handler


def main(argv=None):
    load_dotenv_helper()
    settings = Settings.from_env()
    configure_logging(settings.log_file, settings.log_level)
    logging.info("Starting the application")
    try:
        cli.main(args=argv, prog_name="attitude-ocp", obj=settings)
    except Exception:
        logging.exception("Unexpected error - argv=%s", argv)
        raise
    finally:
        logging.info("Application shutdown completed")


if __name__ == "__main__":
    main()

import logging
from pathlib import Path

from dotenv import load_dotenv


def load_dotenv_helper() -> bool:
    """Load a .env file from the default search path, falling back to the current working directory.

    Returns:
        bool: True when a .env file was found and loaded.
    """
    if load_dotenv():
        logging.debug("Loaded .env from default search path")
        return True
    cwd_env = Path.cwd() / ".env"
    if cwd_env.exists():
        load_dotenv(dotenv_path=cwd_env)
        logging.debug("Loaded .env from CWD - path=%s", cwd_env)
        return True
    logging.debug("No .env file found; using process environment only")
    return False

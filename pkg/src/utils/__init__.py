"""utils package public API."""

from src.utils.load_env import load_dotenv_helper
from src.utils.settings import Settings

__all__ = ["Settings", "load_dotenv_helper"]

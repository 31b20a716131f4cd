import os
from typing import Optional

from pydantic import BaseModel, Field

from src.autodiff import DerivativeMode

PREFIX = "ATTITUDE_OCP_"


class Settings(BaseModel):
    """Process-wide settings read from ``ATTITUDE_OCP_*`` environment variables.

    Example:
        >>> os.environ["ATTITUDE_OCP_JACOBIAN_WORKERS"] = "4"
        >>> Settings.from_env().jacobian_workers
        4
    """

    log_file: Optional[str] = Field(default=None, description="Rotating log file; stderr when unset")
    log_level: str = Field(default="INFO", description="Root logger level name")
    jacobian_workers: int = Field(default=1, ge=1, description="Threads for Jacobian column chunks")
    jacobian_chunk: int = Field(default=64, ge=1, description="Columns per Jacobian chunk")
    derivative_mode: DerivativeMode = Field(default=DerivativeMode.DUAL, description="Default Jacobian engine")

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            "log_file": os.getenv(f"{PREFIX}LOG_FILE"),
            "log_level": os.getenv(f"{PREFIX}LOG_LEVEL"),
            "jacobian_workers": os.getenv(f"{PREFIX}JACOBIAN_WORKERS"),
            "jacobian_chunk": os.getenv(f"{PREFIX}JACOBIAN_CHUNK"),
            "derivative_mode": os.getenv(f"{PREFIX}DERIVATIVE_MODE"),
        }
        return cls(**{key: value for key, value in values.items() if value not in (None, "")})

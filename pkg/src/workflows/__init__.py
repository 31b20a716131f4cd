"""workflows package public API.

Expose the commonly used classes/functions for cleaner imports:

    from src.workflows import ManeuverWorkflow, get_workflow
"""

from .workflow import ManeuverWorkflow
from .workflow_factory import build_options, get_workflow

__all__ = ["ManeuverWorkflow", "build_options", "get_workflow"]

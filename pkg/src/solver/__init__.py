"""solver package public API."""

from src.autodiff import DerivativeMode, directional_derivative, jacobian
from src.solver.initialize import initial_guess, initialize
from src.solver.newton import newton_armijo
from src.solver.solve import solve

__all__ = [
    "DerivativeMode",
    "directional_derivative",
    "initial_guess",
    "initialize",
    "jacobian",
    "newton_armijo",
    "solve",
]

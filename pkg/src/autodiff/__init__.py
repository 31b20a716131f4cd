"""autodiff package public API."""

from src.autodiff.derivatives import DerivativeMode, directional_derivative, jacobian, linearize
from src.autodiff.dual import Dual

__all__ = ["DerivativeMode", "Dual", "directional_derivative", "jacobian", "linearize"]

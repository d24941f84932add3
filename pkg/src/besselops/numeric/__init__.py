"""Floating-point layer: Macdonald kernels, complex log-gamma, adaptive
quadrature, and the numerical checks of the integral representations."""

from .kernels import BACKEND
from .quadrature import QuadratureConfig, QuadratureError

__all__ = ["BACKEND", "QuadratureConfig", "QuadratureError"]

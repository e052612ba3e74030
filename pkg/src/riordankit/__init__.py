"""Exact Riordan arrays, one-pth arrays and identity verification."""

from .riordan import RiordanArray
from .series import DEFAULT_ORDER, PowerSeries

__version__ = "0.1.0"

__all__ = ["DEFAULT_ORDER", "PowerSeries", "RiordanArray"]

"""Exact tools for counting inequalities, lattice points and midpoints in
integer programming geometry."""

__version__ = "0.1.0"

from .kernels import BACKEND  # noqa: E402

__all__ = ["__version__", "BACKEND"]

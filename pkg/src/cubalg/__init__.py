"""Exact computational algebra for elliptic cohomology: graded polynomial
rings, elliptic-curve formal group laws, weighted-projective descent,
Hopf algebroid cobar cohomology, and the mod-2 dual Steenrod algebra."""

__version__ = "0.1.0"

from .kernels import BACKEND as KERNEL_BACKEND  # noqa: F401

"""Kernel backend selection: compiled extension if built, else pure Python."""

try:
    from ._kernels import mul_terms, mul_terms_bounded  # type: ignore
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from ._kernels_py import mul_terms, mul_terms_bounded
    BACKEND = "python"

__all__ = ["mul_terms", "mul_terms_bounded", "BACKEND"]

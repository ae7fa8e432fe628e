"""Build hook: compile the sparse-multiplication kernel extension when
Cython (and a C toolchain) is available; otherwise install pure Python
only -- `cubalg.kernels` falls back to `_kernels_py` at import time."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/cubalg/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

"""Build script for the optional compiled kernels.

The extension is a performance add-on only: if Cython or a C compiler is
unavailable the package installs anyway and falls back to the pure-Python
kernels at import time.
"""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("MULTIHARM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "multiharm._kernels._speedups",
                    ["src/multiharm/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        extensions = []

setup(ext_modules=extensions)

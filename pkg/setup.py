"""Build script.

The compiled kernel is optional: if Cython or a C compiler is missing the
extension is skipped and the package falls back to the pure-Python kernel
at import time.  Set CROSSNEST_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CROSSNEST_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "crossnest._fastkern",
                    ["src/crossnest/_fastkern.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

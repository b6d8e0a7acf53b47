"""Build hook: compiles the optional counting kernel when Cython is available.

The package is fully functional without the extension; curveclass.counting
falls back to the pure-Python kernel at import time.  Set CURVECLASS_PURE=1
to skip the compile entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CURVECLASS_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "curveclass._countcore",
                    ["src/curveclass/_countcore.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

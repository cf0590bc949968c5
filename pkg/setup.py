import os

from setuptools import setup

ext_modules = []
if os.environ.get("HFPQ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hfpq/_fastscan.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python fallback is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)

"""Build script: compiles the optional straightening speedup extension.

The package works without the extension (a pure-Python kernel is selected at
import time); the build simply skips it when Cython or a C compiler is not
available.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/fusionring/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

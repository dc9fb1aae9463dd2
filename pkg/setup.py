"""Build the optional Cython BFS kernel.

The package works without it (a pure-Python kernel is selected at import
time), so a missing compiler or Cython only costs speed, not correctness.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("otiscube._fastpath", ["src/otiscube/_fastpath.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)

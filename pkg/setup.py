"""Build hook for the optional compiled kernels.

The package is pure Python; the Cython extension only accelerates the
exact-rational matrix kernels.  If Cython (or a C compiler) is missing the
build falls through to the pure lane, which is selected at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("fusionaudit.exactlin._ckernels",
                   ["src/fusionaudit/exactlin/_ckernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

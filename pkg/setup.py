"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (kmx.kernels falls
back to the pure-Python implementation); the extension only makes the hot
loops fast. `optional=True` keeps installation working on hosts without a
C toolchain.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kmx._kernels",
                sources=["src/kmx/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

"""Build script: compiles the optional C kernel for the Bott-sum inner loop.

The package works without the extension; `bottiter.kernel` falls back to the
pure-Python implementation when `bottiter._fastkernel` is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "bottiter._fastkernel",
                sources=["src/bottiter/_fastkernel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)

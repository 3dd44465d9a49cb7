"""Build the optional compiled kernel.

The package is fully functional without it (a pure-Python fallback is
selected at import time); the extension only speeds up the cyclotomic
coefficient kernel.  Build in place with

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "verdex._cycspeed",
                ["src/verdex/_cycspeed.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

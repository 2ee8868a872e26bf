import os

from setuptools import Extension, setup

# The compiled kernel is optional: without it the package falls back to the
# pure-Python term arithmetic at import time.
ext_modules = []
if os.environ.get("SUPERQUIVER_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "superquiver.kernel._ckernel",
                    ["src/superquiver/kernel/_ckernel.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

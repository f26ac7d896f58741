"""Build hook for the optional compiled kernels.

The package is pure Python unless Cython and a C compiler are available, in
which case noncross._kernels_c is built.  Everything falls back to the pure
implementation at import time, so a failed extension build is harmless.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "noncross._kernels_c",
                ["src/noncross/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

"""Build script: compiles the enumeration kernels when a toolchain is available.

The package is fully functional without the extension; `rigidcensus.kernels`
falls back to the pure-Python implementations at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "rigidcensus._kernels_fast",
            sources=["src/rigidcensus/_kernels_fast.pyx"],
            language="c++",
            include_dirs=["src/rigidcensus"],
            extra_compile_args=["-O3", "-std=c++17"],
        )
    ]
    for ext in extensions:
        ext.optional = True  # a failed compile degrades to the pure backend
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)

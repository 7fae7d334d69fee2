"""Build the optional Cython kernels.

The package works without them: ``ecensus.kernels`` falls back to the
pure-Python implementations when ``ecensus._ckernels`` cannot be imported.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ecensus._ckernels",
                ["src/ecensus/_ckernels.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)

"""Build hook for the optional Cython kernels.

The extension is marked optional: if Cython or a C compiler is missing the
package still installs and ``sdcalc.kernels`` falls back to pure Python.
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
                "sdcalc._ckernels",
                ["src/sdcalc/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)

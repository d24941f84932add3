"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a failed C build must not fail the install.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "besselops.numeric._ckernels",
                ["src/besselops/numeric/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # no cython / no compiler: fall back to pure python
    print(f"besselops: skipping compiled kernels ({exc!r})")

setup(ext_modules=ext_modules)

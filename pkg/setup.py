"""Build script: compiles the optional sieve-marking extension.

The package works without the extension (a numpy fallback is selected at
import time); the extension only accelerates segment marking for large
sieve limits. Build failures are therefore non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "primelab._sievecore",
                ["src/primelab/_sievecore.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"primelab: building without compiled sieve core ({exc})")

setup(ext_modules=ext_modules)

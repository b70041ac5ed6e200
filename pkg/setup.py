"""Build script: compiles the optional speedup kernels.

The package works without the extension (pure-Python kernels are picked
up at import time), so a failed Cython build degrades gracefully.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hopfgenus/_kernels/_speedups.pyx"],
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # pragma: no cover
    print("speedup extension skipped: %s" % exc)

setup(ext_modules=ext_modules)

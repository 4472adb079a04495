"""Build script: compiles the optional fast kernel extension.

The package works without the extension (pure-Python kernels are selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "cozerograph._kernels._speed",
                ["src/cozerograph/_kernels/_speed.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

"""Build hook for the optional compiled transition-map kernel.

The package is pure Python except for ``b2crystal._kernel_c``, a small
Cython module holding the hot integer kernels.  If Cython or a C compiler
is unavailable the extension is skipped and the package falls back to the
pure-Python kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "b2crystal._kernel_c",
                ["src/b2crystal/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

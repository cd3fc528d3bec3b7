"""Build script.

The compiled kernel extension is optional: if Cython or a C compiler is
unavailable the install falls back to the NumPy backend, which implements
identical semantics.  Set FINRING_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: compiled kernels skipped ({exc}); "
                  f"the pure NumPy backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  f"the pure NumPy backend will be used")


ext_modules = []
cmdclass = {}
if os.environ.get("FINRING_NO_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "finring.backend._ckernels",
                    ["src/finring/backend/_ckernels.pyx"],
                    include_dirs=[numpy.get_include()],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
        cmdclass = {"build_ext": OptionalBuildExt}
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass=cmdclass)

"""Build script: compiles the optional integer-kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure here downgrades to a
pure build instead of aborting the install. Set ENTCAT_PURE_BUILD=1 to skip
the extension deliberately.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: building entcat._speedups failed (%s); "
            "falling back to the pure-Python kernels" % exc,
            file=sys.stderr,
        )


ext_modules = []
cmdclass = {}
if not os.environ.get("ENTCAT_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("entcat._speedups", ["src/entcat/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print(
            "warning: Cython not available; installing with pure-Python kernels",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass=cmdclass)

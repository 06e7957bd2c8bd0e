"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (pure numpy/Python fallback in
padekit._kernels_py); a failed compile downgrades to that fallback
instead of failing the install. Set PADEKIT_PURE=1 to skip the
extension entirely.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or Cython missing
            print(f"padekit: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"padekit: failed to build {ext.name} ({exc}); "
                  "falling back to pure-Python kernels", file=sys.stderr)


def extensions():
    if os.environ.get("PADEKIT_PURE") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "padekit._kernels_c",
        ["src/padekit/_kernels_c.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)

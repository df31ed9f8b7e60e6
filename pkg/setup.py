"""Build script: compiles the exact-elimination kernel when Cython and a C
toolchain are available; the pure-Python twin is used otherwise."""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Try to build the accelerator, fall back to pure Python on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"seaweeds: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"seaweeds: skipping {ext.name} ({exc})")


ext_modules = []
if os.environ.get("SEAWEEDS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("seaweeds._exactkernel", ["src/seaweeds/_exactkernel.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})

"""Build hooks: compile the optional word-kernel extension when possible.

The package is pure Python by default.  If Cython and a C compiler are
available at build time, systolab._wordkernel is compiled from the .pyx
source; any build failure falls back silently to the pure module, which
systolab.words selects at import.  Build in place for development with:

    python setup.py build_ext --inplace
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft fallback, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            print(f"warning: skipping optional extension build ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping optional extension {ext.name} ({exc})")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    return cythonize(
        [
            Extension(
                "systolab._wordkernel",
                ["src/systolab/_wordkernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)

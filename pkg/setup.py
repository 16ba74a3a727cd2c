"""Build script: compiles the hot interval kernel with Cython when available.

``paraq._kern`` is written in Cython "pure Python" style, so the same file
runs uncompiled.  If Cython or a C compiler is missing the build silently
falls back to the interpreted kernel; nothing else changes.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/paraq/_kern.py"],
        language_level="3",
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - depends on build machine
    import sys

    print(f"paraq: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)

import os

from setuptools import Extension, setup

# The BFS orbit kernel compiles to a C extension when Cython is available.
# The package works without it (pure-Python kernel selected at import).
ext_modules = []
if os.environ.get("SYMTORUS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("symtorus._orbitcore", ["src/symtorus/_orbitcore.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

"""Kernel selection for the BFS orbit closure.

The compiled kernel is used when it was built, the modulus fits in 16
bits, and SYMTORUS_PURE_PYTHON is not set. Otherwise the pure-Python
kernel runs; it accepts arbitrary big-int moduli.
"""

import os

from symtorus import _orbitpy

try:
    from symtorus import _orbitcore
except ImportError:
    _orbitcore = None

_COMPILED_LIMIT = 65536


def available_kernels():
    names = ["python"]
    if _orbitcore is not None:
        names.insert(0, "cython")
    return names


def kernel_for(modulus):
    """Name of the kernel that will run for the given modulus."""
    if (
        _orbitcore is not None
        and 1 < modulus < _COMPILED_LIMIT
        and os.environ.get("SYMTORUS_PURE_PYTHON") != "1"
    ):
        return "cython"
    return "python"


def bfs_orbit(start, mats, m, d, modulus, max_states):
    """Closure of ``start`` under the matrices mod ``modulus``."""
    if kernel_for(modulus) == "cython":
        return _orbitcore.bfs_orbit(start, mats, m, d, modulus, max_states)
    return _orbitpy.bfs_orbit(start, mats, m, d, modulus, max_states)

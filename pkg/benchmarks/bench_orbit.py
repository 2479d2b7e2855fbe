#!/usr/bin/env python3
"""Benchmark: compiled orbit kernel vs the pure-Python fallback.

Runs the same BFS closures through symtorus._orbitcore (if built) and
symtorus._orbitpy, checks that the results agree, and reports timings.

Usage:  python benchmarks/bench_orbit.py
"""

import time
from fractions import Fraction

from symtorus import orbitkernel
from symtorus.monodromy import (
    _action_tables,
    _encode,
    _state_modulus,
    validate_datum,
)
from symtorus.orbisurface import FuchsianSignature
from symtorus.torus import TorusElement

F = Fraction
T = TorusElement


def workloads():
    sig = FuchsianSignature(0, (2, 2, 2))
    yield "three half points, n=3, N=2", validate_datum(
        sig, (),
        (T([F(1, 2), 0]), T([0, F(1, 2)]), T([F(1, 2), F(1, 2)])))

    sig = FuchsianSignature(1, (3, 3, 3))
    yield "genus 1, three cone points of order 3, N=3", validate_datum(
        sig,
        (T([F(1, 3), F(1, 3)]), T([0, F(2, 3)])),
        (T([F(1, 3), 0]), T([0, F(1, 3)]), T([F(2, 3), F(2, 3)])))

    sig = FuchsianSignature(2, ())
    yield "genus 2 free tuple, N=4", validate_datum(
        sig,
        (T([F(1, 4), 0]), T([0, F(1, 4)]),
         T([F(1, 2), F(1, 4)]), T([F(1, 4), F(3, 4)])),
        (), dim=2)


def run_kernel(module, datum, cap=10 ** 6):
    sig = datum.signature
    m = 2 * sig.genus + sig.num_cone_points
    modulus = _state_modulus(datum)
    tables = _action_tables(sig, modulus)
    start = _encode(datum, modulus)
    begin = time.perf_counter()
    states = module.bfs_orbit(start, tables, m, datum.dim, modulus, cap)
    return states, time.perf_counter() - begin


def main():
    from symtorus import _orbitpy

    compiled = None
    if "cython" in orbitkernel.available_kernels():
        from symtorus import _orbitcore as compiled
    else:
        print("compiled kernel not built; showing pure-Python timings only")

    header = "%-45s %9s %10s %10s %8s" % (
        "workload", "states", "cython", "python", "speedup")
    print(header)
    print("-" * len(header))
    for label, datum in workloads():
        pure_states, pure_time = run_kernel(_orbitpy, datum)
        if compiled is not None:
            fast_states, fast_time = run_kernel(compiled, datum)
            assert fast_states == pure_states, "kernels disagree on " + label
            print("%-45s %9d %9.3fs %9.3fs %7.1fx"
                  % (label, len(pure_states), fast_time, pure_time,
                     pure_time / fast_time))
        else:
            print("%-45s %9d %10s %9.3fs %8s"
                  % (label, len(pure_states), "-", pure_time, "-"))


if __name__ == "__main__":
    main()

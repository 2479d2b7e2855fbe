"""Pure-Python BFS orbit kernel.

Reference implementation of the closure of an integer tuple under a set
of matrices acting modulo N. States are tuples of m*d ints in [0, N);
matrix number w sends state x to y with

    y[j*d + t] = sum_i w[j][i] * x[i*d + t]   (mod N)

The compiled twin in _orbitcore.pyx computes exactly the same closure.
"""

from symtorus.errors import OrbitSizeExceeded


def bfs_orbit(start, mats, m, d, modulus, max_states):
    """Closure of ``start`` under all matrices; frozenset of int tuples."""
    start = tuple(x % modulus for x in start)
    if len(start) != m * d:
        raise ValueError("state length does not match m*d")
    tables = [[[x % modulus for x in row] for row in w] for w in mats]
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for state in frontier:
            for w in tables:
                out = []
                for j in range(m):
                    row = w[j]
                    for t in range(d):
                        acc = 0
                        for i in range(m):
                            acc += row[i] * state[i * d + t]
                        out.append(acc % modulus)
                cand = tuple(out)
                if cand not in seen:
                    if len(seen) >= max_states:
                        raise OrbitSizeExceeded(max_states)
                    seen.add(cand)
                    fresh.append(cand)
        frontier = fresh
    return frozenset(seen)

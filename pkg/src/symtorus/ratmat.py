"""Dense exact linear algebra over the rationals.

Everything here works on small matrices given as sequences of rows of
Fractions (or ints). No pivoting heuristics beyond "first nonzero":
inputs are tiny and exact, so numerical concerns do not apply.
"""

from fractions import Fraction


def _rows(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    a = _rows(matrix)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix):
    """Basis of {x : matrix @ x = 0} as a list of Fraction tuples."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    a, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        basis.append(tuple(vec))
    return basis


def solve(matrix, rhs):
    """One exact solution of matrix @ x = rhs, or None if inconsistent.

    When the system is underdetermined the free variables are set to 0.
    """
    a = _rows(matrix)
    if not a:
        return None
    ncols = len(a[0])
    aug = [row + [Fraction(b)] for row, b in zip(a, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)

"""Exact integer matrices: normal forms, the symplectic group, lattices.

All arithmetic is on Python ints, so pivoting never overflows. Matrices
are immutable; the reduction routines work on private row lists and wrap
the results at the end.
"""

from fractions import Fraction
from math import lcm

from symtorus.errors import DependentBasis
from symtorus import ratmat


class IntMatrix:
    """Immutable rectangular matrix with integer entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(x for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError("entries must be ints, got %r" % (x,))
        self.entries = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    def transpose(self):
        return IntMatrix(zip(*self.entries))

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        bt = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt]
             for row in self.entries])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(list(r) for r in self.entries),)


class SmithDecomposition:
    """U * M * V = S with U, V unimodular and S in Smith normal form."""

    __slots__ = ("u", "s", "v")

    def __init__(self, u, s, v):
        self.u = u
        self.s = s
        self.v = v

    def invariant_factors(self):
        n = min(self.s.rows, self.s.cols)
        return tuple(self.s[i, i] for i in range(n))


def smith_normal_form(m):
    """Diagonalize over Z with a divisibility chain, tracking transforms.

    Classic pivot-shrinking reduction: move the absolutely smallest entry
    to the pivot, clear its row and column by Euclidean steps, and when a
    remaining entry resists divisibility fold its row into the pivot row
    and go again. Each round strictly shrinks the pivot, so it stops.
    """
    nr, nc = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_add(i, j, k):  # row i += k * row j
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]

    def col_add(j, i, k):  # col j += k * col i
        for row in a:
            row[j] += k * row[i]
        for row in v:
            row[j] += k * row[i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(nr, nc)):
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x != 0 and (piv is None or abs(x) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            if a[t][t] < 0:
                row_neg(t)
            p = a[t][t]
            i = next((i for i in range(t + 1, nr) if a[i][t] % p), None)
            if i is not None:
                row_add(i, t, -(a[i][t] // p))
                row_swap(t, i)
                continue
            for i in range(t + 1, nr):
                if a[i][t]:
                    row_add(i, t, -(a[i][t] // p))
            j = next((j for j in range(t + 1, nc) if a[t][j] % p), None)
            if j is not None:
                col_add(j, t, -(a[t][j] // p))
                col_swap(t, j)
                continue
            for j in range(t + 1, nc):
                if a[t][j]:
                    col_add(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, nr)):
                continue
            bad = next((i for i in range(t + 1, nr)
                        for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            row_add(t, bad, 1)
    return SmithDecomposition(IntMatrix(u), IntMatrix(a), IntMatrix(v))


def invariant_factors(m):
    return smith_normal_form(m).invariant_factors()


def column_echelon(m):
    """Unimodular column reduction to echelon form.

    Returns (h, pivots) where h = m * V for some unimodular V, each pivot
    (r, c) has h[r][c] > 0, zeros above it in its column, and pivot rows
    strictly increase with the column index.
    """
    h = [list(row) for row in m.entries]
    nr, nc = len(h), len(h[0])
    c = 0
    pivots = []
    for r in range(nr):
        if c >= nc:
            break
        while True:
            nz = [j for j in range(c, nc) if h[r][j]]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(h[r][j]))
            if jmin != c:
                for row in h:
                    row[c], row[jmin] = row[jmin], row[c]
            if len(nz) == 1:
                break
            p = h[r][c]
            for j in range(c + 1, nc):
                if h[r][j]:
                    q = h[r][j] // p
                    for row in h:
                        row[j] -= q * row[c]
        if h[r][c]:
            if h[r][c] < 0:
                for row in h:
                    row[c] = -row[c]
            pivots.append((r, c))
            c += 1
    return h, pivots


def in_integer_span(vector, columns):
    """Is ``vector`` an integer combination of the given integer columns?

    Works for any set of columns; no independence requirement.
    """
    if not columns:
        return all(x == 0 for x in vector)
    m = IntMatrix(zip(*columns))  # columns -> matrix columns
    h, pivots = column_echelon(m)
    w = list(vector)
    for r, c in pivots:
        q, rem = divmod(w[r], h[r][c])
        if rem:
            return False
        for i in range(len(w)):
            w[i] -= q * h[i][c]
    return all(x == 0 for x in w)


def lattice_membership(vector, basis):
    """Is the rational vector an integer combination of the basis columns?

    ``basis`` is given as rows (row-major); its columns must be linearly
    independent, otherwise DependentBasis is raised. Denominators are
    cleared before the integer test.
    """
    basis_rows = [[Fraction(x) for x in row] for row in basis]
    vec = [Fraction(x) for x in vector]
    if len(vec) != len(basis_rows):
        raise ValueError("vector length does not match basis rows")
    ncols = len(basis_rows[0])
    if ratmat.rank(basis_rows) < ncols:
        raise DependentBasis("basis columns are linearly dependent")
    denoms = [x.denominator for row in basis_rows for x in row]
    denoms += [x.denominator for x in vec]
    scale = lcm(*denoms)
    cols = [
        tuple(int(row[j] * scale) for row in basis_rows)
        for j in range(ncols)
    ]
    target = tuple(int(x * scale) for x in vec)
    return in_integer_span(target, cols)


def j_form(g):
    """Block-diagonal intersection form: g copies of [[0, 1], [-1, 0]]."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for k in range(g):
        rows[2 * k][2 * k + 1] = 1
        rows[2 * k + 1][2 * k] = -1
    return IntMatrix(rows)


def is_symplectic_matrix(a, g):
    """Does a * J * a^t = J hold for the 2g-dimensional intersection form?"""
    if a.rows != 2 * g or a.cols != 2 * g:
        raise ValueError("expected a %dx%d matrix, got %dx%d"
                         % (2 * g, 2 * g, a.rows, a.cols))
    j = j_form(g)
    return a * j * a.transpose() == j


def elementary_symplectic(i, j, g):
    """The ij-th elementary symplectic matrix, 1-based indices.

    With s the involution of {1,...,2g} swapping 2k-1 and 2k, this is
    I + E_ij when i = s(j), and I + E_ij - (-1)^(i+j) E_{s(j)s(i)}
    otherwise; the correction index order s(j), s(i) is what makes every
    output satisfy the J identity. These matrices generate the integer
    symplectic group.
    """
    n = 2 * g
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("indices out of range for g=%d" % g)
    if i == j:
        raise ValueError("indices must differ")

    def s(k):
        return k + 1 if k % 2 == 1 else k - 1

    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[i - 1][j - 1] += 1
    if i != s(j):
        rows[s(j) - 1][s(i) - 1] -= (-1) ** (i + j)
    return IntMatrix(rows)


def int_inverse(m):
    """Exact inverse of an integer matrix that is invertible over Z."""
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    n = m.rows
    inv_cols = []
    for k in range(n):
        rhs = [1 if i == k else 0 for i in range(n)]
        x = ratmat.solve(m.entries, rhs)
        if x is None:
            raise ValueError("matrix is singular")
        inv_cols.append(x)
    rows = []
    for i in range(n):
        row = []
        for k in range(n):
            q = inv_cols[k][i]
            if q.denominator != 1:
                raise ValueError("matrix is not invertible over the integers")
            row.append(int(q))
        rows.append(row)
    return IntMatrix(rows)

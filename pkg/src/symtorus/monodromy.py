"""Monodromy tuples and their orbit invariants.

A monodromy datum for signature (g; o_1..o_n) and a d-torus is a tuple
of 2g free images (on a symplectic basis of a maximal free subgroup of
the first orbifold homology) followed by n torsion images (on the cone
loop classes). The images of the cone loops must have order exactly o_k
and sum to zero, since o_k g_k = 0 and sum g_k = 0 in homology.

The block lower-triangular group acting on such tuples has a symplectic
upper block, an arbitrary integer lower-left block, and an order
preserving permutation in the lower right; it is exactly the group of
isomorphisms induced by orbifold diffeomorphisms. Two data describe the
same manifold iff they lie in the same orbit, decided here by explicit
breadth-first closure over a finite state space.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from symtorus.errors import OrderViolation, SumViolation
from symtorus.intmat import (
    IntMatrix,
    elementary_symplectic,
    int_inverse,
    is_symplectic_matrix,
)
from symtorus.orbisurface import FuchsianSignature
from symtorus.torus import TorusElement, element_order
from symtorus import orbitkernel

DEFAULT_MAX_STATES = 10 ** 6


@dataclass(frozen=True)
class MonodromyDatum:
    signature: FuchsianSignature
    dim: int
    free: tuple
    torsion: tuple

    @property
    def entries(self):
        return self.free + self.torsion


def validate_datum(sig, free, torsion, dim=None):
    """Build a datum, checking the order and zero-sum constraints."""
    free = tuple(free)
    torsion = tuple(torsion)
    if len(free) != 2 * sig.genus:
        raise ValueError("expected %d free images, got %d"
                         % (2 * sig.genus, len(free)))
    if len(torsion) != sig.num_cone_points:
        raise ValueError("expected %d torsion images, got %d"
                         % (sig.num_cone_points, len(torsion)))
    dims = {t.dim for t in free + torsion}
    if len(dims) > 1:
        raise ValueError("mixed torus dimensions in images")
    if dim is None:
        if not dims:
            raise ValueError("empty datum needs an explicit torus dimension")
        dim = dims.pop()
    elif dims and dims != {dim}:
        raise ValueError("images do not live in a %d-torus" % dim)

    bad = [k for k, (t, o) in enumerate(zip(torsion, sig.orders))
           if element_order(t) != o]
    if bad:
        raise OrderViolation(bad)
    if torsion:
        total = TorusElement.zero(dim)
        for t in torsion:
            total = total + t
        if not total.is_zero():
            raise SumViolation("torsion images sum to %r, not zero" % (total,))
    return MonodromyDatum(sig, dim, free, torsion)


@dataclass(frozen=True)
class GeomMatrix:
    """Element of the geometric matrix group of a signature."""

    matrix: IntMatrix
    signature: FuchsianSignature

    def __post_init__(self):
        if not is_geometric_matrix(self.matrix, self.signature):
            raise ValueError("matrix is not geometric for %s" % (self.signature,))

    def __mul__(self, other):
        if self.signature != other.signature:
            raise ValueError("signature mismatch")
        return GeomMatrix(self.matrix * other.matrix, self.signature)

    def inverse(self):
        return GeomMatrix(int_inverse(self.matrix), self.signature)


def is_geometric_matrix(b, sig):
    """Membership test for the block lower-triangular group.

    Upper-right block zero, upper-left in the integer symplectic group,
    lower-right a permutation matrix preserving the order tuple.
    """
    g, n = sig.genus, sig.num_cone_points
    m = 2 * g + n
    if b.rows != m or b.cols != m:
        raise ValueError("expected a %dx%d matrix, got %dx%d"
                         % (m, m, b.rows, b.cols))
    for i in range(2 * g):
        for j in range(2 * g, m):
            if b[i, j] != 0:
                return False
    if g > 0:
        a_block = IntMatrix([row[: 2 * g] for row in b.entries[: 2 * g]])
        if not is_symplectic_matrix(a_block, g):
            return False
    for i in range(n):
        row = b.entries[2 * g + i][2 * g:]
        if sum(1 for x in row if x == 1) != 1 or any(x not in (0, 1) for x in row):
            return False
    for j in range(n):
        col = [b[2 * g + i, 2 * g + j] for i in range(n)]
        if sum(col) != 1:
            return False
    for i in range(n):
        permuted = sum(b[2 * g + i, 2 * g + j] * sig.orders[j] for j in range(n))
        if permuted != sig.orders[i]:
            return False
    return True


def _embed_sp(a, sig):
    """diag(a, identity) as a geometric matrix."""
    g, n = sig.genus, sig.num_cone_points
    m = 2 * g + n
    rows = [[0] * m for _ in range(m)]
    for i in range(2 * g):
        for j in range(2 * g):
            rows[i][j] = a[i, j]
    for k in range(n):
        rows[2 * g + k][2 * g + k] = 1
    return GeomMatrix(IntMatrix(rows), sig)


def group_generators(sig):
    """Generators of the geometric matrix group.

    Elementary symplectic embeddings, the unit lower-left matrices, and
    adjacent transpositions inside each run of equal orders. Any group
    element factors through these three block types, so together with
    their inverses they generate the whole group.
    """
    g, n = sig.genus, sig.num_cone_points
    m = 2 * g + n
    gens = []
    for i in range(1, 2 * g + 1):
        for j in range(1, 2 * g + 1):
            if i != j:
                gens.append(_embed_sp(elementary_symplectic(i, j, g), sig))
    for k in range(n):
        for j in range(2 * g):
            rows = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
            rows[2 * g + k][j] = 1
            gens.append(GeomMatrix(IntMatrix(rows), sig))
    for k in range(n - 1):
        if sig.orders[k] == sig.orders[k + 1]:
            rows = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
            a, b = 2 * g + k, 2 * g + k + 1
            rows[a][a] = rows[b][b] = 0
            rows[a][b] = rows[b][a] = 1
            gens.append(GeomMatrix(IntMatrix(rows), sig))
    return gens


def act(b, datum):
    """Image of the datum under a geometric matrix.

    The tuple is a homomorphism x from Z^(2g+n) to the torus; the matrix
    sends x to x o b^-1, i.e. entry j becomes sum_i (b^-1)[i][j] * x_i.
    """
    if b.signature != datum.signature:
        raise ValueError("matrix signature does not match datum")
    binv = int_inverse(b.matrix)
    entries = datum.entries
    m = len(entries)
    dim = datum.dim
    new = []
    for j in range(m):
        total = TorusElement.zero(dim)
        for i in range(m):
            k = binv[i, j]
            if k:
                total = total + k * entries[i]
        new.append(total)
    g2 = 2 * datum.signature.genus
    return validate_datum(datum.signature, new[:g2], new[g2:], dim)


def _state_modulus(datum):
    denoms = [q.denominator for t in datum.entries for q in t.coords]
    return lcm(*(denoms + list(datum.signature.orders) + [1]))


def _encode(datum, modulus):
    return tuple(
        int(q * modulus) for t in datum.entries for q in t.coords
    )


def _decode(state, modulus, m, dim):
    return tuple(
        TorusElement(Fraction(state[i * dim + t], modulus) for t in range(dim))
        for i in range(m)
    )


def _action_tables(sig, modulus):
    tables = []
    for gen in group_generators(sig):
        binv = int_inverse(gen.matrix)
        for mat in (binv, gen.matrix):
            w = tuple(
                tuple(x % modulus for x in row)
                for row in mat.transpose().entries
            )
            if w not in tables:
                tables.append(w)
    return tables


def _orbit_states(datum, max_states):
    """BFS closure; returns (frozenset of states, modulus)."""
    sig = datum.signature
    m = 2 * sig.genus + sig.num_cone_points
    modulus = _state_modulus(datum)
    start = _encode(datum, modulus)
    if m == 0:
        return frozenset([start]), modulus
    tables = _action_tables(sig, modulus)
    if not tables or modulus == 1:
        return frozenset([start]), modulus
    states = orbitkernel.bfs_orbit(
        start, tables, m, datum.dim, modulus, max_states)
    return states, modulus


def orbit(datum, max_states=DEFAULT_MAX_STATES):
    """The full orbit as a set of tuples of torus elements."""
    states, modulus = _orbit_states(datum, max_states)
    m = 2 * datum.signature.genus + datum.signature.num_cone_points
    return {_decode(s, modulus, m, datum.dim) for s in states}


def orbit_size(datum, max_states=DEFAULT_MAX_STATES):
    states, _ = _orbit_states(datum, max_states)
    return len(states)


def equivalent(d1, d2, max_states=DEFAULT_MAX_STATES):
    """Do the two data lie in the same orbit?

    Signature or dimension mismatch yields False rather than an error.
    """
    if d1.signature != d2.signature or d1.dim != d2.dim:
        return False
    m1 = _state_modulus(d1)
    if m1 != _state_modulus(d2):
        return False
    states, modulus = _orbit_states(d1, max_states)
    return _encode(d2, modulus) in states


def canonical_form(datum, max_states=DEFAULT_MAX_STATES):
    """Lexicographically least tuple in the orbit.

    All orbit entries share one denominator, so comparing the integer
    states coordinatewise agrees with comparing rationals.
    """
    states, modulus = _orbit_states(datum, max_states)
    m = 2 * datum.signature.genus + datum.signature.num_cone_points
    return _decode(min(states), modulus, m, datum.dim)


def free_invariant(genus, free, max_states=DEFAULT_MAX_STATES):
    """Canonical form under the symplectic action alone (no cone points)."""
    sig = FuchsianSignature(genus, ())
    datum = validate_datum(sig, tuple(free), ())
    return canonical_form(datum, max_states)


def torsion_monodromy_trivial(datum):
    """True iff every cone loop image is the identity.

    Cone loop images of a valid datum have order exactly o_k >= 2, so
    this holds exactly when there are no cone points; then the manifold
    splits as (orbit space) x (torus).
    """
    return all(t.is_zero() for t in datum.torsion)

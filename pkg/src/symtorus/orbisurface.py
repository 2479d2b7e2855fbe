"""Orbisurfaces: signatures, fundamental group presentations, homology.

A compact connected orientable orbisurface is classified by its genus
together with the nondecreasing list of cone point orders. Its first
orbifold homology is Z^2g plus the finite group generated by the cone
loop classes g_k with relations o_k*g_k = 0 and sum g_k = 0.
"""

from dataclasses import dataclass
from math import gcd, lcm

from symtorus.intmat import IntMatrix, smith_normal_form
from symtorus.torus import element_order


@dataclass(frozen=True)
class FuchsianSignature:
    """Genus plus sorted cone orders; a complete orbisurface invariant."""

    genus: int
    orders: tuple

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        object.__setattr__(self, "orders", tuple(self.orders))
        for o in self.orders:
            if not isinstance(o, int) or o < 2:
                raise ValueError("cone orders must be integers >= 2")
        if list(self.orders) != sorted(self.orders):
            raise ValueError("cone orders must be nondecreasing")

    @property
    def num_cone_points(self):
        return len(self.orders)


def normalize_signature(genus, raw_orders):
    """Sort the orders and drop 1s (an order-1 cone point is regular)."""
    orders = []
    for o in raw_orders:
        if not isinstance(o, int) or o <= 0:
            raise ValueError("cone orders must be positive integers, got %r" % (o,))
        if o > 1:
            orders.append(o)
    return FuchsianSignature(genus, tuple(sorted(orders)))


def is_good(sig):
    """Everything is good except (0; o) and (0; o1, o2) with o1 != o2."""
    if sig.genus > 0:
        return True
    n = sig.num_cone_points
    if n == 1:
        return False
    if n == 2 and sig.orders[0] != sig.orders[1]:
        return False
    return True


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: generator names plus relator words.

    A word is a tuple of (generator name, exponent) pairs.
    """

    generators: tuple
    relators: tuple

    def __post_init__(self):
        names = set(self.generators)
        for word in self.relators:
            for name, _ in word:
                if name not in names:
                    raise ValueError("relator uses unknown generator %r" % name)

    def exponent_matrix(self):
        """Abelianized relators as exponent rows, or None if no relators."""
        if not self.relators:
            return None
        index = {name: i for i, name in enumerate(self.generators)}
        rows = []
        for word in self.relators:
            row = [0] * len(self.generators)
            for name, exp in word:
                row[index[name]] += exp
            rows.append(row)
        return rows


def _commutator(x, y):
    return ((x, 1), (y, 1), (x, -1), (y, -1))


def _inverse_word(word):
    return tuple((name, -exp) for name, exp in reversed(word))


def orbifold_presentation(sig):
    """Standard presentation: handle pairs a_i, b_i and cone loops g_k.

    Relators: (g_1...g_n) * (prod [a_i, b_i])^-1 and g_k^(o_k).
    """
    g, n = sig.genus, sig.num_cone_points
    handles = []
    for i in range(1, g + 1):
        handles.extend(("a%d" % i, "b%d" % i))
    cones = ["g%d" % k for k in range(1, n + 1)]
    generators = tuple(handles + cones)

    relators = []
    if generators:
        main = tuple((c, 1) for c in cones)
        comms = ()
        for i in range(1, g + 1):
            comms += _commutator("a%d" % i, "b%d" % i)
        relators.append(main + _inverse_word(comms))
    for k, o in enumerate(sig.orders, start=1):
        relators.append((("g%d" % k, o),))
    return Presentation(generators, tuple(relators))


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group, torsion in invariant-factor form.

    ``torsion_coords`` expresses the class of each cone loop g_k in the
    coordinates of the invariant-factor decomposition of the torsion
    subgroup (one tuple per g_k, one entry per factor).
    """

    free_rank: int
    factors: tuple
    torsion_coords: tuple

    def __post_init__(self):
        for i, d in enumerate(self.factors):
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if i and self.factors[i] % self.factors[i - 1]:
                raise ValueError("factors must form a divisibility chain")

    def class_order(self, coords):
        """Order of the torsion element with the given coordinates."""
        order = 1
        for d, x in zip(self.factors, coords):
            order = lcm(order, d // gcd(d, x % d))
        return order


def first_orbifold_homology(sig):
    """Abelianization of the orbifold fundamental group.

    Free rank 2g; the torsion subgroup is Z^n modulo the rows o_k*e_k
    and (1,...,1), read off a Smith normal form.
    """
    n = sig.num_cone_points
    if n == 0:
        return FinAbGroup(2 * sig.genus, (), ())
    rel_rows = [[o if i == k else 0 for i in range(n)]
                for k, o in enumerate(sig.orders)]
    rel_rows.append([1] * n)
    # The group is coker of the transpose; x maps to U*x in S-coordinates.
    dec = smith_normal_form(IntMatrix(rel_rows).transpose())
    diag = dec.invariant_factors()
    keep = [i for i in range(n) if diag[i] >= 2]
    factors = tuple(diag[i] for i in keep)
    coords = tuple(
        tuple(dec.u[i, k] % diag[i] for i in keep) for k in range(n)
    )
    return FinAbGroup(2 * sig.genus, factors, coords)


def abelianization(pres):
    """Invariants (free rank, factors) of any presentation's abelianization.

    Generic route used as a consistency oracle: exponent-sum the relators
    and reduce to Smith normal form.
    """
    ngens = len(pres.generators)
    rows = pres.exponent_matrix()
    if rows is None:
        return ngens, ()
    diag = smith_normal_form(IntMatrix(rows).transpose()).invariant_factors()
    rank = ngens - sum(1 for d in diag if d != 0)
    factors = tuple(sorted(d for d in diag if d >= 2))
    return rank, factors


def hom_exists(order, target):
    """Can a cyclic group of the given order map its generator to target?"""
    if order < 1:
        raise ValueError("order must be positive")
    return order % element_order(target) == 0

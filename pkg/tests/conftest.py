"""Shared helpers: random valid data, random group words, oracles."""

import random
from fractions import Fraction

from symtorus.monodromy import group_generators, validate_datum
from symtorus.orbisurface import FuchsianSignature
from symtorus.torus import TorusElement


def half_point(rng, dim=2, nonzero=False):
    """Random point with coordinates in {0, 1/2}."""
    while True:
        t = TorusElement([Fraction(rng.randint(0, 1), 2) for _ in range(dim)])
        if not nonzero or not t.is_zero():
            return t


def random_valid_datum(rng, dim=2):
    """Random valid datum with g <= 1, n in {0, 2, 3}, denominators | 2."""
    genus = rng.choice([0, 1])
    n = rng.choice([0, 2, 3] if genus else [2, 3])
    sig = FuchsianSignature(genus, (2,) * n)
    free = tuple(half_point(rng, dim) for _ in range(2 * genus))
    if n == 0:
        torsion = ()
    elif n == 2:
        c1 = half_point(rng, dim, nonzero=True)
        torsion = (c1, c1)
    else:
        while True:
            c1 = half_point(rng, dim, nonzero=True)
            c2 = half_point(rng, dim, nonzero=True)
            c3 = -(c1 + c2)
            if not c3.is_zero():
                break
        torsion = (c1, c2, c3)
    return validate_datum(sig, free, torsion, dim)


def random_geom_word(sig, rng, max_len=6):
    """Random product of generators and inverses, as one group element."""
    gens = group_generators(sig)
    if not gens:
        return None
    word = None
    for _ in range(rng.randint(1, max_len)):
        factor = rng.choice(gens)
        if rng.random() < 0.5:
            factor = factor.inverse()
        word = factor if word is None else word * factor
    return word


def mulclose_mod(mats, modulus, cap=200000):
    """Multiplicative closure of a set of square matrices mod N (oracle)."""
    size = len(mats[0])

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(size)) % modulus
                  for j in range(size))
            for i in range(size)
        )

    normalized = [tuple(tuple(x % modulus for x in row) for row in m)
                  for m in mats]
    group = set(normalized)
    frontier = list(group)
    while frontier:
        fresh = []
        for a in frontier:
            for b in normalized:
                c = mul(a, b)
                if c not in group:
                    group.add(c)
                    fresh.append(c)
                    if len(group) > cap:
                        raise RuntimeError("closure oracle exceeded cap")
        frontier = fresh
    return group


def apply_table(mat, state, m, d, modulus):
    """Oracle copy of the kernel's state action."""
    out = []
    for j in range(m):
        for t in range(d):
            out.append(
                sum(mat[j][i] * state[i * d + t] for i in range(m)) % modulus
            )
    return tuple(out)


def seeded(seed):
    return random.Random(seed)

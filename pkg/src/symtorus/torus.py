"""Points of the torus (R/Z)^d with exact rational coordinates.

The torus is identified with R^d/Z^d once and for all; every element is
stored by its unique representative with all coordinates in [0, 1).
Floating point is rejected outright: every coordinate must be an int,
a Fraction, or a string a Fraction accepts.
"""

from fractions import Fraction
from math import lcm


def _as_fraction(value):
    if isinstance(value, float):
        raise TypeError("torus coordinates must be exact rationals, not floats")
    return Fraction(value)


class TorusElement:
    """A point of (R/Z)^d, coordinates reduced into [0, 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(_as_fraction(q) % 1 for q in coords)
        if not self.coords:
            raise ValueError("torus element needs at least one coordinate")

    @classmethod
    def zero(cls, dim):
        return cls((0,) * dim)

    @property
    def dim(self):
        return len(self.coords)

    def is_zero(self):
        return all(q == 0 for q in self.coords)

    def __add__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return TorusElement(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return TorusElement(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return TorusElement(-q for q in self.coords)

    def __rmul__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer multiples act on torus points")
        return TorusElement(k * q for q in self.coords)

    def __eq__(self, other):
        return isinstance(other, TorusElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def __repr__(self):
        return "TorusElement(%s)" % (", ".join(str(q) for q in self.coords))


def element_order(t):
    """Least m >= 1 with m*t = 0, i.e. the lcm of coordinate denominators."""
    return lcm(*(q.denominator for q in t.coords))

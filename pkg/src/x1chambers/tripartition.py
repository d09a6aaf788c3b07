"""Triplets in (Z/aZ)^3 summing to zero and their quotient by <S, T>.

A triangle chamber of PH(a,-a) is labelled by a *cyclic tripartition*:
a triplet (x, y, z) of nonzero residues with x + y + z = 0 mod a, taken up
to the negation ``S`` and the cyclic shift ``T``.  An unbalanced degenerate
chamber carries two ordered tripartitions of ``a`` (positive integers) that
are swapped by :func:`partner`.
"""

from collections import namedtuple
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import _check_natural


class Triplet(namedtuple("Triplet", "a x y z")):
    """Residues (x, y, z) modulo ``a`` with x + y + z = 0 mod a.

    Zero coordinates are allowed here; they show up as formal points of
    cusp links.  Chamber labels additionally require all three nonzero.
    Triplets of equal modulus compare lexicographically.
    """

    __slots__ = ()

    def __new__(cls, a, x, y, z):
        if not 0 <= x < a or not 0 <= y < a or not 0 <= z < a:
            _check_natural(a)
            raise ValueError(f"({x},{y},{z}) are not residues mod {a}")
        if (x + y + z) % a:
            raise ValueError(f"({x},{y},{z}) does not sum to 0 mod {a}")
        return super().__new__(cls, a, x, y, z)

    @classmethod
    def of(cls, a, x, y, z):
        """Build a triplet from arbitrary integers, reducing them mod `a`."""
        return cls(a, x % a, y % a, z % a)

    @property
    def coords(self):
        return self[1:]

    @property
    def gcd(self):
        return gcd(self.x, self.y, self.z, self.a)

    def is_nonzero(self):
        return self.x != 0 and self.y != 0 and self.z != 0

    def is_composition(self):
        # all parts positive integers adding up to exactly a
        return self.is_nonzero() and self.x + self.y + self.z == self.a

    def scaled(self, k):
        return Triplet(self.a * k, self.x * k, self.y * k, self.z * k)

    def __repr__(self):
        return "Triplet(a=%d, x=%d, y=%d, z=%d)" % self

    def __str__(self):
        return "(%d,%d,%d)" % self.coords


TripletModA = Triplet


def apply_S(t: Triplet) -> Triplet:
    """Negate every coordinate."""
    return Triplet.of(t.a, -t.x, -t.y, -t.z)


def apply_T(t: Triplet) -> Triplet:
    """Rotate (x, y, z) to (y, z, x)."""
    return Triplet(t.a, t.y, t.z, t.x)


def orbit(t: Triplet) -> set:
    """Orbit of `t` under the order-6 group generated by S and T."""
    return {Triplet(t.a, *c) for c in _orbit_coords(t.a, t.x, t.y, t.z)}


def _orbit_coords(a, x, y, z):
    # same group as orbit(), on bare tuples: this is the hot path of every enumeration
    nx, ny, nz = (-x) % a, (-y) % a, (-z) % a
    return ((x, y, z), (y, z, x), (z, x, y), (nx, ny, nz), (ny, nz, nx), (nz, nx, ny))


@dataclass(frozen=True, order=True, slots=True)
class CyclicTripartition:
    a: int
    rep: Triplet
    gcd_label: int

    @property
    def coords(self):
        return self.rep.coords

    def is_equilateral(self):
        return self.rep.x == self.rep.y == self.rep.z

    def __str__(self):
        return "[%d,%d,%d]" % self.coords


def class_key(t: Triplet) -> tuple:
    """Coordinates of the canonical representative of the class of `t`."""
    return min(_orbit_coords(t.a, t.x, t.y, t.z))


def canonical_class(t: Triplet) -> CyclicTripartition:
    """Class of `t` in E_a / <S, T>, represented by its lexicographic minimum."""
    if not t.is_nonzero():
        raise ValueError(f"triplet {t} has a zero coordinate")
    a, x, y, z = t
    rep = Triplet(a, *min(_orbit_coords(a, x, y, z)))
    return CyclicTripartition(a, rep, gcd(x, y, z, a))


def compositions(a: int):
    """All ordered triples of positive integers adding up to `a`, increasing."""
    for x in range(1, a - 1):
        for y in range(1, a - x):
            yield Triplet(a, x, y, a - x - y)


def compositions_with_gcd(a, k):
    """Raw (x, y, z) compositions of `a` with gcd(x, y, z) == k."""
    for x in range(k, a - 1, k):
        for y in range(k, a - x, k):
            z = a - x - y
            if gcd(x, y, z) == k:
                yield x, y, z


@lru_cache(maxsize=256)
def _classes(a, k):
    found = set()
    for x, y, z in compositions_with_gcd(a, k):
        # the rotation-minimal composition is unique in its class
        if (x, y, z) <= (y, z, x) and (x, y, z) <= (z, x, y):
            found.add(canonical_class(Triplet(a, x, y, z)))
    return tuple(sorted(found, key=lambda c: c.rep))


def enumerate_classes(a: int, k: int) -> list:
    """Cyclic tripartitions of `a` whose gcd (taken with `a`) equals `k`.

    Every class contains a positive composition of ``a`` (negation turns a
    triple summing to 2a into one summing to a), so compositions suffice.
    """
    _check_natural(a)
    _check_natural(k)
    if a % k or k == a:
        raise ValueError(f"k={k} must be a proper divisor of a={a}")
    return list(_classes(a, k))


def partner(t: Triplet) -> Triplet:
    """The other ordered tripartition labelling the same unbalanced chamber.

    (x, y, z) goes to (x+y, z-x, x) when z > x and to (z, x-z, y+z) when
    x > z.  The map is an involution without fixed points.
    """
    if not t.is_composition():
        raise ValueError(f"{t} is not an ordered tripartition of {t.a}")
    x, y, z = t.coords
    if z > x:
        return Triplet(t.a, x + y, z - x, x)
    if x > z:
        return Triplet(t.a, z, x - z, y + z)
    raise ValueError(f"{t} has equal outer parts; it labels a balanced chamber")


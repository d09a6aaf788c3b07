"""Chambers and walls of a connected component C_d^a of PH(a,-a).

Four kinds of chamber occur:

* ``cylinder``: unordered partition a = k + k', rotation number gcd(k, a);
* ``balanced`` degenerate: the same partitions, same rotation number;
* ``triangle``: a cyclic tripartition of a (see :mod:`.tripartition`);
* ``unbalanced`` degenerate: a pair {t, partner(t)} of ordered
  tripartitions with unequal outer parts.

Every wall separates a degenerate chamber from a cylinder or triangle
chamber, so walls are generated from the degenerate side only.  The walls
of the stratum are in bijection with the partitions k + k' (walls between
a balanced and a cylinder chamber) and the ordered tripartitions of a
(walls to a triangle chamber).
"""

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .arith import _check_natural
from .tripartition import (
    CyclicTripartition,
    Triplet,
    canonical_class,
    class_key,
    compositions_with_gcd,
    enumerate_classes,
    partner,
)

CYLINDER = "cylinder"
TRIANGLE = "triangle"
BALANCED = "balanced"
UNBALANCED = "unbalanced"

KINDS = (CYLINDER, TRIANGLE, BALANCED, UNBALANCED)
DEGENERATE_KINDS = (BALANCED, UNBALANCED)

_PREFIX = {CYLINDER: "cyl", TRIANGLE: "tri", BALANCED: "bal", UNBALANCED: "unb"}


@lru_cache(maxsize=1 << 16)
def natural_key(key):
    """Sort key for strings like ``"tri:1,10,2"``: prefix, then integers."""
    prefix, _, rest = key.partition(":")
    return (prefix, tuple(int(n) for n in re.findall(r"\d+", rest)))


def check_component(a, d):
    _check_natural(a)
    _check_natural(d)
    if a < 2:
        raise ValueError(f"a must be >= 2 (PH(1,-1) is empty), got a={a}")
    if a % d:
        raise ValueError(f"component d={d} must divide a={a} (d | a)")
    if d == a:
        raise ValueError(f"component d={d} must be smaller than a={a} (d < a)")


@dataclass(frozen=True, slots=True)
class Chamber:
    """One chamber, identified by its kind and discrete invariant.

    ``invariant`` is ``(k, k')`` with k <= k' for cylinder and balanced
    chambers, a :class:`CyclicTripartition` for triangles and a sorted pair
    of ordered tripartitions for unbalanced chambers.
    """

    a: int
    kind: str
    invariant: tuple
    key: str = field(init=False, repr=False, compare=False)
    sort_key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind in (CYLINDER, BALANCED):
            k, kk = self.invariant
            if not (1 <= k <= kk and k + kk == self.a):
                raise ValueError(f"bad partition {self.invariant} of {self.a}")
        elif self.kind == TRIANGLE:
            if not isinstance(self.invariant, CyclicTripartition):
                raise TypeError("triangle chambers are labelled by a CyclicTripartition")
        elif self.kind == UNBALANCED:
            t1, t2 = self.invariant
            if not t1 < t2 or partner(t1) != t2:
                raise ValueError(f"{t1} and {t2} are not a sorted partner pair")
        else:
            raise ValueError(f"unknown chamber kind {self.kind!r}")
        entries = tuple(self.entries)
        # sort_key equals natural_key(key)
        object.__setattr__(self, "sort_key", (_PREFIX[self.kind], entries))
        object.__setattr__(self, "key", "%s:%s" % (_PREFIX[self.kind], ",".join(map(str, entries))))

    @classmethod
    def cylinder(cls, a, k):
        return cls(a, CYLINDER, (min(k, a - k), max(k, a - k)))

    @classmethod
    def balanced(cls, a, k):
        return cls(a, BALANCED, (min(k, a - k), max(k, a - k)))

    @classmethod
    def triangle(cls, c: CyclicTripartition):
        return cls(c.a, TRIANGLE, c)

    @classmethod
    def unbalanced(cls, t: Triplet):
        return cls(t.a, UNBALANCED, tuple(sorted((t, partner(t)))))

    @property
    def is_degenerate(self):
        return self.kind in DEGENERATE_KINDS

    @property
    def entries(self):
        """The integers making up the invariant (first triplet for unbalanced)."""
        if self.kind == TRIANGLE:
            return self.invariant.coords
        if self.kind == UNBALANCED:
            return self.invariant[0].coords
        return self.invariant

    def invariant_data(self):
        """JSON-friendly form of the invariant."""
        if self.kind == UNBALANCED:
            return [list(t.coords) for t in self.invariant]
        return list(self.entries)

    def scaled(self, k):
        """The corresponding chamber of PH(k*a, -k*a), invariants multiplied by k."""
        if self.kind == TRIANGLE:
            return Chamber.triangle(canonical_class(self.invariant.rep.scaled(k)))
        if self.kind == UNBALANCED:
            return Chamber.unbalanced(self.invariant[0].scaled(k))
        return Chamber(self.a * k, self.kind, tuple(k * v for v in self.invariant))

    def __str__(self):
        return self.key


def rotation_number(c: Chamber) -> int:
    return gcd(c.a, *c.entries)


def boundary_count(c: Chamber) -> int:
    if c.kind == CYLINDER:
        return 1
    if c.kind == TRIANGLE:
        return 1 if c.invariant.is_equilateral() else 3
    if c.kind == BALANCED:
        k, kk = c.invariant
        return 1 if k == kk else 2
    return 2


def enumerate_chambers(a: int, d: int = 1) -> list:
    """Every chamber of C_d^a, sorted by key.

    The enumeration runs over all invariants of the stratum PH(a,-a) and
    keeps those with rotation number `d`.
    """
    check_component(a, d)
    return list(_chambers(a, d))


@lru_cache(maxsize=64)
def _chambers(a, d):
    out = []
    for k in range(1, a // 2 + 1):
        if gcd(k, a) == d:
            out.append(Chamber.cylinder(a, k))
            out.append(Chamber.balanced(a, k))
    if a >= 3:
        out.extend(Chamber.triangle(c) for c in enumerate_classes(a, d))
    for x, y, z in compositions_with_gcd(a, d):
        # of a partner pair, the member with z > x is the lexicographically smaller
        if x < z:
            out.append(Chamber.unbalanced(Triplet(a, x, y, z)))
    out.sort(key=lambda c: c.sort_key)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Wall:
    """A connected component of the discriminant.

    ``label`` is the partition (k, k') for a wall between a balanced and a
    cylinder chamber, or the ordered tripartition (x, y, z) read off the
    boundary surface for a wall bounding a triangle chamber.  The angle
    signature lists the four angles of that boundary surface in units of pi.
    """

    label: tuple
    degenerate_side: Chamber
    other_side: Chamber

    def __post_init__(self):
        if not self.degenerate_side.is_degenerate or self.other_side.is_degenerate:
            raise ValueError("a wall separates a degenerate chamber from a non-degenerate one")

    @property
    def angle_signature(self):
        if len(self.label) == 2:
            k, kk = self.label
            return (1, 2 * k, 1, 2 * kk)
        x, y, z = self.label
        return (1, 2 * x, 1 + 2 * y, 2 * z)

    @property
    def id(self):
        return "wall:" + ",".join(map(str, self.label))

    @property
    def endpoints(self):
        return (self.degenerate_side, self.other_side)


def walls_of(c: Chamber, lookup=None) -> list:
    """Walls generated by a degenerate chamber (empty for the other kinds).

    `lookup` optionally maps sort keys to already built chambers.
    """
    def find(kind, entries, build):
        return lookup[(_PREFIX[kind], entries)] if lookup else build()

    if c.kind == BALANCED:
        k, kk = c.invariant
        walls = [Wall((k, kk), c, find(CYLINDER, (k, kk), lambda: Chamber.cylinder(c.a, k)))]
        if k < kk:
            tris = [Triplet(c.a, k, kk - k, k)]
        else:
            tris = []
    elif c.kind == UNBALANCED:
        tris = c.invariant
        walls = []
    else:
        return []
    for t in tris:
        other = find(TRIANGLE, class_key(t), lambda: Chamber.triangle(canonical_class(t)))
        walls.append(Wall(t.coords, c, other))
    return walls


def enumerate_walls(a: int, d: int = 1) -> list:
    """Every wall of C_d^a, sorted by id."""
    check_component(a, d)
    return list(_walls(a, d))


@lru_cache(maxsize=64)
def _walls(a, d):
    chambers = _chambers(a, d)
    lookup = {c.sort_key: c for c in chambers}
    walls = [w for c in chambers for w in walls_of(c, lookup)]
    walls.sort(key=lambda w: w.label)
    return tuple(walls)

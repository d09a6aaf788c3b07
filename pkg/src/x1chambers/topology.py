"""Cusps, Euler characteristic and genus from the walls-and-chambers cells.

Chambers are the 2-cells and walls the 1-cells of a cell decomposition of
the compactified component.  The 0-cells are the cusps where walls meet
(discriminant cusps); the cusp inside each cylinder chamber is a puncture
but not a vertex of the decomposition.

A discriminant cusp is seen through its link: a cyclic walk through
triplets ``(x, y, -x-y)`` with the middle entry ``y`` fixed and ``x``
advancing by ``y``.  Links are taken up to the global inversion of the
triplet, which sends ``(y, O)`` to ``(a - y, -O)``.
"""

from dataclasses import dataclass, field
from math import gcd

from .arith import divisors, totient
from .chamber import (
    BALANCED,
    CYLINDER,
    KINDS,
    TRIANGLE,
    UNBALANCED,
    boundary_count,
    check_component,
    enumerate_chambers,
    enumerate_walls,
)
from .graph import chamber_graph, decorated_triangle_graph
from .formulas import (
    cusp_count_formula,
    genus_formula,
    principal_chamber_counts,
    principal_walls,
    total_walls,
    totient_convolution,
)


class InvariantMismatch(RuntimeError):
    """The cell decomposition disagrees with the known invariants of X_1(N)."""


@dataclass(frozen=True)
class CuspClass:
    a: int
    middle: int
    orbit: tuple
    inversion_fixed: bool

    def __post_init__(self):
        step = self.middle
        if len(self.orbit) != self.a // gcd(step, self.a):
            raise ValueError("orbit length must be a / gcd(y, a)")
        for x, nxt in zip(self.orbit, self.orbit[1:] + self.orbit[:1]):
            if (x + step) % self.a != nxt or gcd(x, step, self.a) != 1:
                raise ValueError(f"{self.orbit} is not a valid link for y={step}")


def _link_orbits(a):
    """All (y, orbit) pairs, each orbit a frozenset of residues x."""
    out = []
    for y in range(1, a):
        seen = set()
        for x in range(a):
            if x in seen or gcd(x, y, a) != 1:
                continue
            orbit = []
            u = x
            while u not in seen:
                seen.add(u)
                orbit.append(u)
                u = (u + y) % a
            out.append((y, frozenset(orbit)))
    return out


def _inverse(a, link):
    y, orbit = link
    return (a - y, frozenset((-x) % a for x in orbit))


def cusp_classes(a: int) -> list:
    """Discriminant cusps of the principal component of PH(a,-a).

    Orbits are paired with their inverses by building the equivalence
    classes explicitly; dividing the orbit count by two would be wrong
    whenever a link is its own inverse (a = 2 and a = 4).
    """
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    links = _link_orbits(a)
    known = set(links)
    done = set()
    out = []
    for link in links:
        if link in done:
            continue
        inv = _inverse(a, link)
        if inv not in known:
            raise AssertionError(f"inverse of link {link} was not enumerated")
        done.update((link, inv))
        y, orbit = min((link, inv), key=lambda l: (l[0], min(l[1])))
        start = min(orbit)
        walk = tuple((start + i * y) % a for i in range(len(orbit)))
        out.append(CuspClass(a, y, walk, inv == link))
    out.sort(key=lambda c: (c.middle, c.orbit))
    return out


@dataclass(frozen=True)
class ComponentReport:
    a: int
    d: int
    level: int
    chambers: dict
    walls: int
    discriminant_cusps: int
    interior_cusps: int
    punctures: int
    euler_characteristic: int
    genus: int
    orbifold_points: tuple = field(default=())

    @property
    def total_chambers(self):
        return sum(self.chambers.values())

    def to_dict(self):
        return {
            "a": self.a,
            "d": self.d,
            "level": self.level,
            "chambers": {k: self.chambers[k] for k in KINDS},
            "walls": self.walls,
            "cusps": {
                "discriminant": self.discriminant_cusps,
                "interior": self.interior_cusps,
                "total": self.punctures,
            },
            "euler": self.euler_characteristic,
            "genus": self.genus,
            "orbifold": [{"order": order, "chamber": key} for order, key in self.orbifold_points],
        }


def component_report(a: int, d: int = 1) -> ComponentReport:
    """Topological summary of C_d^a, computed at level N = a/d.

    Chamber keys in the orbifold list are scaled back to the stratum
    PH(a,-a).  Raises :class:`InvariantMismatch` if the genus, puncture
    count or orbifold orders disagree with the known values for X_1(N).
    """
    check_component(a, d)
    N = a // d
    chambers = enumerate_chambers(N, 1)
    walls = enumerate_walls(N, 1)
    cusps = cusp_classes(N)

    counts = {k: 0 for k in KINDS}
    for c in chambers:
        counts[c.kind] += 1
    chi = len(chambers) - len(walls) + len(cusps)
    if chi % 2:
        raise InvariantMismatch(f"odd Euler characteristic {chi} at level {N}")
    genus = 1 - chi // 2

    orbifold = []
    for c in chambers:
        if c.kind == BALANCED and c.invariant[0] == c.invariant[1]:
            orbifold.append((2, c.scaled(d).key))
        elif c.kind == TRIANGLE and c.invariant.is_equilateral():
            orbifold.append((3, c.scaled(d).key))

    report = ComponentReport(
        a=a,
        d=d,
        level=N,
        chambers=counts,
        walls=len(walls),
        discriminant_cusps=len(cusps),
        interior_cusps=counts[CYLINDER],
        punctures=len(cusps) + counts[CYLINDER],
        euler_characteristic=chi,
        genus=genus,
        orbifold_points=tuple(sorted(orbifold)),
    )
    expected = genus_formula(N)
    got = (report.genus, report.punctures, tuple(o for o, _ in report.orbifold_points))
    want = (expected.genus, expected.cusps, tuple(sorted(expected.orbifold_orders)))
    if got != want:
        raise InvariantMismatch(f"level {N}: cell decomposition gives {got}, expected {want}")
    return report


@dataclass
class Check:
    name: str
    a: int
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "a": self.a, "passed": self.passed, "detail": self.detail}


@dataclass
class ValidationSummary:
    a_min: int
    a_max: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, name, a, got, want):
        detail = {} if got == want else {"got": got, "expected": want}
        self.checks.append(Check(name, a, got == want, detail))

    def to_dict(self):
        return {
            "range": [self.a_min, self.a_max],
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [c.to_dict() for c in self.failures],
        }


def _validate_one(a, summary):
    chambers = enumerate_chambers(a, 1)
    walls = enumerate_walls(a, 1)
    cusps = cusp_classes(a)
    counts = {k: sum(1 for c in chambers if c.kind == k) for k in KINDS}

    summary.add("principal_walls", a, len(walls), principal_walls(a))
    summary.add(
        "total_walls", a, sum(len(enumerate_walls(a, d)) for d in divisors(a)[:-1]), total_walls(a)
    )
    if a >= 4:
        cf = principal_chamber_counts(a)
        got = [counts[TRIANGLE], counts[BALANCED] + counts[UNBALANCED], counts[CYLINDER], len(chambers)]
        summary.add("chamber_counts", a, got, [cf.CT, cf.DT, cf.CC, cf.C])
    if a >= 5:
        want = (totient_convolution(a) - totient(a)) // 2
        summary.add("cusp_classes", a, len(cusps), want)

    try:
        report = component_report(a, 1)
        summary.add("genus", a, report.genus, genus_formula(a).genus)
        summary.add("punctures", a, report.punctures, cusp_count_formula(a))
    except InvariantMismatch as exc:
        summary.checks.append(Check("genus", a, False, {"error": str(exc)}))

    g = chamber_graph(a, 1)
    degrees = g.degrees()
    bad = {c.key: [degrees[c.key], boundary_count(c)] for c in chambers if degrees[c.key] != boundary_count(c)}
    summary.add("degree_law", a, bad, {})
    summary.add("connected", a, g.is_connected(), True)
    summary.add("dual_construction", a, decorated_triangle_graph(a, 1).same_keyed(g), True)

    # scaling: keys of C_2^{2a} are twice those of C_1^a
    doubled = sorted(c.scaled(2).key for c in chambers)
    summary.add("scaling", a, sorted(c.key for c in enumerate_chambers(2 * a, 2)), doubled)


def cross_validate(a_min: int, a_max: int) -> ValidationSummary:
    """Run every enumeration-versus-formula identity for a in [a_min, a_max]."""
    if not 2 <= a_min <= a_max:
        raise ValueError(f"need 2 <= a_min <= a_max, got {a_min}, {a_max}")
    summary = ValidationSummary(a_min, a_max)
    for a in range(a_min, a_max + 1):
        _validate_one(a, summary)
    return summary

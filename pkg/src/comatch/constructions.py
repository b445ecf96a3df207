"""Generators for the library's named example families.

Each generator produces an object whose invariants are pinned by the test
suite: the cyclic sharpness systems (comatching number M, colorful Helly
number M+1), Hamming-ball systems, the four-circle plane configuration
(comatching number 4 with common-point variant 3), interpolated
polynomial comatchings of full dimension count, the torus grid complex,
and its repeated joins.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Optional

from .core import InputError, SetSystem, Verdict
from .linalg import rank_exact, solve_exact
from .simplicial import SimplicialComplex, join

__all__ = [
    "GeometricCircleConfig",
    "PolynomialComatching",
    "gen_cycle_sharpness",
    "gen_hamming_system",
    "gen_circle_config",
    "gen_poly_comatching",
    "verify_poly_comatching",
    "evaluate_polynomial",
    "gen_torus_grid_complex",
    "gen_good_join_complex",
]

HAMMING_GROUND_CAP = 4096
POLY_COUNT_CAP = 64
JOIN_FOLD_CAP = 2


# ---------------------------------------------------------------------------
# Cyclic sharpness systems
# ---------------------------------------------------------------------------


def gen_cycle_sharpness(m: int) -> SetSystem:
    """The cyclic sharpness system on 2M points.

    Its comatching-with-intersection number is M and its colorful Helly
    number is M+1, so the bound eta <= 1 + tau' is tight here.  The plain
    comatching number is floor(4M/3): a comatching's point set cannot
    contain three cyclically consecutive points (every member misses
    exactly one adjacent domino), and any no-three-consecutive subset
    extends to a comatching by matching each point to a domino whose other
    cell is unused.  That equals M only for M = 2.

    For M = 2 the members are A={1,2}, B={3,4} (the first subfamily) and
    C={2,3}, D={4,1} (the second).  For M >= 3 the members are the
    complements of the "even" dominoes {2i-1, 2i} (named e1..eM; this
    subfamily is repeated M-1 times) and of the "odd" dominoes
    {2i, 2i+1 mod 2M} (named o1..oM, the last subfamily).
    """
    if m < 2:
        raise InputError("the cyclic sharpness system needs M >= 2")
    if m == 2:
        return SetSystem.from_labels(
            ["1", "2", "3", "4"],
            [
                ("A", ["1", "2"]),
                ("B", ["3", "4"]),
                ("C", ["2", "3"]),
                ("D", ["4", "1"]),
            ],
        )
    n = 2 * m
    ground = [str(i + 1) for i in range(n)]
    members = []
    for i in range(m):
        gap = {2 * i, 2 * i + 1}
        members.append((f"e{i + 1}", frozenset(set(range(n)) - gap)))
    for i in range(m):
        gap = {2 * i + 1, (2 * i + 2) % n}
        members.append((f"o{i + 1}", frozenset(set(range(n)) - gap)))
    return SetSystem(tuple(ground), tuple(members))


def cycle_sharpness_families(m: int) -> tuple[tuple[frozenset[int], ...], frozenset[int]]:
    """The M subfamilies of the sharpness construction, as member selections:
    M-1 copies of the even family followed by the odd family."""
    if m == 2:
        even, odd = frozenset({0, 1}), frozenset({2, 3})
        return (even, odd), odd
    even = frozenset(range(m))
    odd = frozenset(range(m, 2 * m))
    return tuple([even] * (m - 1) + [odd]), odd


# ---------------------------------------------------------------------------
# Hamming balls
# ---------------------------------------------------------------------------


def gen_hamming_system(n: int, t: int, q: int = 2) -> SetSystem:
    """All radius-t Hamming balls over the q-ary strings of length n.

    Ground elements are the q^n strings; the member for center c is named
    B(c) and holds every string differing from c in at most t coordinates.
    """
    if q < 2:
        raise InputError("alphabet size q must be at least 2")
    if not (0 <= t < n):
        raise InputError("radius t must satisfy 0 <= t < n")
    size = q**n
    if size > HAMMING_GROUND_CAP:
        raise InputError(
            f"q^n = {size} exceeds the ground-set cap {HAMMING_GROUND_CAP}"
        )
    strings = ["".join(str(d) for d in word) for word in product(range(q), repeat=n)]
    index = {s: i for i, s in enumerate(strings)}
    members = []
    for c in strings:
        ball = frozenset(
            index[s]
            for s in strings
            if sum(a != b for a, b in zip(c, s)) <= t
        )
        members.append((f"B({c})", ball))
    return SetSystem(tuple(strings), tuple(members))


# ---------------------------------------------------------------------------
# Circle configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeometricCircleConfig:
    """Circles and points in the plane with a tolerance-based incidence rule.

    A point lies on a circle when | |p - c| - r | <= tolerance; every
    non-incidence must clear 10x the tolerance, otherwise the configuration
    is rejected as ambiguous.
    """

    circles: tuple[tuple[tuple[float, float], float], ...]
    circle_names: tuple[str, ...]
    points: tuple[tuple[float, float], ...]
    point_names: tuple[str, ...]
    tolerance: float

    def incidence(self, point_index: int, circle_index: int) -> bool:
        (cx, cy), r = self.circles[circle_index]
        px, py = self.points[point_index]
        gap = abs(math.hypot(px - cx, py - cy) - r)
        if gap <= self.tolerance:
            return True
        if gap <= 10 * self.tolerance:
            raise InputError(
                f"incidence of point {self.point_names[point_index]} on circle "
                f"{self.circle_names[circle_index]} is ambiguous at 10x tolerance"
            )
        return False


def gen_circle_config(tolerance: float = 1e-9) -> tuple[GeometricCircleConfig, SetSystem]:
    """Four unit circles and four points realizing a size-4 comatching.

    Three circles are centered at the vertices of an equilateral triangle
    and pass through its center; the fourth circumscribes the triangle.
    The points are the triangle's center and the three second intersection
    points of the circumcircle with the vertex circles.  Each point lies on
    exactly three circles, missing the one it is matched to.
    """
    if tolerance <= 0:
        raise InputError("tolerance must be positive")

    def on_circle(angle_deg: float) -> tuple[float, float]:
        rad = math.radians(angle_deg)
        return (math.cos(rad), math.sin(rad))

    circles = (
        (on_circle(0.0), 1.0),
        (on_circle(120.0), 1.0),
        (on_circle(240.0), 1.0),
        ((0.0, 0.0), 1.0),
    )
    circle_names = ("C0", "C120", "C240", "circum")
    points = (
        on_circle(180.0),
        on_circle(300.0),
        on_circle(60.0),
        (0.0, 0.0),
    )
    point_names = ("P180", "P300", "P60", "center")
    config = GeometricCircleConfig(circles, circle_names, points, point_names, tolerance)
    members = []
    for j, name in enumerate(circle_names):
        elems = frozenset(
            i for i in range(len(points)) if config.incidence(i, j)
        )
        members.append((name, elems))
    system = SetSystem(point_names, tuple(members))
    return config, system


# ---------------------------------------------------------------------------
# Polynomial comatchings
# ---------------------------------------------------------------------------

#: A polynomial is a tuple of (exponent tuple, coefficient) monomials.
Polynomial = tuple[tuple[tuple[int, ...], Fraction], ...]


@dataclass(frozen=True)
class PolynomialComatching:
    """Polynomials f_1..f_m and points x_1..x_m with f_i(x_j) = 0 iff i != j.

    The zero sets Z(f_i) play the role of members: the vanishing pattern is
    the comatching pattern.  When m equals the dimension count C(D+d, d) of
    the degree-D polynomial space, the constant 1 lies in the span of the
    f_i, so no point can lie on all the zero sets at once: the common-point
    variant caps one lower.
    """

    num_vars: int
    degree_cap: int
    polynomials: tuple[Polynomial, ...]
    points: tuple[tuple[Fraction, ...], ...]
    common_point: Optional[tuple[Fraction, ...]] = None


def _monomials(num_vars: int, degree_cap: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix: tuple[int, ...], remaining: int, budget: int) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for e in range(budget + 1):
            rec(prefix + (e,), remaining - 1, budget - e)

    rec((), num_vars, degree_cap)
    return sorted(out)


def evaluate_polynomial(poly: Polynomial, point: tuple[Fraction, ...]) -> Fraction:
    total = Fraction(0)
    for exps, coeff in poly:
        term = coeff
        for x, e in zip(point, exps):
            term *= x**e
        total += term
    return total


def gen_poly_comatching(
    d: int, degree_cap: int, seed: int = 7, max_attempts: int = 64
) -> PolynomialComatching:
    """Interpolated comatching of full size m = C(D+d, d).

    Samples m integer points from a small box until the monomial evaluation
    matrix is invertible over the rationals, then solves for the
    interpolants f_i with f_i(x_j) = 1 if i = j else 0.
    """
    if d < 1 or degree_cap < 1:
        raise InputError("need at least one variable and degree at least one")
    m = comb(degree_cap + d, d)
    if m > POLY_COUNT_CAP:
        raise InputError(f"C(D+d, d) = {m} exceeds the cap {POLY_COUNT_CAP}")
    monomials = _monomials(d, degree_cap)
    rng = random.Random(seed)
    box = 3 * m
    for _ in range(max_attempts):
        points = [
            tuple(Fraction(rng.randint(-box, box)) for _ in range(d))
            for _ in range(m)
        ]
        if len(set(points)) != m:
            continue
        evaluation = [
            [
                math.prod((x**e for x, e in zip(p, exps)), start=Fraction(1))
                for exps in monomials
            ]
            for p in points
        ]
        polynomials = []
        singular = False
        for i in range(m):
            rhs = [Fraction(1 if r == i else 0) for r in range(m)]
            coeffs = solve_exact(evaluation, rhs)
            if coeffs is None:
                singular = True
                break
            polynomials.append(
                tuple(
                    (exps, c)
                    for exps, c in zip(monomials, coeffs)
                    if c != 0
                )
            )
        if singular:
            continue
        return PolynomialComatching(
            d, degree_cap, tuple(polynomials), tuple(points)
        )
    raise InputError(
        f"could not sample a nonsingular evaluation matrix in {max_attempts} attempts"
    )


def verify_poly_comatching(pc: PolynomialComatching) -> Verdict:
    """Check the vanishing pattern, rational linear independence, and the
    full-count obstruction to a common point.

    When the collection has full size C(D+d, d) and is independent, it spans
    the degree-capped polynomial space, so the constant 1 is a combination
    of the f_i; a claimed common point (a joint zero) is then reported as a
    violation, since evaluating that combination there would give 0 = 1.
    """
    m = comb(pc.degree_cap + pc.num_vars, pc.num_vars)
    monomials = _monomials(pc.num_vars, pc.degree_cap)
    monomial_index = {mono: k for k, mono in enumerate(monomials)}
    violations = []
    if len(pc.polynomials) > m:
        violations.append(
            f"{len(pc.polynomials)} polynomials exceed the space dimension {m}"
        )
    if len(pc.points) != len(pc.polynomials):
        violations.append(
            f"{len(pc.points)} points for {len(pc.polynomials)} polynomials"
        )
    for poly in pc.polynomials:
        for exps, _ in poly:
            if len(exps) != pc.num_vars:
                raise InputError(f"exponent tuple {exps} has wrong arity")
            if any(e < 0 for e in exps):
                raise InputError(f"negative exponent in {exps}")
            if sum(exps) > pc.degree_cap:
                raise InputError(
                    f"monomial {exps} exceeds total degree {pc.degree_cap}"
                )
    for i, poly in enumerate(pc.polynomials):
        for j, point in enumerate(pc.points):
            value = evaluate_polynomial(poly, point)
            if i == j and value == 0:
                violations.append(f"f_{i + 1} vanishes at its own point x_{i + 1}")
            if i != j and value != 0:
                violations.append(
                    f"f_{i + 1}(x_{j + 1}) = {value}, expected 0"
                )

    # Independence over the rationals, via integer coefficient rows.
    rows = []
    for poly in pc.polynomials:
        denom = math.lcm(*(c.denominator for _, c in poly)) if poly else 1
        rows.append(
            {monomial_index[exps]: int(c * denom) for exps, c in poly}
        )
    rank = rank_exact(rows)
    if rank != len(pc.polynomials):
        violations.append(
            f"polynomials have rank {rank} < {len(pc.polynomials)}: dependent"
        )

    if len(pc.polynomials) == m and rank == m:
        combo = _express_one(pc.polynomials, monomials)
        if combo is None:
            violations.append(
                "full-size independent family should span the constant 1"
            )
        elif pc.common_point is not None:
            violations.append(
                "no common point can exist: the constant 1 is a combination "
                "of the polynomials, and it cannot vanish anywhere"
            )
    if pc.common_point is not None:
        for i, poly in enumerate(pc.polynomials):
            if evaluate_polynomial(poly, pc.common_point) != 0:
                violations.append(
                    f"claimed common point is not a zero of f_{i + 1}"
                )
    return Verdict.passed() if not violations else Verdict.failed(violations)


def _express_one(
    polynomials: tuple[Polynomial, ...], monomials: list[tuple[int, ...]]
) -> Optional[list[Fraction]]:
    """Coefficients c with sum c_i f_i = 1, or None if 1 is not in the span."""
    index = {mono: k for k, mono in enumerate(monomials)}
    matrix = [[Fraction(0)] * len(polynomials) for _ in monomials]
    for i, poly in enumerate(polynomials):
        for exps, c in poly:
            matrix[index[exps]][i] = c
    rhs = [Fraction(0)] * len(monomials)
    one = tuple([0] * len(monomials[0])) if monomials else ()
    rhs[index[one]] = Fraction(1)
    return solve_exact(matrix, rhs)


# ---------------------------------------------------------------------------
# Torus grid complex and joins
# ---------------------------------------------------------------------------


def gen_torus_grid_complex(k: int = 4, s: int = 2) -> SimplicialComplex:
    """k x k toroidal grid with one facet per s x s subsquare.

    Cells are numbered row-major from 1 (top-left); the facet anchored at
    cell (r, c) wraps modulo k in both directions.  The (4, 2) instance has
    16 vertices and 16 facets of size 4, and is homotopy-equivalent to the
    torus: reduced Betti numbers (0, 2, 1, 0).
    """
    if s < 1:
        raise InputError("subsquare size must be at least 1")
    if k < 2 * s:
        raise InputError("grid size k must be at least 2s for distinct facets")
    vertices = tuple(str(r * k + c + 1) for r in range(k) for c in range(k))
    facets = []
    for r in range(k):
        for c in range(k):
            cells = frozenset(
                ((r + a) % k) * k + ((c + b) % k)
                for a in range(s)
                for b in range(s)
            )
            facets.append(cells)
    return SimplicialComplex(vertices, tuple(facets))


def gen_good_join_complex(fold: int) -> SimplicialComplex:
    """The fold-times repeated join of the (4, 2) torus grid complex.

    fold=1 is the torus grid itself; fold=2 has 32 vertices and 256 facets
    of size 8, comatching number at most 4, and is 5-good while failing the
    5-Leray property.
    """
    if fold < 1:
        raise InputError("fold must be at least 1")
    if fold > JOIN_FOLD_CAP:
        raise InputError(f"fold {fold} exceeds the desk-scale cap {JOIN_FOLD_CAP}")
    base = gen_torus_grid_complex(4, 2)
    result = base
    for i in range(fold - 1):
        result = join(result, base, prefixes=(f"j{i}:", f"j{i + 1}:"))
    return result

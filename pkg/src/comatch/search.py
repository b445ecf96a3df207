"""Exact search for comatching and Helly-type invariants, with certificates.

Everything here is exact and certificate-producing:

* ``comatching_number`` / ``comatching_with_intersection_number`` run a
  branch-and-bound over (point, member) pairs on bitset rows.
* ``minimal_empty_subfamilies`` enumerates the inclusion-minimal
  subfamilies with empty intersection (the minimal non-faces of the
  nerve) as minimal hitting sets of the complement hypergraph.
* ``colorful_helly_number`` finds the least N such that every N-tuple of
  empty-intersection subfamilies admits a colorful transversal with
  empty intersection.
* ``colorful_transversal_dichotomy`` is the constructive step behind
  the bound eta <= 1 + tau': given subfamilies with empty intersections
  it returns either an empty transversal or a comatching-with-
  intersection witness of full size.

Budgets are never errors: results carry exactness flags instead, so
property tests can filter on them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .core import (
    Comatching,
    ComatchingWithIntersection,
    InputError,
    SetSystem,
    SubfamilySelection,
    intersection_mask,
)

__all__ = [
    "SearchBudget",
    "ColorfulInstance",
    "DichotomyOutcome",
    "FractionalHellyProfile",
    "comatching_number",
    "comatching_with_intersection_number",
    "minimal_empty_subfamilies",
    "helly_number",
    "colorful_helly_number",
    "colorful_transversal_dichotomy",
    "instance_admits_empty_transversal",
    "fractional_helly_profile",
]


@dataclass(frozen=True)
class SearchBudget:
    """Optional node and wall-clock limits; absent means unbounded."""

    max_nodes: Optional[int] = None
    max_millis: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes < 0:
            raise InputError("max_nodes must be nonnegative")
        if self.max_millis is not None and self.max_millis < 0:
            raise InputError("max_millis must be nonnegative")

    def clock(self) -> "BudgetClock":
        return BudgetClock(self)


UNBOUNDED = SearchBudget()


class BudgetClock:
    """Per-call budget tracker.  ``spend`` returns False once exhausted.

    Search entry points also accept a clock in place of a budget, so a
    caller can observe node counts or share one budget across phases.
    """

    __slots__ = ("max_nodes", "deadline", "nodes", "exhausted")

    def __init__(self, budget: Optional[SearchBudget]):
        budget = budget or UNBOUNDED
        self.max_nodes = budget.max_nodes
        self.deadline = (
            None
            if budget.max_millis is None
            else time.monotonic() + budget.max_millis / 1000.0
        )
        self.nodes = 0
        self.exhausted = False

    def spend(self, amount: int = 1) -> bool:
        if self.exhausted:
            return False
        self.nodes += amount
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exhausted = True
        elif self.deadline is not None and (self.nodes & 0xFF) == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
        return not self.exhausted


Budget = Optional["SearchBudget | BudgetClock"]


def as_clock(budget: Budget) -> BudgetClock:
    if isinstance(budget, BudgetClock):
        return budget
    return BudgetClock(budget)


@dataclass(frozen=True)
class ColorfulInstance:
    """Subfamilies F_1..F_N, each selecting members with empty intersection.

    Positions may repeat the same subfamily; the tuple is ordered but all
    derived quantities are symmetric in the positions.
    """

    families: tuple[SubfamilySelection, ...]

    def __len__(self) -> int:
        return len(self.families)

    @classmethod
    def build(cls, families: Iterable[Iterable[int]]) -> "ColorfulInstance":
        return cls(tuple(frozenset(f) for f in families))

    def validate(self, system: SetSystem) -> None:
        if not self.families:
            raise InputError("a colorful instance needs at least one subfamily")
        for k, fam in enumerate(self.families):
            if not fam:
                raise InputError(f"subfamily {k} is empty")
            if intersection_mask(system, fam) != 0:
                raise InputError(
                    f"subfamily {k} has nonempty intersection; "
                    "the dichotomy requires empty-intersection subfamilies"
                )


@dataclass(frozen=True)
class DichotomyOutcome:
    """Exactly one of: an empty colorful transversal, or a full-size witness."""

    transversal: Optional[tuple[int, ...]] = None
    witness: Optional[ComatchingWithIntersection] = None

    def __post_init__(self) -> None:
        if (self.transversal is None) == (self.witness is None):
            raise InputError("exactly one outcome arm must be populated")

    @property
    def is_transversal(self) -> bool:
        return self.transversal is not None


@dataclass(frozen=True)
class FractionalHellyProfile:
    """Exact tuple-intersection statistics of a family."""

    n: int
    k: int
    intersecting_tuples: int
    alpha: Fraction
    max_intersecting_subfamily: int
    beta: Fraction


# ---------------------------------------------------------------------------
# Comatching number (tau) and comatching-with-intersection number (tau')
# ---------------------------------------------------------------------------


def _comatching_candidates(system: SetSystem) -> list[tuple[int, int]]:
    # (member, point) pairs with point outside member; deterministic order.
    out = []
    for m in range(system.num_members):
        mask = system.masks[m]
        for p in range(system.num_points):
            if not (mask >> p & 1):
                out.append((m, p))
    return out


def _comatching_search(
    system: SetSystem, budget: Budget, need_common_point: bool
) -> tuple[int, tuple[tuple[int, int], ...], int, bool]:
    """Shared branch-and-bound.

    Returns (best size, best pairs as (point, member), common-point mask
    of the best solution, exact flag).  Pairs are explored with member
    indices ascending, so the reported certificate is the lexicographically
    first optimum and reruns are reproducible.
    """
    masks = system.masks
    full = system.full_mask
    clock = as_clock(budget)
    best_pairs: tuple[tuple[int, int], ...] = ()
    best_size = 0
    best_common = full if need_common_point else 0

    candidates = _comatching_candidates(system)
    if need_common_point:
        # A nonempty ground set always admits the size-0 certificate, but a
        # positive tau' needs at least one extendable pair.
        candidates = [(m, p) for (m, p) in candidates if masks[m]]

    def extend(
        chosen: list[tuple[int, int]],
        cand: list[tuple[int, int]],
        inter: int,
    ) -> None:
        nonlocal best_pairs, best_size, best_common
        if not clock.spend():
            return
        size = len(chosen)
        if size > best_size:
            best_size = size
            best_pairs = tuple((p, m) for (m, p) in chosen)
            best_common = inter
        if not cand:
            return
        distinct_members = len({m for m, _ in cand})
        distinct_points = len({p for _, p in cand})
        if size + min(distinct_members, distinct_points) <= best_size:
            return
        for idx, (m, p) in enumerate(cand):
            new_inter = inter & masks[m]
            if need_common_point and new_inter == 0:
                continue
            # Compatibility with the new pair: later members must contain p,
            # later points must lie in member m, and indices stay distinct.
            # Narrowing against every chosen pair keeps the candidate list
            # closed under those constraints along the whole branch.
            narrowed = [
                (m2, p2)
                for (m2, p2) in cand[idx + 1 :]
                if m2 > m
                and p2 != p
                and (masks[m2] >> p & 1)
                and (masks[m] >> p2 & 1)
            ]
            chosen.append((m, p))
            extend(chosen, narrowed, new_inter)
            chosen.pop()

    extend([], candidates, full)
    return best_size, best_pairs, best_common, not clock.exhausted


def comatching_number(
    system: SetSystem, budget: Budget = None
) -> tuple[int, Comatching, bool]:
    """Largest induced matching in the bipartite complement, with certificate.

    ``exact`` is True when the search space was exhausted; on budget
    exhaustion the returned size is still a valid lower bound and the
    certificate still verifies.
    """
    size, pairs, _, exact = _comatching_search(system, budget, need_common_point=False)
    return size, Comatching(pairs), exact


def comatching_with_intersection_number(
    system: SetSystem, budget: Budget = None
) -> tuple[int, Optional[ComatchingWithIntersection], bool]:
    """Largest comatching whose members share a common point.

    Returns (tau', certificate or None for tau' = 0, exact).  Whenever both
    this and :func:`comatching_number` are exact, tau' is tau or tau - 1.
    """
    size, pairs, common, exact = _comatching_search(
        system, budget, need_common_point=True
    )
    if size == 0:
        return 0, None, exact
    common_point = (common & -common).bit_length() - 1
    return size, ComatchingWithIntersection(Comatching(pairs), common_point), exact


# ---------------------------------------------------------------------------
# Minimal empty subfamilies and the Helly number
# ---------------------------------------------------------------------------


def minimal_empty_subfamilies(system: SetSystem) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal member selections with empty intersection.

    A selection has empty intersection exactly when the complements of its
    members cover the ground set, so these are the minimal hitting sets of
    the hypergraph {members missing x : x in ground}.  Enumerated by a
    depth-first search over the first unhit edge, pruned by criticality:
    every chosen member must stay the unique chosen one hitting some edge.
    """
    if system.num_points == 0:
        # Over an empty ground set even the empty selection intersects to
        # nothing, and it has no proper subselection, so it is the unique
        # minimal empty selection.
        return (frozenset(),)
    n_members = system.num_members
    edges = []
    for p in range(system.num_points):
        edge = 0
        for j in range(n_members):
            if not (system.masks[j] >> p & 1):
                edge |= 1 << j
        if edge == 0:
            return ()  # some point lies in every member: nothing is empty
        edges.append(edge)
    edges = sorted(set(edges))

    results: list[frozenset[int]] = []

    def rec(
        chosen: tuple[int, ...],
        crit: dict[int, list[int]],
        uncov: list[int],
        excluded: int,
    ) -> None:
        # Invariants: every edge outside uncov is hit by some chosen member;
        # crit[v] lists the edges hit by v alone among the chosen.  Criticality
        # can only shrink along a branch, so an empty crit[v] kills the branch
        # and every surviving leaf is a *minimal* hitting set.
        if not uncov:
            results.append(frozenset(chosen))
            return
        edge = min(uncov, key=lambda e: (e & ~excluded).bit_count())
        allowed = edge & ~excluded
        veto = 0
        while allowed:
            bit = allowed & -allowed
            allowed ^= bit
            j = bit.bit_length() - 1
            new_crit = {}
            ok = True
            for v, critical_edges in crit.items():
                reduced = [e for e in critical_edges if not (e >> j & 1)]
                if not reduced:
                    ok = False
                    break
                new_crit[v] = reduced
            if ok:
                new_crit[j] = [e for e in uncov if e >> j & 1]
                rec(
                    chosen + (j,),
                    new_crit,
                    [e for e in uncov if not (e >> j & 1)],
                    excluded | veto,
                )
            veto |= bit

    rec((), {}, edges, 0)
    return tuple(sorted(results, key=lambda s: (len(s), sorted(s))))


def helly_number(system: SetSystem) -> int:
    """Largest minimal empty subfamily size; 1 when every subfamily intersects.

    With that convention the defining implication holds vacuously for
    systems whose members share a point.
    """
    minimal = minimal_empty_subfamilies(system)
    if not minimal:
        return 1
    return max(len(s) for s in minimal)


# ---------------------------------------------------------------------------
# Colorful Helly number (eta)
# ---------------------------------------------------------------------------


def _has_empty_transversal(family_masks: Sequence[Sequence[int]], full: int) -> bool:
    """Whether one member per family can be chosen with empty intersection."""
    fams = sorted(family_masks, key=len)
    n = len(fams)
    dead: set[tuple[int, int]] = set()

    def rec(pos: int, mask: int) -> bool:
        if mask == 0:
            return True
        if pos == n:
            return False
        key = (pos, mask)
        if key in dead:
            return False
        for m in fams[pos]:
            if rec(pos + 1, mask & m):
                return True
        dead.add(key)
        return False

    return rec(0, full)


def instance_admits_empty_transversal(
    system: SetSystem, instance: "ColorfulInstance"
) -> bool:
    """Exhaustive transversal scan; the replay check for refuting instances."""
    family_masks = [
        [system.masks[j] for j in sorted(sel)] for sel in instance.families
    ]
    return _has_empty_transversal(family_masks, system.full_mask)


def _instance_is_refuting(
    system: SetSystem, selections: Sequence[frozenset[int]]
) -> bool:
    """True when no colorful transversal of the instance has empty intersection.

    Fast path: run the constructive dichotomy; a transversal outcome settles
    the question immediately.  A witness outcome does not (the witness arm
    proves a comatching exists, not that no empty transversal does), so it
    falls back to an exhaustive memoized scan.
    """
    outcome = colorful_transversal_dichotomy(
        system, ColorfulInstance(tuple(selections))
    )
    if outcome.is_transversal:
        return False
    family_masks = [[system.masks[j] for j in sorted(sel)] for sel in selections]
    return not _has_empty_transversal(family_masks, system.full_mask)


def colorful_helly_number(
    system: SetSystem, budget: Budget = None
) -> tuple[int, bool, Optional[ColorfulInstance]]:
    """Least N such that every N-tuple of empty subfamilies admits an
    empty colorful transversal.

    Positions range over the minimal empty subfamilies, with repetition:
    shrinking a position to a minimal empty subfamily inside it preserves
    refutation, and enlarging a position preserves transversals, so this
    restriction changes nothing.  Refuting tuples are closed under
    sub-multisets, so size-N candidates are generated as extensions of
    refuting (N-1)-multisets.  Returns (eta, exact, refuting instance of
    size eta - 1 when eta >= 2).

    Over a finite ground set every descending chain of intersections
    stabilizes, so restricting the definition to finite subfamilies loses
    nothing; the distinction only matters for infinite systems, which are
    out of scope here.
    """
    if system.num_points == 0:
        # Every transversal intersects to the empty set, so no instance
        # refutes and the vacuous value applies.
        return 1, True, None
    minimal = minimal_empty_subfamilies(system)
    if not minimal:
        return 1, True, None
    clock = as_clock(budget)

    def refutes(tup: tuple[int, ...]) -> bool:
        return _instance_is_refuting(system, [minimal[i] for i in tup])

    frontier: list[tuple[int, ...]] = []
    for i in range(len(minimal)):
        if not clock.spend():
            return 1, False, None
        if refutes((i,)):
            frontier.append((i,))
    if not frontier:
        return 1, True, None

    size = 1
    while True:
        next_frontier = []
        for tup in frontier:
            for i in range(tup[-1], len(minimal)):
                if not clock.spend():
                    example = ColorfulInstance(
                        tuple(minimal[i] for i in frontier[0])
                    )
                    return size + 1, False, example
                cand = tup + (i,)
                if refutes(cand):
                    next_frontier.append(cand)
        if not next_frontier:
            example = ColorfulInstance(tuple(minimal[i] for i in frontier[0]))
            return size + 1, True, example
        frontier = next_frontier
        size += 1


# ---------------------------------------------------------------------------
# The constructive dichotomy
# ---------------------------------------------------------------------------


def colorful_transversal_dichotomy(
    system: SetSystem, instance: ColorfulInstance
) -> DichotomyOutcome:
    """Empty transversal, or a comatching-with-intersection of full size.

    Starting from any transversal, as long as the current intersection I is
    nonempty and some position i is redundant (F_i contains the intersection
    of the others), replace F_i by a member of its subfamily avoiding a
    point of I; the full intersection shrinks strictly, so this ends within
    |ground| rounds.  If no position is redundant, every position i yields a
    point in (intersection of the others) minus F_i, and any point of I is a
    common point: a verified witness of size N.
    """
    instance.validate(system)
    masks = system.masks
    full = system.full_mask
    families = [sorted(sel) for sel in instance.families]
    n = len(families)

    choice = [fam[0] for fam in families]
    while True:
        total = full
        for j in choice:
            total &= masks[j]
        if total == 0:
            return DichotomyOutcome(transversal=tuple(choice))
        others = _partial_intersections(masks, choice, full)
        redundant = next(
            (i for i in range(n) if others[i] & ~masks[choice[i]] == 0), None
        )
        if redundant is None:
            pairs = []
            for i in range(n):
                avoid_mask = others[i] & ~masks[choice[i]]
                point = (avoid_mask & -avoid_mask).bit_length() - 1
                pairs.append((point, choice[i]))
            common = (total & -total).bit_length() - 1
            witness = ComatchingWithIntersection(Comatching(tuple(pairs)), common)
            return DichotomyOutcome(witness=witness)
        x = (total & -total).bit_length() - 1
        replacement = next(
            j for j in families[redundant] if not (masks[j] >> x & 1)
        )
        choice[redundant] = replacement


def _partial_intersections(
    masks: Sequence[int], choice: Sequence[int], full: int
) -> list[int]:
    """For each position i, the intersection of all chosen members but i."""
    n = len(choice)
    prefix = [full] * (n + 1)
    for i in range(n):
        prefix[i + 1] = prefix[i] & masks[choice[i]]
    suffix = [full] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] & masks[choice[i]]
    return [prefix[i] & suffix[i + 1] for i in range(n)]


# ---------------------------------------------------------------------------
# Fractional-Helly profiling
# ---------------------------------------------------------------------------


def fractional_helly_profile(system: SetSystem, k: int) -> FractionalHellyProfile:
    """Exact counts: fraction of intersecting k-tuples, and the largest
    intersecting subfamily as a fraction of the family."""
    n = system.num_members
    if k < 0 or k > n:
        raise InputError(f"tuple size {k} out of range 0..{n}")
    full = system.full_mask
    intersecting = 0
    for tup in combinations(range(n), k):
        mask = full
        for j in tup:
            mask &= system.masks[j]
        if mask != 0:
            intersecting += 1
    total = comb(n, k)
    alpha = Fraction(intersecting, total) if total else Fraction(0)
    if system.num_points == 0:
        largest = 0
    else:
        largest = max(
            sum(1 for j in range(n) if system.masks[j] >> p & 1)
            for p in range(system.num_points)
        )
    beta = Fraction(largest, n) if n else Fraction(0)
    return FractionalHellyProfile(n, k, intersecting, alpha, largest, beta)

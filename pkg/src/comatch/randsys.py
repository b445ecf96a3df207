"""Seeded random set systems, complexes, and colorful instances.

The generator is the stdlib Mersenne Twister (``random.Random``), which is
stable across platforms and Python versions for the integer methods used
here, so identical seeds reproduce identical objects everywhere.
"""

from __future__ import annotations

import random
from typing import Optional

from .core import SetSystem
from .search import ColorfulInstance, minimal_empty_subfamilies
from .simplicial import SimplicialComplex, maximal_sets

__all__ = ["random_system", "random_complex", "random_refutable_instance"]


def random_system(
    rng: random.Random, max_points: int = 7, max_members: int = 7
) -> SetSystem:
    n = rng.randint(1, max_points)
    m = rng.randint(1, max_members)
    members = []
    for j in range(m):
        elems = frozenset(p for p in range(n) if rng.random() < 0.5)
        members.append((f"F{j + 1}", elems))
    return SetSystem(tuple(f"x{i + 1}" for i in range(n)), tuple(members))


def random_complex(
    rng: random.Random, max_vertices: int = 6, max_facets: int = 5
) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    count = rng.randint(1, max_facets)
    raw = []
    for _ in range(count):
        size = rng.randint(1, n)
        raw.append(frozenset(rng.sample(range(n), size)))
    facets = list(maximal_sets(raw))
    covered = set().union(*facets)
    for v in range(n):
        if v not in covered:
            facets.append(frozenset([v]))
    return SimplicialComplex(
        tuple(f"v{i + 1}" for i in range(n)), maximal_sets(facets)
    )


def random_refutable_instance(
    rng: random.Random, system: SetSystem, max_positions: int = 4
) -> Optional[ColorfulInstance]:
    """A random instance over the system's empty-intersection subfamilies.

    Each position takes a random minimal empty subfamily, optionally padded
    with extra members (enlarging preserves the empty-intersection
    precondition).  None when the system has no empty subfamily.
    """
    if system.num_points == 0:
        return None
    minimal = minimal_empty_subfamilies(system)
    if not minimal:
        return None
    n_positions = rng.randint(1, max_positions)
    families = []
    for _ in range(n_positions):
        base = set(rng.choice(minimal))
        for j in range(system.num_members):
            if rng.random() < 0.2:
                base.add(j)
        families.append(frozenset(base))
    return ColorfulInstance(tuple(families))

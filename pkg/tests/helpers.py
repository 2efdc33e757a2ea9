"""Shared generators for the randomized suites.

Every test seeds its own random.Random so runs are reproducible.
"""

from __future__ import annotations

import random

from padicdyn import IntPoly, eval_mod

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def random_int_poly(
    rng: random.Random,
    max_deg: int,
    lo: int = -9,
    hi: int = 9,
    min_deg: int = 0,
) -> IntPoly:
    """Random polynomial with the exact degree drawn from [min_deg, max_deg]."""
    deg = rng.randint(min_deg, max_deg)
    coeffs = [rng.randint(lo, hi) for _ in range(deg + 1)]
    if deg >= 0:
        while coeffs[-1] == 0:
            coeffs[-1] = rng.randint(lo, hi)
    return IntPoly(tuple(coeffs))


def planted_nonsingular(
    rng: random.Random,
    p: int,
    deg: int,
    level: int = 1,
) -> tuple[IntPoly, int]:
    """Monic f of the given degree with a planted nonsingular root r:
    f(r) = 0 (mod p^level) and f'(r) != 0 (mod p).

    Built as f = (x - r)*g + p^level * h with g monic, so the planted
    structure is independent of any lifting code under test.
    """
    if deg < 1:
        raise ValueError("degree must be at least 1")
    while True:
        r = rng.randrange(p)
        g = IntPoly(tuple([rng.randint(-9, 9) for _ in range(deg - 1)] + [1]))
        if eval_mod(g, r, p) == 0:
            continue
        h = IntPoly(tuple(rng.randint(-9, 9) for _ in range(deg)))
        f = IntPoly((-r, 1)) * g + p**level * h
        return f, r


def exhaustive_roots(f: IntPoly, target: int, m: int) -> list[int]:
    """Independent root oracle: plain evaluation over the full range."""
    return [a for a in range(m) if eval_mod(f, a, m) == target % m]


def tree_shape(tree, node_id, reduce_to=None):
    """Canonical nested form (value, status, sorted children) for
    structural tree comparison; values optionally reduced mod reduce_to."""
    node = tree.node(node_id)
    value = node.value if reduce_to is None else node.value % reduce_to
    kids = tuple(
        sorted(tree_shape(tree, c.id, reduce_to) for c in tree.children_of(node_id))
    )
    return (value, node.status, kids)

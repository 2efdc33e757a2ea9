"""Root finding for f(x) = c (mod p) and a brute-force congruence oracle.

The mod-p solver is plain exhaustion over [0, p) after a degree-lowering
Fermat reduction; exhaustion is exact and doubles as its own
certificate.  The oracle enumerates any modulus up to a configured
bound and is the independent cross-check used throughout the test
suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .padic import Prime, as_prime
from .polynomial import IntPoly, eval_mod, fermat_reduce, reduce_mod_p

DEFAULT_ORACLE_BOUND = 10**7

# Below this size a plain loop beats array setup; above int64 squares overflow.
_VECTOR_MIN = 4096
_VECTOR_MAX = 2**31


@dataclass(frozen=True)
class RootModP:
    """A residue solving f(x) = target (mod p), tagged singular when the
    derivative of f vanishes there mod p."""

    residue: int
    singular: bool
    derivative_residue: int


def congruence_is_identically_zero(
    f: IntPoly, target: int, p: Union[int, Prime]
) -> bool:
    """True when every coefficient of f - target is divisible by p, the
    degenerate case in which all p residues solve the congruence."""
    return reduce_mod_p(f - target, p).is_zero


def roots_mod_p(f: IntPoly, target: int, p: Union[int, Prime]) -> list[RootModP]:
    """All residues a in [0, p) with f(a) = target (mod p), ascending,
    each classified by the derivative of the original f at a.

    When deg(f - target) >= p the search runs on the Fermat reduction,
    which preserves the root set but not derivatives; classification
    therefore always evaluates f' itself.  A reduction that vanishes
    identically means every residue is a root.
    """
    prime = as_prime(p)
    q = prime.p
    shifted = f - target
    h = reduce_mod_p(shifted, prime)
    if h.is_zero:
        residues: list[int] = list(range(q))
    else:
        g = fermat_reduce(shifted, prime) if h.degree >= q else h
        residues = list(range(q)) if g.is_zero else g.roots()
    deriv = f.derivative()
    out = []
    for a in residues:
        d = eval_mod(deriv, a, q)
        out.append(RootModP(a, d == 0, d))
    return out


def _bruteforce_python(coeffs: list[int], target: int, m: int) -> list[int]:
    hits = []
    rev = coeffs[::-1]
    for x in range(m):
        total = 0
        for c in rev:
            total = (total * x + c) % m
        if total == target:
            hits.append(x)
    return hits


def _bruteforce_vectorized(coeffs: list[int], target: int, m: int) -> list[int]:
    # Horner over the whole range at once; coefficients already reduced
    # mod m <= 2^31 keep every intermediate product inside int64.
    xs = np.arange(m, dtype=np.int64)
    acc = np.full(m, coeffs[-1] if coeffs else 0, dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        acc = (acc * xs + c) % m
    return [int(v) for v in np.flatnonzero(acc == target)]


def solve_congruence_bruteforce(
    f: IntPoly,
    target: int,
    m: int,
    *,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> list[int]:
    """All x in [0, m) with f(x) = target (mod m), by exhaustive
    evaluation; sorted ascending.

    Any modulus >= 2 is accepted up to `bound` (default 10^7), which
    keeps exhaustion tractable.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if m > bound:
        raise ValueError(f"modulus {m} exceeds the exhaustion bound {bound}")
    coeffs = [c % m for c in f.coeffs]
    target %= m
    if _VECTOR_MIN <= m <= _VECTOR_MAX:
        return _bruteforce_vectorized(coeffs, target, m)
    return _bruteforce_python(coeffs, target, m)

"""Hensel lifting: refine a nonsingular root mod p to a root mod p^k.

The lift walks one power at a time and keeps the whole ladder
(a_1, ..., a_k), because downstream consumers want the intermediate
residues: the ladder is a coherent sequence and converts directly to a
truncated p-adic integer.  Quadratic (precision-doubling) stepping
would satisfy the same contract but is deliberately not used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import NotARootError, SingularRootError
from .padic import CoherentSequence, PadicInt, Prime, as_prime
from .polynomial import IntPoly, eval_mod


@dataclass(frozen=True)
class LiftedRoot:
    """The ladder (a_1, ..., a_k) of residues produced by lifting, with
    a_j in [0, p^j), f(a_j) = target (mod p^j), and consecutive entries
    congruent mod p^j."""

    prime: Prime
    ladder: tuple[int, ...]
    polynomial: IntPoly
    target: int

    @property
    def precision(self) -> int:
        return len(self.ladder)

    @property
    def root(self) -> int:
        """The terminal residue mod p^k."""
        return self.ladder[-1]

    def as_padic(self) -> PadicInt:
        return PadicInt.from_int(self.root, self.prime, self.precision)

    def as_coherent_sequence(self) -> CoherentSequence:
        return CoherentSequence(self.prime, self.ladder)


def hensel_step(f: IntPoly, a: int, j: int, p: Union[int, Prime]) -> int:
    """One lifting step: the unique residue mod p^(j+1) congruent to a
    mod p^j with f = 0 mod p^(j+1).

    Requires f(a) = 0 (mod p^j) and f'(a) != 0 (mod p); the two
    precondition failures raise NotARootError and SingularRootError
    respectively.  The correction is t = -(f(a)/p^j) * f'(a)^-1 mod p,
    applied as a + t*p^j.
    """
    prime = as_prime(p)
    q = prime.p
    if j < 1:
        raise ValueError("level must be at least 1")
    step_mod = q ** (j + 1)
    # Evaluating mod p^(j+1) is enough: only f(a)/p^j mod p is needed.
    residue = eval_mod(f, a, step_mod)
    if residue % q**j != 0:
        raise NotARootError(f"{a} is not a root modulo {q}^{j}")
    d = eval_mod(f.derivative(), a, q)
    if d == 0:
        raise SingularRootError(
            f"derivative vanishes at {a} mod {q}: no unique lift exists"
        )
    t = -(residue // q**j) * pow(d, -1, q) % q
    return (a + t * q**j) % step_mod


def hensel_lift(
    f: IntPoly,
    a0: int,
    k: int,
    p: Union[int, Prime],
    target: int = 0,
) -> LiftedRoot:
    """Iterate hensel_step from a nonsingular root a0 of f = target
    (mod p) up to precision p^k, returning the full ladder.

    The terminal entry is the unique residue mod p^k congruent to a0
    mod p solving the congruence.  Seeds that are not roots mod p, or
    that are singular, are rejected up front.  f need not be monic:
    only the nonsingularity of the seed is used, even though the
    classical p-adic statement is usually phrased for monic f.
    """
    prime = as_prime(p)
    q = prime.p
    if k < 1:
        raise ValueError("precision must be at least 1")
    g = f - target
    a = a0 % q
    if eval_mod(g, a, q) != 0:
        raise NotARootError(f"seed {a0} is not a root of the congruence modulo {q}")
    if eval_mod(g.derivative(), a, q) == 0:
        raise SingularRootError(
            f"seed {a0} is singular mod {q}: no unique lift exists"
        )
    ladder = [a]
    for j in range(1, k):
        ladder.append(hensel_step(g, ladder[-1], j, prime))
    return LiftedRoot(prime, tuple(ladder), f, target % q**k)

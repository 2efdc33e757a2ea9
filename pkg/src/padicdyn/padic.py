"""p-adic valuations, exact norms, and fixed-precision p-adic integers.

Norms are returned as `fractions.Fraction`, never floats, so ultrametric
comparisons are exact.  A truncated p-adic integer is a digit vector
(a_0, ..., a_{k-1}) in base p, i.e. a residue in Z/p^kZ with the digit
expansion made explicit.  All values here are immutable and all
functions are pure; everything can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import NotAUnitError, NotPrimeError

# Miller-Rabin with this witness set is deterministic for n < 3.3e24;
# beyond that it is a strong probable-prime test.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Primality test: trial division by small primes, then Miller-Rabin."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """A verified prime base. Construction rejects composites."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"Prime({self.p})"


@lru_cache(maxsize=None)
def _verified_prime(p: int) -> Prime:
    return Prime(p)


def as_prime(p: Union[int, Prime]) -> Prime:
    """Coerce an int to a verified Prime (cached); pass Primes through."""
    if isinstance(p, Prime):
        return p
    return _verified_prime(int(p))


class InfinityType:
    """Order-only infinity: the valuation of zero. Compares greater than
    every integer; supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return isinstance(other, InfinityType)

    def __hash__(self):
        return hash("padicdyn.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, InfinityType)

    def __gt__(self, other):
        return not isinstance(other, InfinityType)

    def __ge__(self, other):
        return True


INFINITY = InfinityType()

Valuation = Union[int, InfinityType]


def vp_int(n: int, p: Union[int, Prime]) -> Valuation:
    """Exponent of the highest power of p dividing n; INFINITY for n = 0."""
    q = as_prime(p).p
    if n == 0:
        return INFINITY
    n = abs(n)
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def vp_rat(numerator: int, denominator: int, p: Union[int, Prime]) -> Valuation:
    """Valuation of numerator/denominator: vp(num) - vp(den).

    May be negative; INFINITY exactly when the numerator is zero.
    """
    if denominator == 0:
        raise ValueError("denominator must be nonzero")
    if numerator == 0:
        return INFINITY
    return vp_int(numerator, p) - vp_int(denominator, p)


def abs_p(numerator: int, denominator: int, p: Union[int, Prime]) -> Fraction:
    """p-adic absolute value p**(-vp) of numerator/denominator, as an exact
    Fraction. Zero input gives Fraction(0)."""
    v = vp_rat(numerator, denominator, p)
    if v is INFINITY:
        return Fraction(0)
    q = as_prime(p).p
    if v >= 0:
        return Fraction(1, q**v)
    return Fraction(q ** (-v))


@dataclass(frozen=True)
class PadicInt:
    """Truncated p-adic integer: digits (a_0, ..., a_{k-1}) in base p,
    representing sum(a_i * p**i), a residue in Z/p^kZ.

    Arithmetic requires identical base and precision; no silent
    truncation happens.
    """

    prime: Prime
    precision: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        if len(self.digits) != self.precision:
            raise ValueError("digit count must equal the precision")
        q = self.prime.p
        if any(not 0 <= d < q for d in self.digits):
            raise ValueError(f"digits must lie in [0, {q})")

    @classmethod
    def from_int(cls, n: int, p: Union[int, Prime], k: int) -> "PadicInt":
        """Digit expansion of n mod p^k; negative n is reduced into [0, p^k)."""
        prime = as_prime(p)
        if k < 1:
            raise ValueError("precision must be at least 1")
        q = prime.p
        r = n % q**k
        digits = []
        for _ in range(k):
            r, d = divmod(r, q)
            digits.append(d)
        return cls(prime, k, tuple(digits))

    @property
    def value(self) -> int:
        """The represented residue in [0, p^k)."""
        q = self.prime.p
        total = 0
        for d in reversed(self.digits):
            total = total * q + d
        return total

    @property
    def modulus(self) -> int:
        return self.prime.p**self.precision

    def _check_compatible(self, other: "PadicInt") -> None:
        if self.prime != other.prime:
            raise ValueError("mismatched prime bases")
        if self.precision != other.precision:
            raise ValueError("mismatched precisions")

    def __add__(self, other: "PadicInt") -> "PadicInt":
        self._check_compatible(other)
        return PadicInt.from_int(self.value + other.value, self.prime, self.precision)

    def __sub__(self, other: "PadicInt") -> "PadicInt":
        self._check_compatible(other)
        return PadicInt.from_int(self.value - other.value, self.prime, self.precision)

    def __mul__(self, other: "PadicInt") -> "PadicInt":
        self._check_compatible(other)
        return PadicInt.from_int(self.value * other.value, self.prime, self.precision)

    def __neg__(self) -> "PadicInt":
        return PadicInt.from_int(-self.value, self.prime, self.precision)

    def is_unit(self) -> bool:
        return self.digits[0] != 0

    def invert(self) -> "PadicInt":
        """Multiplicative inverse mod p^k; requires a_0 != 0."""
        if not self.is_unit():
            raise NotAUnitError(
                f"not a unit: constant digit is 0, |x|_{self.prime.p} < 1"
            )
        inv = pow(self.value, -1, self.modulus)
        return PadicInt.from_int(inv, self.prime, self.precision)

    def coherent_sequence(self) -> "CoherentSequence":
        """Residues of this value modulo p, p^2, ..., p^k."""
        q = self.prime.p
        v = self.value
        terms = tuple(v % q ** (j + 1) for j in range(self.precision))
        return CoherentSequence(self.prime, terms)

    def __str__(self) -> str:
        return f"{self.value} + O({self.prime.p}^{self.precision})"


def check_coherent(
    terms: Sequence[int],
    p: Union[int, Prime],
    convention: str = "standard",
) -> tuple[bool, int | None]:
    """Check that a residue sequence is compatible across levels.

    Under the default "standard" (inverse-limit) convention, the pair at
    0-based positions (i-1, i) must agree mod p^i: term i is read as a
    residue mod p^(i+1) projecting onto term i-1.  The "literal"
    convention checks the same pair one level stricter, mod p^(i+1).
    Terms may be arbitrary integers; congruences reduce them implicitly.

    Returns (True, None), or (False, i) for the smallest 0-based index i
    whose pair (i-1, i) violates its congruence.
    """
    if not terms:
        raise ValueError("sequence must be nonempty")
    if convention not in ("standard", "literal"):
        raise ValueError(f"unknown convention: {convention!r}")
    q = as_prime(p).p
    offset = 0 if convention == "standard" else 1
    for i in range(1, len(terms)):
        if (terms[i] - terms[i - 1]) % q ** (i + offset) != 0:
            return False, i
    return True, None


@dataclass(frozen=True)
class CoherentSequence:
    """A finite inverse-limit element: terms (x_1, ..., x_N) with x_n a
    residue mod p^n and consecutive terms compatible under reduction.

    Terms are normalized into [0, p^n) at construction; incoherent input
    is rejected with the first violating index.
    """

    prime: Prime
    terms: tuple[int, ...]

    def __post_init__(self):
        q = self.prime.p
        reduced = tuple(t % q ** (i + 1) for i, t in enumerate(self.terms))
        object.__setattr__(self, "terms", reduced)
        ok, bad = check_coherent(reduced, self.prime)
        if not ok:
            raise ValueError(f"sequence is not coherent at index {bad}")

    def __len__(self) -> int:
        return len(self.terms)

    def to_padic(self) -> PadicInt:
        """The PadicInt of precision N determined by the final term."""
        return PadicInt.from_int(self.terms[-1], self.prime, len(self.terms))

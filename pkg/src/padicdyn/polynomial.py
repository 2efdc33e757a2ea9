"""Integer polynomials and their reductions over F_p.

Polynomials are coefficient tuples with the constant term first, in
canonical form: no trailing zero coefficients, the zero polynomial being
the empty tuple (degree -1).  Coefficients are plain Python ints, so
evaluation at lifted roots modulo large prime powers never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .padic import Prime, as_prime


def _canonical(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in one variable with integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPoly":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coeff_list(self) -> list[int]:
        """Canonical serialization: constant term first; [0] for zero."""
        return list(self.coeffs) if self.coeffs else [0]

    def _coerce(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        """Exact evaluation by Horner's rule."""
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def derivative(self) -> "IntPoly":
        """Formal derivative sum(i * c_i * x^(i-1))."""
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def __str__(self) -> str:
        return format_poly(self)


def eval_mod(f: IntPoly, x: int, m: int) -> int:
    """f(x) mod m by Horner's rule, every intermediate reduced mod m."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    x %= m
    total = 0
    for c in reversed(f.coeffs):
        total = (total * x + c) % m
    return total


def format_poly(f: IntPoly) -> str:
    """Render in conventional notation, highest power first: "x^2 - 7x + 2".

    Output re-parses to an equal polynomial (round-trip canonical form).
    """
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p: canonical residue coefficients, constant first.

    Construction reduces each coefficient mod p and strips trailing
    zeros, so equality is plain field-wise equality.
    """

    prime: Prime
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        q = self.prime.p
        object.__setattr__(self, "coeffs", _canonical(c % q for c in self.coeffs))

    @classmethod
    def from_int_poly(cls, f: IntPoly, p: Union[int, Prime]) -> "FpPoly":
        return cls(as_prime(p), f.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def eval(self, x: int) -> int:
        q = self.prime.p
        x %= q
        total = 0
        for c in reversed(self.coeffs):
            total = (total * x + c) % q
        return total

    def roots(self) -> list[int]:
        """All residues in [0, p) where the polynomial vanishes, ascending."""
        return [a for a in range(self.prime.p) if self.eval(a) == 0]

    def _check_same_field(self, other: "FpPoly") -> None:
        if self.prime != other.prime:
            raise ValueError("mismatched prime fields")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check_same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.prime, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.prime, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check_same_field(other)
        if self.is_zero or other.is_zero:
            return FpPoly(self.prime, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return FpPoly(self.prime, tuple(out))

    def to_int_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.to_int_poly())


def reduce_mod_p(f: IntPoly, p: Union[int, Prime]) -> FpPoly:
    """Coefficientwise reduction of f into F_p, canonical form restored."""
    return FpPoly.from_int_poly(f, p)


def fp_divmod(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly]:
    """Polynomial division over F_p: f = q*g + r with deg r < deg g."""
    f._check_same_field(g)
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    p = f.prime.p
    if f.degree < g.degree:
        return FpPoly(f.prime, ()), f
    inv_lead = pow(g.leading_coefficient, -1, p)
    rem = list(f.coeffs)
    dg = g.degree
    quot = [0] * (f.degree - dg + 1)
    for i in range(f.degree, dg - 1, -1):
        c = rem[i] % p
        if c == 0:
            continue
        factor = c * inv_lead % p
        quot[i - dg] = factor
        for j, b in enumerate(g.coeffs):
            rem[i - dg + j] = (rem[i - dg + j] - factor * b) % p
    return FpPoly(f.prime, tuple(quot)), FpPoly(f.prime, tuple(rem[:dg]))


def _x_pow_p_minus_x(prime: Prime) -> FpPoly:
    p = prime.p
    coeffs = [0] * (p + 1)
    coeffs[1] = p - 1
    coeffs[p] = 1
    return FpPoly(prime, tuple(coeffs))


def fermat_reduce(f: IntPoly, p: Union[int, Prime]) -> FpPoly:
    """Remainder of f mod p upon division by x^p - x.

    The result has degree < p and exactly the same roots over F_p as f;
    the zero polynomial signals that every residue is a root.  A
    reduction that already has degree < p is returned unchanged.
    """
    prime = as_prime(p)
    h = reduce_mod_p(f, prime)
    if h.degree < prime.p:
        return h
    _, r = fp_divmod(h, _x_pow_p_minus_x(prime))
    return r


def divides_xp_minus_x(
    f: IntPoly, p: Union[int, Prime]
) -> tuple[bool, FpPoly, FpPoly]:
    """Certify whether f (monic mod p) divides x^p - x over F_p.

    Returns (ok, quotient, remainder): ok is True exactly when the
    remainder vanishes, in which case f with degree n has exactly n
    roots mod p and the quotient is monic of degree p - n.  Degree
    above p can never divide, so ok is False there, matching the root
    count (at most p) falling short of the degree.
    """
    prime = as_prime(p)
    h = reduce_mod_p(f, prime)
    if h.is_zero or not h.is_monic:
        raise ValueError("polynomial must be monic modulo p")
    quot, rem = fp_divmod(_x_pow_p_minus_x(prime), h)
    return rem.is_zero, quot, rem


def make_monic(g: FpPoly) -> FpPoly:
    """Scale a nonzero F_p polynomial by the inverse of its leading
    coefficient.  Normalization helper; root sets are unchanged."""
    if g.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    if g.is_monic:
        return g
    p = g.prime.p
    inv = pow(g.leading_coefficient, -1, p)
    return FpPoly(g.prime, tuple(c * inv for c in g.coeffs))

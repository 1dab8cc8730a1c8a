"""Ground parameters (p, f, eta, ell) and shared arithmetic helpers."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from sympy import factorint, isprime, n_order

DEFAULT_GUARDRAIL_BITS = 40


class ParameterError(ValueError):
    """Invalid ground parameters or malformed labels."""


class GuardrailError(RuntimeError):
    """An integer to be factored exceeds the configured size limit."""


def guardrail_bits() -> int:
    raw = os.environ.get("ATLAS_GUARDRAIL_BITS")
    if raw is None:
        return DEFAULT_GUARDRAIL_BITS
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"ATLAS_GUARDRAIL_BITS must be an integer, got {raw!r}")


def check_guardrail(value: int) -> None:
    bits = guardrail_bits()
    if abs(value).bit_length() > bits:
        raise GuardrailError(
            f"{value} exceeds the factorization guardrail of {bits} bits "
            "(set ATLAS_GUARDRAIL_BITS to raise it)"
        )


def valuation(n: int, prime: int) -> int:
    """Exponent of `prime` in the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % prime == 0:
        n //= prime
        v += 1
    return v


def two_part(n: int) -> int:
    return 1 << valuation(n, 2)


def odd_part(n: int) -> int:
    n = abs(n)
    return n >> valuation(n, 2)


def mult_order(x: int, m: int) -> int:
    """Multiplicative order of x modulo m (1 when m == 1)."""
    if m == 1:
        return 1
    return int(n_order(x % m, m))


@dataclass(frozen=True)
class GroundParams:
    """q = p**f, the sign eta, and an optional modular prime ell."""

    p: int
    f: int
    eta: int = 1
    ell: Optional[int] = None

    def __post_init__(self):
        if not isprime(self.p):
            raise ParameterError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ParameterError(f"f = {self.f} must be positive")
        if self.eta not in (1, -1):
            raise ParameterError(f"eta must be +1 or -1, got {self.eta}")
        if self.ell is not None:
            if not isprime(self.ell):
                raise ParameterError(f"ell = {self.ell} is not prime")
            if self.ell == 2 and self.p == 2:
                raise ParameterError(f"ell = 2 requires odd q, got q = {self.q}")
            if self.ell == self.p:
                raise ParameterError(f"ell = {self.ell} divides q = {self.q}")

    @classmethod
    def from_q(cls, q: int, eta: int = 1, ell: Optional[int] = None) -> "GroundParams":
        if q < 2:
            raise ParameterError(f"q = {q} is not a prime power")
        fac = factorint(q)
        if len(fac) != 1:
            raise ParameterError(f"q = {q} is not a prime power")
        (p, f), = fac.items()
        return cls(int(p), int(f), eta, ell)

    def with_ell(self, ell: Optional[int]) -> "GroundParams":
        return GroundParams(self.p, self.f, self.eta, ell)

    @cached_property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def eta_q(self) -> int:
        return self.eta * self.q

    @property
    def center_order(self) -> int:
        """|Z| = q - eta."""
        return self.q - self.eta

    @property
    def center_odd_order(self) -> int:
        """|O_2'(Z)| = (q - eta)_2'."""
        return odd_part(self.center_order)

    @property
    def e(self) -> int:
        """Multiplicative order of eta*q modulo ell (1 when ell = 2)."""
        if self.ell is None:
            raise ParameterError("ell is not set")
        if self.ell == 2:
            return 1
        return mult_order(self.eta_q, self.ell)

    def multiplier(self, m: int) -> int:
        """eta*q reduced modulo m, as a non-negative residue."""
        return self.eta_q % m

    def require_ell_two(self) -> None:
        if self.ell != 2:
            raise ParameterError(f"operation requires ell = 2, got ell = {self.ell}")
        if self.p == 2:
            raise ParameterError("ell = 2 requires odd q")

    def describe(self) -> str:
        group = "GL" if self.eta == 1 else "GU"
        return f"{group}(q={self.q}, ell={self.ell})"

"""Roots of unity as residues, Frobenius orbits, and the center action.

A root of unity of order m is stored as a residue a modulo m with
gcd(a, m) = 1, standing for zeta_m**a in a fixed compatible system of
primitive roots.  Multiplication by eta*q permutes the roots of each
order; its orbits are the elementary divisors (monic irreducible
polynomials, or the pairs Delta*Delta~ in the unitary case).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from sympy import divisors, factorint

from slblocks.params import (
    GroundParams,
    ParameterError,
    check_guardrail,
    mult_order,
    odd_part,
    valuation,
)


@dataclass(frozen=True, order=True)
class RootOfUnity:
    modulus: int
    residue: int

    def __post_init__(self):
        m, a = self.modulus, self.residue
        if m < 1 or not 0 <= a < m or gcd(a, m) != 1:
            raise ParameterError(f"({m}, {a}) is not a reduced root of unity")

    @property
    def order(self) -> int:
        return self.modulus

    def lift(self, big: int) -> int:
        """Residue of this root inside Z/big, for a multiple big of the modulus."""
        return self.residue * (big // self.modulus) % big

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        big = lcm(self.modulus, other.modulus)
        return _reduce(big, self.lift(big) + other.lift(big))

    def __pow__(self, k: int) -> "RootOfUnity":
        return _reduce(self.modulus, self.residue * k)


def _reduce(m: int, a: int) -> RootOfUnity:
    a %= m
    g = gcd(a, m)
    return RootOfUnity(m // g, (a // g) % (m // g))


IDENTITY = RootOfUnity(1, 0)


def make_root(m: int, a: int, params: GroundParams) -> RootOfUnity:
    """The root zeta_m**a, normalized so that its modulus is its exact order."""
    if m < 1:
        raise ParameterError(f"modulus must be positive, got {m}")
    if m % params.p == 0:
        raise ParameterError(f"modulus {m} is divisible by p = {params.p}")
    return _reduce(m, a)


def frobenius_step(sigma: RootOfUnity, params: GroundParams) -> RootOfUnity:
    m = sigma.modulus
    return RootOfUnity(m, sigma.residue * params.multiplier(m) % m)


def _orbit_residues(a: int, m: int, mult: int) -> list[int]:
    out = [a]
    x = a * mult % m
    while x != a:
        out.append(x)
        x = x * mult % m
    return out


@dataclass(frozen=True)
class FrobeniusOrbit:
    """An orbit of x -> x**(eta q) on roots of a fixed order.

    `residue` is the minimum residue in the orbit and `degree` its length.
    """

    params: GroundParams
    modulus: int
    residue: int
    degree: int

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.degree, self.modulus, self.residue)

    @property
    def root(self) -> RootOfUnity:
        return RootOfUnity(self.modulus, self.residue)

    def residues(self) -> frozenset[int]:
        m = self.modulus
        return frozenset(_orbit_residues(self.residue, m, self.params.multiplier(m)))

    def contains(self, sigma: RootOfUnity) -> bool:
        return sigma.modulus == self.modulus and sigma.residue in self.residues()

    def is_ell_prime(self) -> bool:
        ell = self.params.ell
        return ell is None or self.modulus % ell != 0

    def __repr__(self):
        return f"Orbit(m={self.modulus}, a={self.residue}, d={self.degree})"


def orbit_of(sigma: RootOfUnity, params: GroundParams) -> FrobeniusOrbit:
    m = sigma.modulus
    res = _orbit_residues(sigma.residue, m, params.multiplier(m))
    return FrobeniusOrbit(params, m, min(res), len(res))


def degree_of_root(sigma: RootOfUnity, params: GroundParams) -> int:
    """Least d with sigma**((eta q)**d - 1) = 1."""
    return mult_order(params.eta_q, sigma.modulus)


def degree_via_lcm(sigma: RootOfUnity, params: GroundParams) -> int:
    """Orbit length from the prime factorization of the (odd) order.

    For each p_i**t_i exactly dividing the order: e_i = ord(eta q mod p_i),
    a_i = v_{p_i}((eta q)**e_i - 1), and the degree is
    lcm_i(e_i * p_i**max(t_i - a_i, 0)).
    """
    m = sigma.modulus
    if m % 2 == 0:
        raise ParameterError(f"degree_via_lcm needs an odd-order root, got order {m}")
    x = params.eta_q
    d = 1
    for prime, t in factorint(m).items():
        e_i = mult_order(x, prime)
        a_i = valuation(x ** e_i - 1, prime)
        d = lcm(d, e_i * prime ** max(t - a_i, 0))
    return d


def orbits_of_modulus(m: int, params: GroundParams) -> list[FrobeniusOrbit]:
    """All orbits of roots of exact order m, sorted by canonical residue."""
    mult = params.multiplier(m)
    if m == 1:
        return [FrobeniusOrbit(params, 1, 0, 1)]
    seen = bytearray(m)
    out = []
    for a in range(1, m):
        if seen[a] or gcd(a, m) != 1:
            continue
        res = _orbit_residues(a, m, mult)
        for x in res:
            seen[x] = 1
        out.append(FrobeniusOrbit(params, m, a, len(res)))
    return out


@lru_cache(maxsize=256)
def enumerate_orbits(params: GroundParams, n: int, ell_prime_only: bool = False) -> tuple[FrobeniusOrbit, ...]:
    """All orbits of degree <= n, sorted by (degree, modulus, residue).

    The roots of degree dividing d are exactly the roots of order dividing
    |(eta q)**d - 1|, so each degree-d modulus is a divisor of that number.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if ell_prime_only and params.ell is None:
        raise ParameterError("ell-prime filtering needs ell")
    out = []
    for d in range(1, n + 1):
        big = abs(params.eta_q ** d - 1)
        check_guardrail(big)
        for m in divisors(big):
            if ell_prime_only and m % params.ell == 0:
                continue
            if mult_order(params.eta_q, m) != d:
                continue
            out.extend(orbits_of_modulus(m, params))
    out.sort(key=lambda g: g.key)
    return tuple(out)


@dataclass(frozen=True)
class CenterElement:
    """An element z of Z = {z : z**(q - eta) = 1}."""

    root: RootOfUnity

    def is_odd(self) -> bool:
        return self.root.modulus % 2 == 1


def center_element(root: RootOfUnity, params: GroundParams) -> CenterElement:
    if params.center_order % root.modulus:
        raise ParameterError(f"root of order {root.modulus} is not in Z (|Z| = {params.center_order})")
    return CenterElement(root)


def center_elements(params: GroundParams, order_divisor: int | None = None) -> list[CenterElement]:
    """All z in Z with o(z) dividing `order_divisor` (default: all of Z)."""
    c = params.center_order if order_divisor is None else order_divisor
    if params.center_order % c:
        raise ParameterError(f"{c} does not divide q - eta = {params.center_order}")
    return [CenterElement(_reduce(c, k)) for k in range(c)]


def odd_center_elements(params: GroundParams) -> list[CenterElement]:
    """O_2'(Z)."""
    return center_elements(params, odd_part(params.center_order))


def z_act(z: CenterElement, gamma: FrobeniusOrbit) -> FrobeniusOrbit:
    """The orbit whose roots are the roots of gamma multiplied by z."""
    return orbit_of(z.root * gamma.root, gamma.params)


def fixes(z: CenterElement, gamma: FrobeniusOrbit) -> bool:
    return gamma.contains(z.root * gamma.root)


def e_of_orbit(gamma: FrobeniusOrbit, ell: int) -> int:
    """Multiplicative order of (eta q)**d modulo ell; always 1 for ell = 2."""
    params = gamma.params
    if params.q % ell == 0:
        raise ParameterError(f"ell = {ell} divides q = {params.q}")
    if ell == 2:
        return 1
    return mult_order(pow(params.eta_q, gamma.degree, ell), ell)


@dataclass(frozen=True)
class RefinedOrbit:
    """The root set of Gamma_(alpha): an orbit of x -> x**((eta q)**(2**alpha))."""

    base: FrobeniusOrbit
    alpha: int
    residues: frozenset[int]

    @property
    def modulus(self) -> int:
        return self.base.modulus

    @property
    def degree(self) -> int:
        return len(self.residues)

    def recover(self) -> FrobeniusOrbit:
        """Phi_alpha: the full eta q-orbit of any root."""
        return orbit_of(RootOfUnity(self.modulus, min(self.residues)), self.base.params)

    def fixed_by(self, z: CenterElement) -> bool:
        moved = z.root * RootOfUnity(self.modulus, min(self.residues))
        return moved.modulus == self.modulus and moved.residue in self.residues


def gamma_alpha(gamma: FrobeniusOrbit, alpha: int) -> RefinedOrbit:
    if alpha < 0:
        raise ParameterError(f"alpha must be non-negative, got {alpha}")
    m = gamma.modulus
    mult = pow(gamma.params.multiplier(m), 2 ** alpha, m) if m > 1 else 0
    return RefinedOrbit(gamma, alpha, frozenset(_orbit_residues(gamma.residue, m, mult)))

"""Blocks of GL_n(eta q): labels, per-block counts, and 2-defect groups.

A block is labelled by a semisimple ell'-label s (multiplicities m_Gamma on
orbits) and, for each elementary divisor, an e_Gamma-core lambda_Gamma of
a partition of m_Gamma.  Brauer characters in the block are labelled by
partitions of m_Gamma with core lambda_Gamma; weights by e_Gamma-tuples of
partitions of total size w_Gamma = (m_Gamma - |lambda_Gamma|) / e_Gamma.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Optional

from slblocks.orbits import FrobeniusOrbit, e_of_orbit, enumerate_orbits
from slblocks.params import GroundParams, ParameterError, two_part, valuation
from slblocks.partitions import (
    Partition,
    cores_for,
    count_multipartitions,
    partitions_with_core,
    two_adic_decomposition,
)


@dataclass(frozen=True)
class SemisimpleLabel:
    """Sorted (orbit, multiplicity) pairs with sum of m * d equal to n."""

    entries: tuple[tuple[FrobeniusOrbit, int], ...]

    def __post_init__(self):
        keys = [g.key for g, _ in self.entries]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ParameterError("semisimple label entries must be sorted and distinct")
        if any(m < 1 for _, m in self.entries):
            raise ParameterError("multiplicities must be positive")

    @classmethod
    def from_pairs(cls, pairs) -> "SemisimpleLabel":
        merged: dict[FrobeniusOrbit, int] = {}
        for g, m in pairs:
            merged[g] = merged.get(g, 0) + m
        return cls(tuple(sorted(merged.items(), key=lambda gm: gm[0].key)))

    @property
    def n(self) -> int:
        return sum(g.degree * m for g, m in self.entries)

    @property
    def params(self) -> GroundParams:
        return self.entries[0][0].params

    @property
    def key(self):
        return tuple((g.key, m) for g, m in self.entries)


@dataclass(frozen=True)
class IrrLabel:
    s: SemisimpleLabel
    mu: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.mu) != len(self.s.entries):
            raise ParameterError("one partition per elementary divisor is required")
        for (g, m), part in zip(self.s.entries, self.mu):
            if sum(part) != m:
                raise ParameterError(f"partition {part} does not have size {m}")

    @property
    def key(self):
        return tuple((g.key, m, part) for (g, m), part in zip(self.s.entries, self.mu))


@dataclass(frozen=True)
class BlockLabel:
    s: SemisimpleLabel
    cores: tuple[Partition, ...]

    @property
    def params(self) -> GroundParams:
        return self.s.params

    @property
    def ell(self) -> int:
        return self.params.ell

    def e_values(self) -> tuple[int, ...]:
        return tuple(e_of_orbit(g, self.ell) for g, _ in self.s.entries)

    def weights(self) -> tuple[int, ...]:
        return tuple(
            (m - sum(c)) // e for (_, m), c, e in zip(self.s.entries, self.cores, self.e_values())
        )

    @property
    def key(self):
        return (self.s.key, self.cores)


def enumerate_semisimple_labels(n: int, params: GroundParams, ell_prime_only: bool = False) -> list[SemisimpleLabel]:
    orbits = enumerate_orbits(params, n, ell_prime_only)
    out: list[SemisimpleLabel] = []

    def rec(start: int, remaining: int, acc: list):
        if remaining == 0:
            out.append(SemisimpleLabel(tuple(acc)))
            return
        for i in range(start, len(orbits)):
            g = orbits[i]
            if g.degree > remaining:
                break
            for m in range(1, remaining // g.degree + 1):
                acc.append((g, m))
                rec(i + 1, remaining - m * g.degree, acc)
                acc.pop()

    rec(0, n, [])
    out.sort(key=lambda s: s.key)
    return out


def blocks_of_label(s: SemisimpleLabel) -> Iterator[BlockLabel]:
    ell = s.params.ell
    choices = [cores_for(m, e_of_orbit(g, ell)) for g, m in s.entries]

    def rec(i: int, acc: list):
        if i == len(choices):
            yield BlockLabel(s, tuple(acc))
            return
        for c in choices[i]:
            acc.append(c)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def validate_block(block: BlockLabel) -> None:
    if len(block.cores) != len(block.s.entries):
        raise ParameterError("one core per elementary divisor is required")
    for (g, m), core, e in zip(block.s.entries, block.cores, block.e_values()):
        if not g.is_ell_prime():
            raise ParameterError(f"{g} does not consist of ell'-elements")
        if core not in cores_for(m, e):
            raise ParameterError(f"{core} is not an admissible {e}-core for multiplicity {m}")


def enumerate_blocks(n: int, params: GroundParams) -> list[BlockLabel]:
    if params.ell is None:
        raise ParameterError("enumerating blocks needs ell")
    return [b for s in enumerate_semisimple_labels(n, params, True) for b in blocks_of_label(s)]


def ibr_count(block: BlockLabel) -> int:
    """Brauer characters in the block, by listing partitions with the given cores."""
    return prod(
        len(partitions_with_core(m, e, c))
        for (_, m), c, e in zip(block.s.entries, block.cores, block.e_values())
    )


def alp_count(block: BlockLabel) -> int:
    """Weights in the block, as a product of multipartition counts."""
    return prod(count_multipartitions(e, w) for e, w in zip(block.e_values(), block.weights()))


def gl_order(m: int, big_q: int) -> int:
    """|GL_m(Q)| for a signed Q; negative Q gives the unitary group GU_m(|Q|)."""
    out = abs(big_q) ** (m * (m - 1) // 2)
    for i in range(1, m + 1):
        out *= abs(big_q ** i - 1)
    return out


def centralizer_order(s: SemisimpleLabel) -> int:
    eq = s.params.eta_q
    return prod(gl_order(m, eq ** g.degree) for g, m in s.entries)


# -- 2-defect groups ---------------------------------------------------------


@dataclass(frozen=True)
class DefectComponent:
    name: str
    order: int


@dataclass(frozen=True)
class DivisorDefect:
    """Sylow 2-subgroup of C_Gamma(s) = GL_{m_Gamma(s)}((eta q)**d_Gamma)."""

    case: str
    components: tuple[DefectComponent, ...]


@dataclass(frozen=True)
class DefectGroupDescriptor:
    divisors: tuple[DivisorDefect, ...]

    @property
    def components(self) -> tuple[DefectComponent, ...]:
        return tuple(c for d in self.divisors for c in d.components)

    @property
    def order(self) -> int:
        return prod(c.order for c in self.components)

    def symbol(self) -> str:
        return " x ".join(c.name for c in self.components)


def _ones(k: int) -> str:
    return "" if k == 0 else ",1" if k == 1 else f",1^{k}"


def divisor_defect(gamma: FrobeniusOrbit, mult: int) -> DivisorDefect:
    params = gamma.params
    q, eta = params.q, params.eta
    alpha = valuation(gamma.degree, 2)
    odd = gamma.degree >> alpha
    big_q = params.eta_q ** gamma.degree

    def sylow(beta: int) -> int:
        return two_part(gl_order(2 ** beta, big_q))

    if (q - eta) % 4 == 0 or alpha >= 1:
        comps = tuple(
            DefectComponent(f"R~_{{{odd},{alpha},0{_ones(b)}}}", sylow(b))
            for b in two_adic_decomposition(mult)
        )
        return DivisorDefect("(1)", comps)
    if mult % 2 == 0:
        comps = tuple(
            DefectComponent(f"S~_{{{odd},1,0{_ones(b - 1)}}}", sylow(b))
            for b in two_adic_decomposition(mult)
        )
        return DivisorDefect("(2i)", comps)
    comps = (DefectComponent(f"R_{{{odd},0}}", 2),)
    if mult > 1:
        comps += tuple(
            DefectComponent(f"S~_{{{odd},1,0{_ones(b - 1)}}}", sylow(b))
            for b in two_adic_decomposition(mult - 1)
        )
    return DivisorDefect("(2ii)", comps)


def defect_group_2(block: BlockLabel) -> DefectGroupDescriptor:
    block.params.require_ell_two()
    return DefectGroupDescriptor(tuple(divisor_defect(g, m) for g, m in block.s.entries))


@dataclass(frozen=True)
class ExceptionalCaseReport:
    """When O_2(N(R)) differs from the defect group R: the replacement R' and its data."""

    case: Optional[str]
    r_prime: str
    normalizer_quotient: str = ""
    centralizer: str = ""


def two_adic_a(q: int) -> int:
    """The a with 2**(a+1) = (q**2 - 1)_2."""
    return valuation(q * q - 1, 2) - 1


def exceptional_case(block: BlockLabel) -> ExceptionalCaseReport:
    params = block.params
    params.require_ell_two()
    defect = defect_group_2(block)
    q, eta, n = params.q, params.eta, block.s.n
    eq = f"{params.eta_q}"
    if len(block.s.entries) == 1:
        gamma, mult = block.s.entries[0]
        alpha = valuation(gamma.degree, 2)
        odd = gamma.degree >> alpha
        a = two_adic_a(q)
        minus = (q - eta) % 4 == 0
        plus = (q + eta) % 4 == 0
        if minus and alpha > 0 and mult == 1 and n == gamma.degree:
            ap = min(a, alpha)
            return ExceptionalCaseReport(
                "i",
                f"R_{{{odd * 2 ** ap},{alpha - ap}}}",
                f"C~' <tau>, tau acting as F_{{{eq}}}",
                f"GL_{{{odd * 2 ** ap}}}(({eq})^{{{2 ** (alpha - ap)}}})",
            )
        if minus and a == 2 and alpha == 0 and mult == 2 and n == 2 * gamma.degree:
            return ExceptionalCaseReport(
                "ii",
                f"R_{{{odd},0,1}}",
                "C~'R'/R' x Sp_2(2)",
                f"GL_{{{odd}}}({eq}) (x) I_2",
            )
        if plus and alpha > 1 and mult == 1 and n == gamma.degree:
            return ExceptionalCaseReport(
                "iii",
                f"R_{{{2 * odd},{alpha - 1}}}",
                f"C~ <tau>, tau acting as F_{{{eq}}}",
                f"GL_{{{2 * odd}}}(({eq})^{{{2 ** (alpha - 1)}}})",
            )
        if plus and a == 2 and alpha == 0 and mult == 2 and n == 2 * gamma.degree:
            return ExceptionalCaseReport(
                "iv",
                f"R^-_{{{odd},0,1}}",
                "C~'R'/R' x GO^-_2(2)",
                f"GL_{{{odd}}}({eq}) (x) I_2",
            )
    return ExceptionalCaseReport(None, defect.symbol())

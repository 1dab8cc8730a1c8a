"""Descent from GL_n(eta q) to SL_n(eta q) through the center action.

The center Z = mu_{q-eta} acts on labels by multiplying every root of every
elementary divisor.  Restriction counts for characters and the number of
SL 2-blocks covered by a GL 2-block are stabilizer sizes for this action.
"""

from __future__ import annotations

from dataclasses import dataclass

from slblocks.atlas import (
    BlockLabel,
    IrrLabel,
    SemisimpleLabel,
    enumerate_semisimple_labels,
)
from slblocks.orbits import (
    CenterElement,
    FrobeniusOrbit,
    center_elements,
    fixes,
    gamma_alpha,
    odd_center_elements,
    z_act,
)
from slblocks.params import GroundParams, ParameterError, valuation


def transport_label(z: CenterElement, chi: IrrLabel) -> IrrLabel:
    moved = sorted(
        ((z_act(z, g), m, mu) for (g, m), mu in zip(chi.s.entries, chi.mu)),
        key=lambda t: t[0].key,
    )
    return IrrLabel(SemisimpleLabel(tuple((g, m) for g, m, _ in moved)), tuple(mu for _, _, mu in moved))


def kappa_char(chi: IrrLabel, index_divisor: int) -> int:
    """Irreducible constituents of the restriction of chi to the subgroup of index `index_divisor`.

    Counts the z in Z with o(z) | index_divisor that fix the label (s, mu).
    """
    params = chi.s.params
    if index_divisor < 1 or params.center_order % index_divisor:
        raise ParameterError(f"index {index_divisor} does not divide q - eta = {params.center_order}")
    key = chi.key
    return sum(transport_label(z, chi).key == key for z in center_elements(params, index_divisor))


@dataclass(frozen=True)
class AdmissibleBlockSymbol:
    """[([sigma_1], m_1), ..., ([sigma_a], m_a)] with odd-order roots, sorted."""

    pairs: tuple[tuple[FrobeniusOrbit, int], ...]

    def __post_init__(self):
        keys = [g.key for g, _ in self.pairs]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ParameterError("symbol pairs must be sorted with distinct orbits")
        for g, m in self.pairs:
            if g.modulus % 2 == 0:
                raise ParameterError(f"{g} does not consist of 2'-elements")
            if m < 1:
                raise ParameterError("multiplicities must be positive")

    @property
    def params(self) -> GroundParams:
        return self.pairs[0][0].params

    @property
    def n(self) -> int:
        return sum(g.degree * m for g, m in self.pairs)

    @property
    def key(self):
        return tuple((g.key, m) for g, m in self.pairs)

    def act(self, z: CenterElement) -> "AdmissibleBlockSymbol":
        moved = sorted(((z_act(z, g), m) for g, m in self.pairs), key=lambda gm: gm[0].key)
        return AdmissibleBlockSymbol(tuple(moved))


def symbol_of_block(block: BlockLabel) -> AdmissibleBlockSymbol:
    block.params.require_ell_two()
    return AdmissibleBlockSymbol(block.s.entries)


def block_of_symbol(symbol: AdmissibleBlockSymbol) -> BlockLabel:
    symbol.params.require_ell_two()
    return BlockLabel(SemisimpleLabel(symbol.pairs), tuple(() for _ in symbol.pairs))


def kappa_block_2(symbol: AdmissibleBlockSymbol) -> int:
    """Number of SL 2-blocks covered by the GL 2-block of `symbol`.

    This is the number of z in O_2'(Z) with z.[sigma_i] = [sigma_i] for all i.
    """
    params = symbol.params
    params.require_ell_two()
    return sum(
        all(fixes(z, g) for g, _ in symbol.pairs) for z in odd_center_elements(params)
    )


def kappa_block_2_refined(symbol: AdmissibleBlockSymbol, extra: int = 0) -> int:
    """Same count, testing stability of every Gamma_(alpha) for alpha <= v_2(d) + extra."""
    params = symbol.params
    params.require_ell_two()
    refined = [
        gamma_alpha(g, alpha)
        for g, _ in symbol.pairs
        for alpha in range(valuation(g.degree, 2) + extra + 1)
    ]
    return sum(all(r.fixed_by(z) for r in refined) for z in odd_center_elements(params))


def center_orbit_reps(symbols) -> list[tuple[AdmissibleBlockSymbol, int]]:
    """Split symbols into O_2'(Z)-orbits; returns (minimal member, orbit size) pairs."""
    symbols = list(symbols)
    if not symbols:
        return []
    zs = odd_center_elements(symbols[0].params)
    seen: set = set()
    out = []
    for sym in sorted(symbols, key=lambda b: b.key):
        if sym.key in seen:
            continue
        orbit = {sym.act(z).key: sym.act(z) for z in zs}
        seen.update(orbit)
        rep = min(orbit.values(), key=lambda b: b.key)
        out.append((rep, len(orbit)))
    out.sort(key=lambda t: t[0].key)
    return out


@dataclass(frozen=True)
class InventoryEntry:
    representative: AdmissibleBlockSymbol
    orbit_size: int
    kappa: int


@dataclass(frozen=True)
class SLInventory:
    params: GroundParams
    n: int
    orbits: tuple[InventoryEntry, ...]

    @property
    def total_sl_blocks(self) -> int:
        return sum(e.kappa for e in self.orbits)

    def block_names(self) -> list[str]:
        """(B_b)_1, ..., (B_b)_kappa for each representative b, positionally."""
        return [f"(B_{i})_{j}" for i, e in enumerate(self.orbits) for j in range(1, e.kappa + 1)]


def admissible_symbols(n: int, params: GroundParams) -> list[AdmissibleBlockSymbol]:
    params.require_ell_two()
    return [AdmissibleBlockSymbol(s.entries) for s in enumerate_semisimple_labels(n, params, True)]


def sl_two_block_inventory(n: int, params: GroundParams) -> SLInventory:
    if params.ell is None:
        params = params.with_ell(2)
    params.require_ell_two()
    if n < 2:
        raise ParameterError(f"SL inventory needs n >= 2, got {n}")
    reps = center_orbit_reps(admissible_symbols(n, params))
    return SLInventory(
        params, n, tuple(InventoryEntry(rep, size, kappa_block_2(rep)) for rep, size in reps)
    )


def stabilizer_size(symbol: AdmissibleBlockSymbol) -> int:
    """|{z in O_2'(Z) : z.b = b}|, allowing z to permute the pairs."""
    return sum(symbol.act(z).key == symbol.key for z in odd_center_elements(symbol.params))

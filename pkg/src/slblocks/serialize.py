"""Stable JSON shapes for labels and reports, and the CLI label syntax.

Counts and group orders are written as decimal strings; moduli, residues,
degrees and multiplicities as JSON integers.
"""

from __future__ import annotations

from math import gcd

from slblocks.atlas import (
    BlockLabel,
    SemisimpleLabel,
    alp_count,
    centralizer_order,
    defect_group_2,
    exceptional_case,
    ibr_count,
    validate_block,
)
from slblocks.descent import AdmissibleBlockSymbol, SLInventory
from slblocks.orbits import FrobeniusOrbit, e_of_orbit, make_root, orbit_of
from slblocks.params import GroundParams, ParameterError
from slblocks.partitions import check_partition


def params_to_dict(params: GroundParams) -> dict:
    out = {"q": params.q, "eta": params.eta}
    if params.ell is not None:
        out["ell"] = params.ell
    return out


def orbit_to_dict(g: FrobeniusOrbit) -> dict:
    return {"modulus": g.modulus, "residue": g.residue, "degree": g.degree}


def orbit_from_dict(d: dict, params: GroundParams) -> FrobeniusOrbit:
    g = orbit_of(make_root(int(d["modulus"]), int(d["residue"]), params), params)
    if g.modulus != int(d["modulus"]) or "degree" in d and g.degree != int(d["degree"]):
        raise ParameterError(f"orbit data {d} is inconsistent with q={params.q}, eta={params.eta}")
    return g


def pairs_to_list(pairs) -> list[dict]:
    return [dict(orbit_to_dict(g), multiplicity=m) for g, m in pairs]


def pairs_from_list(items, params: GroundParams) -> tuple:
    pairs = [(orbit_from_dict(d, params), int(d["multiplicity"])) for d in items]
    keys = [g.key for g, _ in pairs]
    if len(set(keys)) != len(keys):
        raise ParameterError("an orbit occurs twice in a label")
    return tuple(sorted(pairs, key=lambda gm: gm[0].key))


def block_to_dict(block: BlockLabel) -> dict:
    params = block.params
    entries = []
    for (g, m), core, w in zip(block.s.entries, block.cores, block.weights()):
        entries.append(
            dict(orbit_to_dict(g), multiplicity=m, e=e_of_orbit(g, params.ell), core=list(core), weight=w)
        )
    out = {
        "s": entries,
        "ibr_count": str(ibr_count(block)),
        "alp_count": str(alp_count(block)),
        "centralizer_order": str(centralizer_order(block.s)),
    }
    if params.ell == 2:
        defect = defect_group_2(block)
        out["defect_group"] = {
            "order": str(defect.order),
            "divisors": [
                {"case": dv.case, "components": [{"name": c.name, "order": str(c.order)} for c in dv.components]}
                for dv in defect.divisors
            ],
        }
        exc = exceptional_case(block)
        out["exceptional"] = {
            "case": exc.case,
            "r_prime": exc.r_prime,
            "normalizer_quotient": exc.normalizer_quotient,
            "centralizer": exc.centralizer,
        }
    else:
        out["defect_group"] = "unsupported"
    return out


def block_from_dict(d: dict, params: GroundParams) -> BlockLabel:
    items = sorted(
        ((orbit_from_dict(x, params), int(x["multiplicity"]), check_partition(x.get("core", []))) for x in d["s"]),
        key=lambda t: t[0].key,
    )
    block = BlockLabel(SemisimpleLabel(tuple((g, m) for g, m, _ in items)), tuple(c for _, _, c in items))
    validate_block(block)
    return block


def blocks_report(n: int, params: GroundParams, blocks) -> dict:
    return dict(params_to_dict(params), n=n, blocks=[block_to_dict(b) for b in blocks])


def symbol_to_list(symbol: AdmissibleBlockSymbol) -> list[dict]:
    return pairs_to_list(symbol.pairs)


def symbol_from_list(items, params: GroundParams) -> AdmissibleBlockSymbol:
    return AdmissibleBlockSymbol(pairs_from_list(items, params))


def inventory_to_dict(inv: SLInventory) -> dict:
    return {
        "n": inv.n,
        "q": inv.params.q,
        "eta": inv.params.eta,
        "orbits": [
            {"representative": symbol_to_list(e.representative), "orbit_size": e.orbit_size, "kappa": e.kappa}
            for e in inv.orbits
        ],
        "total_sl_blocks": inv.total_sl_blocks,
    }


# -- CLI syntax ---------------------------------------------------------------


def parse_semisimple(text: str, params: GroundParams) -> SemisimpleLabel:
    """`modulus:residue:multiplicity` triples separated by commas; any root of each orbit may be given."""
    pairs = []
    for chunk in text.split(","):
        fields = chunk.strip().split(":")
        if len(fields) != 3:
            raise ParameterError(f"malformed label entry {chunk!r}; expected modulus:residue:multiplicity")
        try:
            m, a, mult = (int(x) for x in fields)
        except ValueError:
            raise ParameterError(f"malformed label entry {chunk!r}; fields must be integers")
        if m > 1 and gcd(a, m) != 1:
            raise ParameterError(f"residue {a} is not a unit modulo {m}")
        root = make_root(m, a, params)
        if mult < 1:
            raise ParameterError(f"multiplicity must be positive in {chunk!r}")
        pairs.append((orbit_of(root, params), mult))
    if len({g.key for g, _ in pairs}) != len(pairs):
        raise ParameterError("an orbit occurs twice in the label")
    return SemisimpleLabel(tuple(sorted(pairs, key=lambda gm: gm[0].key)))


def parse_partitions(text: str) -> list[tuple[int, ...]]:
    """Partitions separated by commas, parts by dots: `2.1,1` is ((2, 1), (1,))."""
    out = []
    for chunk in text.split(","):
        try:
            parts = [int(x) for x in chunk.strip().split(".")]
        except ValueError:
            raise ParameterError(f"malformed partition {chunk!r}")
        try:
            out.append(check_partition(parts))
        except ValueError as exc:
            raise ParameterError(str(exc))
    return out

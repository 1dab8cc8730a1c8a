"""Command-line interface: polys, blocks, sl-blocks, restrict, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guardrail.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from slblocks.atlas import (
    IrrLabel,
    alp_count,
    defect_group_2,
    enumerate_blocks,
    exceptional_case,
    ibr_count,
)
from slblocks.descent import kappa_char, sl_two_block_inventory
from slblocks.oracles import run_suite
from slblocks.orbits import e_of_orbit, enumerate_orbits
from slblocks.params import GroundParams, GuardrailError, ParameterError
from slblocks.serialize import (
    blocks_report,
    inventory_to_dict,
    orbit_to_dict,
    pairs_to_list,
    params_to_dict,
    parse_partitions,
    parse_semisimple,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARDRAIL = 0, 1, 2, 3

LABEL_HELP = (
    "semisimple label as comma-separated modulus:residue:multiplicity triples, "
    "one per elementary divisor; the residue may be any root of the orbit "
    "(e.g. '9:1:1' or '1:0:2,3:1:1')"
)


def eta_arg(text: str) -> int:
    table = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}
    if text not in table:
        raise argparse.ArgumentTypeError(f"eta must be +1 or -1, got {text!r}")
    return table[text]


def seed_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed range must look like A:B, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty seed range {text!r}")
    return range(lo, hi)


def dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def render_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def label_text(s) -> str:
    return ",".join(f"{g.modulus}:{g.residue}:{m}" for g, m in s.entries)


def cmd_polys(args) -> str:
    params = GroundParams.from_q(args.q, args.eta, args.ell)
    if args.ell_prime and args.ell is None:
        raise ParameterError("--ell-prime needs --ell")
    orbits = enumerate_orbits(params, args.max_degree, args.ell_prime)
    rows = []
    for g in orbits:
        row = orbit_to_dict(g)
        if args.ell is not None:
            row["e"] = e_of_orbit(g, args.ell)
        rows.append(row)
    if args.format == "json":
        return dump(dict(params_to_dict(params), max_degree=args.max_degree, polys=rows))
    header = list(rows[0]) if rows else ["modulus", "residue", "degree"]
    return render_table(header, [list(r.values()) for r in rows])


def cmd_blocks(args) -> str:
    params = GroundParams.from_q(args.q, args.eta, args.ell)
    blocks = enumerate_blocks(args.n, params)
    if args.format == "json":
        return dump(blocks_report(args.n, params, blocks))
    header = ["label", "cores", "ibr", "alp"]
    if params.ell == 2:
        header += ["defect_order", "defect_group", "exceptional"]
    rows = []
    for b in blocks:
        row = [label_text(b.s), "|".join(".".join(map(str, c)) or "-" for c in b.cores), ibr_count(b), alp_count(b)]
        if params.ell == 2:
            defect = defect_group_2(b)
            row += [defect.order, defect.symbol(), exceptional_case(b).case or "none"]
        rows.append(row)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return render_table(header, rows)


def cmd_sl_blocks(args) -> str:
    params = GroundParams.from_q(args.q, args.eta, 2)
    inv = sl_two_block_inventory(args.n, params)
    if args.format == "json":
        return dump(inventory_to_dict(inv))
    rows = [
        [",".join(f"{g.modulus}:{g.residue}:{m}" for g, m in e.representative.pairs), e.orbit_size, e.kappa]
        for e in inv.orbits
    ]
    return render_table(["representative", "orbit_size", "kappa"], rows) + f"\ntotal_sl_blocks {inv.total_sl_blocks}"


def cmd_restrict(args) -> str:
    params = GroundParams.from_q(args.q, args.eta)
    s = parse_semisimple(args.s, params)
    if s.n != args.n:
        raise ParameterError(f"label has rank {s.n}, expected n = {args.n}")
    mu = parse_partitions(args.mu)
    # --mu follows the order of --s; the label itself is stored sorted
    given = [parse_semisimple(chunk, params).entries[0][0] for chunk in args.s.split(",")]
    if len(mu) != len(given):
        raise ParameterError(f"--mu has {len(mu)} partitions for {len(given)} elementary divisors")
    by_orbit = dict(zip(given, mu))
    chi = IrrLabel(s, tuple(by_orbit[g] for g, _ in s.entries))
    value = kappa_char(chi, args.index)
    if args.format == "json":
        return dump(
            dict(
                params_to_dict(params),
                n=args.n,
                s=pairs_to_list(s.entries),
                mu=[list(p) for p in chi.mu],
                index=args.index,
                kappa=value,
            )
        )
    return str(value)


def cmd_verify(args) -> tuple[str, int]:
    reports = run_suite(args.suite, args.seed_range, args.jobs)
    passed = all(r.passed for r in reports)
    out = dump({"suite": args.suite, "passed": passed, "checks": [r.to_dict() for r in reports]})
    if not passed:
        first = next(r for r in reports if not r.passed)
        print(f"counterexample ({first.name}): {first.counterexample}", file=sys.stderr)
    return out, EXIT_OK if passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slblocks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ground(p, ell=False, ell_required=False):
        p.add_argument("--q", type=int, required=True, help="prime power q")
        p.add_argument("--eta", type=eta_arg, default=1, help="+1 for GL/SL, -1 for GU/SU")
        if ell:
            p.add_argument("--ell", type=int, required=ell_required, help="modular prime ell not dividing q")

    p = sub.add_parser("polys", help="list elementary divisors (Frobenius orbits) up to a degree")
    ground(p, ell=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--ell-prime", action="store_true", help="only orbits of ell'-order roots")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("blocks", help="ell-blocks of GL_n(eta q) with IBr and weight counts")
    p.add_argument("--n", type=int, required=True)
    ground(p, ell=True, ell_required=True)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    p = sub.add_parser("sl-blocks", help="2-block inventory of SL_n(eta q)")
    p.add_argument("--n", type=int, required=True)
    ground(p)
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("restrict", help="constituents of a GL character restricted to an intermediate subgroup")
    p.add_argument("--n", type=int, required=True)
    ground(p)
    p.add_argument("--s", required=True, help=LABEL_HELP)
    p.add_argument("--mu", required=True, help="one partition per --s entry, comma-separated, parts joined by '.' (e.g. '2.1,1')")
    p.add_argument("--index", type=int, required=True, help="index of the subgroup, a divisor of q - eta")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the brute-force oracle suites")
    p.add_argument("--suite", choices=("core", "full"), default="core")
    p.add_argument("--seed-range", type=seed_range, default=range(0, 20), help="seeds A:B for randomized checks")
    p.add_argument("--jobs", type=int, default=1)
    return parser


COMMANDS = {
    "polys": cmd_polys,
    "blocks": cmd_blocks,
    "sl-blocks": cmd_sl_blocks,
    "restrict": cmd_restrict,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except GuardrailError as exc:
        print(f"guardrail: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())

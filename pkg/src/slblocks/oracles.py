"""Brute-force oracles and verification sweeps.

These deliberately avoid the counting paths of `atlas` and `descent`:
root sets are materialized as explicit residue sets, orbit lengths come
from literal power iteration, and class counts from generating functions.
Only orbit and partition enumeration are shared.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from math import gcd, lcm
from typing import Callable, Optional

import numpy as np

from slblocks.atlas import (
    alp_count,
    centralizer_order,
    defect_group_2,
    enumerate_blocks,
    exceptional_case,
    ibr_count,
)
from slblocks.descent import admissible_symbols, kappa_block_2, kappa_block_2_refined
from slblocks.orbits import RootOfUnity, degree_via_lcm, enumerate_orbits
from slblocks.params import GroundParams, ParameterError, odd_part, two_part, valuation
from slblocks.partitions import (
    count_multipartitions,
    count_partitions,
    e_core,
    e_quotient,
    from_core_and_quotient,
    is_core,
    partitions,
)


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: Optional[str] = None
    details: dict = field(default_factory=dict)

    def fail(self, message: str) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = message

    def to_dict(self) -> dict:
        return asdict(self)


# -- class counts --------------------------------------------------------------


def count_l_regular_classes(n: int, params: GroundParams) -> int:
    """ell-regular classes of GL_n(eta q): ell'-semisimple classes times unipotent classes of centralizers.

    Sums prod_Gamma p(m_Gamma) over multiplicity maps, by a knapsack over
    orbit degrees that never builds block labels.
    """
    orbits = enumerate_orbits(params, n, params.ell is not None)
    by_degree = [0] * (n + 1)
    for g in orbits:
        by_degree[g.degree] += 1
    # poly[k] = sum over multiplicity maps of total degree k of prod p(m)
    poly = [1] + [0] * n
    for d in range(1, n + 1):
        # one factor sum_m p(m) x^{m d} per orbit of degree d
        factor = [0] * (n + 1)
        for m in range(0, n // d + 1):
            factor[m * d] = count_partitions(m)
        for _ in range(by_degree[d]):
            poly = [sum(poly[i] * factor[k - i] for i in range(k + 1)) for k in range(n + 1)]
    return poly[n]


def class_count_generating_function(n: int, params: GroundParams) -> int:
    """Number of conjugacy classes of GL_n(eta q) from its generating function.

    prod_i (1 - x^i) / (1 - q x^i) for eta = +1 and prod_i (1 + x^i) / (1 - q x^i)
    for eta = -1.
    """
    q, eta = params.q, params.eta
    series = [1] + [0] * n
    for i in range(1, n + 1):
        series = [series[k] - (eta * series[k - i] if k >= i else 0) for k in range(n + 1)]
        # divide by 1 - q x^i
        for k in range(i, n + 1):
            series[k] += q * series[k - i]
    return series[n]


# -- kappa -------------------------------------------------------------------


def _explicit_roots(modulus: int, residue: int, mult: int) -> set[int]:
    out = {residue}
    x = residue * mult % modulus
    while x not in out:
        out.add(x)
        x = x * mult % modulus
    return out


def brute_kappa(symbol) -> int:
    """kappa by materializing every orbit and translating it by every odd central z."""
    params = symbol.params
    c = odd_part(params.center_order)
    orbits = [(g.modulus, _explicit_roots(g.modulus, g.residue, (params.eta_q) % g.modulus)) for g, _ in symbol.pairs]
    count = 0
    for k in range(c):
        ok = True
        for m, roots in orbits:
            big = lcm(m, c)
            lifted = {r * (big // m) % big for r in roots}
            shift = k * (big // c)
            if {(x + shift) % big for x in lifted} != lifted:
                ok = False
                break
        count += ok
    return count


# -- exhaustive identities -----------------------------------------------------


def brute_core_identity(m_max: int, e_max: int) -> CheckReport:
    """p(m) = sum over e-cores c of p_e((m - |c|)/e), plus core/quotient round trips."""
    rep = CheckReport("core_identity")
    for e in range(1, e_max + 1):
        for m in range(0, m_max + 1):
            parts = list(partitions(m))
            cores = {}
            for lam in parts:
                core = e_core(lam, e)
                if not is_core(core, e):
                    rep.fail(f"e_core({lam}, {e}) = {core} is not an {e}-core")
                cores[core] = cores.get(core, 0) + 1
                pair = e_quotient(lam, e)
                back = from_core_and_quotient(pair)
                if back != lam or sum(pair.core) + e * sum(map(sum, pair.quotient)) != m:
                    rep.fail(f"round trip failed for {lam}, e={e}: {pair} -> {back}")
                rep.cases += 1
            total = 0
            for core, cnt in cores.items():
                expected = count_multipartitions(e, (m - sum(core)) // e)
                if cnt != expected:
                    rep.fail(f"|partitions of {m} with {e}-core {core}| = {cnt} != p_{e} = {expected}")
                total += expected
            if total != count_partitions(m) or len(parts) != count_partitions(m):
                rep.fail(f"p({m}) = {count_partitions(m)} but core sum is {total} (e={e})")
    return rep


def power_iteration_orders(mult: int, moduli: np.ndarray) -> np.ndarray:
    """ord(mult mod m) for every m in `moduli`, by repeated multiplication."""
    moduli = moduli.astype(np.int64)
    base = np.mod(mult, moduli)
    target = np.mod(1, moduli)
    cur = base.copy()
    out = np.zeros_like(moduli)
    active = np.arange(len(moduli))
    k = 1
    while active.size:
        hit = cur[active] == target[active]
        out[active[hit]] = k
        active = active[~hit]
        cur[active] = cur[active] * base[active] % moduli[active]
        k += 1
    return out


def brute_orbit_degree(modulus_max: int, params: GroundParams) -> CheckReport:
    """lcm degree formula against literal power iteration, all odd moduli coprime to p."""
    rep = CheckReport("orbit_degree_lcm", details={"q": params.q, "eta": params.eta, "modulus_max": modulus_max})
    moduli = np.array([m for m in range(1, modulus_max + 1, 2) if m % params.p], dtype=np.int64)
    if moduli.size == 0:
        return rep
    orders = power_iteration_orders(params.eta_q, moduli)
    for m, d in zip(moduli.tolist(), orders.tolist()):
        got = degree_via_lcm(RootOfUnity(m, 1 % m), params)
        rep.cases += 1
        if got != d:
            rep.fail(f"q={params.q}, eta={params.eta}, m={m}: lcm formula {got} != orbit length {d}")
            break
    return rep


def brute_lemma_number_2_pow(modulus_max: int, params: GroundParams, extra: int = 2) -> CheckReport:
    """z fixes Gamma iff z fixes every Gamma_(alpha), over all odd-order orbits.

    Also checks the degree d / gcd(d, 2^alpha) of Gamma_(alpha), that it
    sits inside Gamma, and that it is constant for alpha >= v_2(d).
    """
    rep = CheckReport("lemma_two_power", details={"q": params.q, "eta": params.eta, "modulus_max": modulus_max})
    c = odd_part(params.center_order)
    eq = params.eta_q
    for m in range(1, modulus_max + 1, 2):
        if m % params.p == 0:
            continue
        mult = eq % m
        seen: set[int] = set()
        for a in range(m):
            if a in seen or gcd(a, m) != 1:
                continue
            gamma = _explicit_roots(m, a, mult)
            seen |= gamma
            d = len(gamma)
            top = valuation(d, 2)
            refined = []
            for alpha in range(top + extra + 1):
                r = _explicit_roots(m, a, pow(mult, 2 ** alpha, m))
                if len(r) != d // gcd(d, 2 ** alpha) or not r <= gamma:
                    rep.fail(f"m={m}, a={a}, alpha={alpha}: refined orbit has size {len(r)}")
                if alpha > top and r != refined[top]:
                    rep.fail(f"m={m}, a={a}: Gamma_({alpha}) != Gamma_({top})")
                refined.append(r)
            big = lcm(m, c)
            for k in range(c):
                shift = k * (big // c)

                def fixed(s):
                    lifted = {x * (big // m) % big for x in s}
                    return {(x + shift) % big for x in lifted} == lifted

                lhs = fixed(gamma)
                rhs = all(fixed(r) for r in refined)
                rep.cases += 1
                if lhs != rhs:
                    rep.fail(f"q={params.q}, eta={params.eta}, m={m}, a={a}, z=zeta_{c}^{k}: {lhs} vs {rhs}")
    return rep


def root_count_identity(params: GroundParams, d_max: int) -> CheckReport:
    """sum of d_Gamma over Gamma with d_Gamma | d equals |(eta q)^d - 1|."""
    rep = CheckReport("root_count", details={"q": params.q, "eta": params.eta})
    orbits = enumerate_orbits(params.with_ell(None), d_max)
    for d in range(1, d_max + 1):
        got = sum(g.degree for g in orbits if d % g.degree == 0)
        rep.cases += 1
        if got != abs(params.eta_q ** d - 1):
            rep.fail(f"q={params.q}, eta={params.eta}, d={d}: {got} != {abs(params.eta_q ** d - 1)}")
    return rep


# -- sweeps used by the acceptance suite and the CLI --------------------------


def valid_params(q: int, eta: int, ell: int) -> Optional[GroundParams]:
    try:
        return GroundParams.from_q(q, eta, ell)
    except ParameterError:
        return None


def column_sum_sweep(ns, qs, etas, ells) -> CheckReport:
    """Per configuration: sum of IBr counts equals the ell-regular class count,
    IBr = weights per block, and for ell = 2 the defect descriptor matches the centralizer."""
    rep = CheckReport("column_sum", details={"configs": 0, "blocks": 0})
    for ell in ells:
        for q in qs:
            for eta in etas:
                params = valid_params(q, eta, ell)
                if params is None:
                    continue
                for n in ns:
                    rep.details["configs"] += 1
                    blocks = enumerate_blocks(n, params)
                    total = 0
                    for b in blocks:
                        ibr, alp = ibr_count(b), alp_count(b)
                        total += ibr
                        rep.details["blocks"] += 1
                        rep.cases += 1
                        if ibr != alp:
                            rep.fail(f"n={n} q={q} eta={eta} ell={ell} block {b.key}: IBr {ibr} != weights {alp}")
                        if ell == 2:
                            if any(c for c in b.cores):
                                rep.fail(f"ell=2 block with nonempty core {b.key}")
                            order = defect_group_2(b).order
                            if order != two_part(centralizer_order(b.s)):
                                rep.fail(f"defect order {order} != centralizer 2-part for {b.key}")
                            exceptional_case(b)
                    expected = count_l_regular_classes(n, params)
                    if total != expected:
                        rep.fail(f"n={n} q={q} eta={eta} ell={ell}: sum IBr {total} != regular classes {expected}")
    return rep


def kappa_sweep(ns, qs, etas) -> CheckReport:
    rep = CheckReport("kappa", details={"symbols": 0})
    for q in qs:
        for eta in etas:
            params = valid_params(q, eta, 2)
            if params is None:
                continue
            for n in ns:
                for sym in admissible_symbols(n, params):
                    k, b, r = kappa_block_2(sym), brute_kappa(sym), kappa_block_2_refined(sym)
                    rep.cases += 1
                    rep.details["symbols"] += 1
                    if not k == b == r:
                        rep.fail(f"n={n} q={q} eta={eta} {sym.key}: kappa {k}, brute {b}, refined {r}")
                    if params.center_odd_order % k:
                        rep.fail(f"kappa {k} does not divide |O_2'(Z)| for {sym.key}")
    return rep


def random_degree_checks(seeds, modulus_max: int = 10 ** 6) -> CheckReport:
    """Seeded spot checks of the lcm formula at moduli beyond the exhaustive range."""
    rep = CheckReport("random_degree")
    for seed in seeds:
        rng = random.Random(seed)
        q = rng.choice([3, 5, 7, 9, 11, 13, 25, 27])
        eta = rng.choice([1, -1])
        params = GroundParams.from_q(q, eta)
        m = rng.randrange(1, modulus_max, 2)
        while m % params.p == 0:
            m = rng.randrange(1, modulus_max, 2)
        x = params.eta_q % m
        cur, d = x, 1
        while cur != 1 % m:
            cur = cur * x % m
            d += 1
        got = degree_via_lcm(RootOfUnity(m, 1 % m), params)
        rep.cases += 1
        if got != d:
            rep.fail(f"seed={seed} q={q} eta={eta} m={m}: {got} != {d}")
    return rep


def run_suite(suite: str = "core", seeds=range(0, 20), jobs: int = 1) -> list[CheckReport]:
    """Run the named oracle suite; `full` uses the acceptance ranges."""
    tasks = suite_tasks(suite, seeds)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            return [f.result() for f in futures]
    return [fn(*args) for fn, args in tasks]


def suite_tasks(suite: str, seeds) -> list[tuple[Callable, tuple]]:
    if suite == "core":
        n_max, qs, ells, mod_deg, mod_lemma, m_max, e_max = 3, (2, 3, 4, 5, 7), (2, 3, 5), 2000, 200, 12, 4
        kappa_qs = (3, 5, 7)
    elif suite == "full":
        n_max, qs, ells, mod_deg, mod_lemma, m_max, e_max = 4, (2, 3, 4, 5, 7, 8, 9), (2, 3, 5, 7), 10 ** 4, 2000, 20, 6
        kappa_qs = (3, 5, 7, 9, 11)
    else:
        raise ParameterError(f"unknown suite {suite!r}")
    ns = tuple(range(1, n_max + 1))
    tasks: list[tuple[Callable, tuple]] = [
        (column_sum_sweep, (ns, (q,), (1, -1), ells)) for q in qs
    ]
    tasks.append((kappa_sweep, (ns, kappa_qs, (1, -1))))
    tasks.append((brute_core_identity, (m_max, e_max)))
    for q in (3, 5, 7, 9):
        for eta in (1, -1):
            params = GroundParams.from_q(q, eta)
            tasks.append((brute_orbit_degree, (mod_deg, params)))
            tasks.append((brute_lemma_number_2_pow, (mod_lemma, params)))
    for q in (2, 3, 4, 5, 7, 9):
        for eta in (1, -1):
            tasks.append((root_count_identity, (GroundParams.from_q(q, eta), 6)))
    tasks.append((random_degree_checks, (tuple(seeds),)))
    return tasks

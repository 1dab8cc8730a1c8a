from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from slblocks.orbits import (
    IDENTITY,
    CenterElement,
    RootOfUnity,
    center_element,
    center_elements,
    degree_of_root,
    degree_via_lcm,
    e_of_orbit,
    enumerate_orbits,
    fixes,
    frobenius_step,
    gamma_alpha,
    make_root,
    odd_center_elements,
    orbit_of,
    orbits_of_modulus,
    z_act,
)
from slblocks.params import GroundParams, ParameterError, valuation

from conftest import params

Q7 = params(7)


def brute_degree(m, x):
    """Orbit length by literal iteration of a -> a * x mod m."""
    if m == 1:
        return 1
    k, cur = 1, x % m
    while cur != 1:
        cur = cur * x % m
        k += 1
    return k


def test_make_root_examples():
    assert make_root(1, 0, Q7) == IDENTITY
    assert make_root(9, 3, Q7) == RootOfUnity(3, 1)
    assert make_root(9, 2, Q7) == RootOfUnity(9, 2)
    assert make_root(9, 6, Q7) == RootOfUnity(3, 2)


@pytest.mark.parametrize("m", [0, 7, 14])
def test_make_root_rejects(m):
    with pytest.raises(ParameterError):
        make_root(m, 1, Q7)


def test_params_validation():
    with pytest.raises(ParameterError, match="not a prime power"):
        GroundParams.from_q(6)
    with pytest.raises(ParameterError, match="requires odd q"):
        GroundParams.from_q(8, 1, 2)
    with pytest.raises(ParameterError, match="divides q"):
        GroundParams.from_q(9, 1, 3)
    assert params(7, 1, 3).e == 1
    assert params(2, 1, 5).e == 4
    assert params(3, -1, 2).e == 1


def test_root_multiplication_lifts_to_lcm():
    # zeta_9 * zeta_3 = zeta_9^(1 + 3) = zeta_9^4
    assert RootOfUnity(9, 1) * RootOfUnity(3, 1) == RootOfUnity(9, 4)
    # zeta_3 * zeta_3^2 = 1
    assert RootOfUnity(3, 1) * RootOfUnity(3, 2) == IDENTITY
    assert RootOfUnity(2, 1) * RootOfUnity(3, 1) == RootOfUnity(6, 5)


roots = st.integers(1, 400).flatmap(
    lambda m: st.integers(0, m - 1).map(lambda a: make_root(m, a, params(401)))
)


@given(roots, roots, roots)
def test_root_group_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * IDENTITY == a
    assert a * a ** (a.modulus - 1) == IDENTITY


def test_frobenius_step_examples():
    assert frobenius_step(RootOfUnity(9, 1), Q7) == RootOfUnity(9, 7)
    assert frobenius_step(IDENTITY, params(3, -1)) == IDENTITY
    assert frobenius_step(RootOfUnity(5, 1), params(3, -1)) == RootOfUnity(5, 2)


def test_orbit_of_examples():
    g = orbit_of(RootOfUnity(9, 1), Q7)
    assert g.residues() == {1, 7, 4} and g.degree == 3 and g.residue == 1
    ident = orbit_of(IDENTITY, Q7)
    assert ident.residues() == {0} and ident.degree == 1
    assert orbit_of(RootOfUnity(5, 1), params(3)).degree == 4


def test_degree_of_root_examples():
    assert degree_of_root(IDENTITY, Q7) == 1
    assert degree_of_root(RootOfUnity(9, 1), Q7) == brute_degree(9, 7) == 3
    assert degree_of_root(RootOfUnity(3, 1), params(5)) == brute_degree(3, 5) == 2


def test_degree_via_lcm_examples():
    assert brute_degree(45, 7) == 12
    assert degree_via_lcm(RootOfUnity(45, 1), Q7) == 12
    assert degree_via_lcm(IDENTITY, Q7) == 1
    assert degree_via_lcm(RootOfUnity(9, 1), Q7) == 3
    with pytest.raises(ParameterError):
        degree_via_lcm(RootOfUnity(4, 1), Q7)


@settings(max_examples=300)
@given(
    st.sampled_from([3, 5, 7, 9, 11, 13, 25, 27]),
    st.sampled_from([1, -1]),
    st.integers(0, 5000),
)
def test_degree_via_lcm_matches_iteration(q, eta, k):
    p = params(q, eta)
    m = 2 * k + 1
    if m % p.p == 0:
        m += 2
    sigma = RootOfUnity(m, 1 % m)
    assert degree_via_lcm(sigma, p) == degree_of_root(sigma, p) == brute_degree(m, p.eta_q)


def test_enumerate_orbits_examples():
    assert [g.key for g in enumerate_orbits(params(2), 1)] == [(1, 1, 0)]
    deg1 = enumerate_orbits(params(3), 1)
    assert len(deg1) == 2 and {g.modulus for g in deg1} == {1, 2}
    assert len(enumerate_orbits(params(3, -1), 1)) == 4


def test_enumerate_orbits_sorted_and_distinct():
    orbits = enumerate_orbits(params(5, -1, 3), 3, True)
    keys = [g.key for g in orbits]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(g.modulus % 3 for g in orbits)
    assert all(g.degree <= 3 for g in orbits)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("eta", [1, -1])
def test_root_count_identity(q, eta):
    p = params(q, eta)
    orbits = enumerate_orbits(p, 6)
    for d in range(1, 7):
        assert sum(g.degree for g in orbits if d % g.degree == 0) == abs(p.eta_q ** d - 1)


@given(st.sampled_from([3, 4, 5, 7, 9]), st.sampled_from([1, -1]), st.integers(1, 300), st.integers(0, 299))
def test_orbit_of_frobenius_step(q, eta, m, a):
    p = params(q, eta)
    if m % p.p == 0:
        return
    sigma = make_root(m, a, p)
    assert orbit_of(frobenius_step(sigma, p), p) == orbit_of(sigma, p)
    assert orbit_of(sigma, p).degree == degree_of_root(sigma, p)


def test_z_act_examples():
    g = orbit_of(RootOfUnity(9, 1), Q7)
    z = center_element(RootOfUnity(9, 1) ** 3, Q7)
    assert z.root == RootOfUnity(3, 1)
    assert z_act(z, g) == g
    assert z_act(CenterElement(IDENTITY), g) == g
    one = orbit_of(IDENTITY, Q7)
    moved = z_act(z, one)
    assert moved != one and moved.root == RootOfUnity(3, 1)


def test_center_element_rejects_outside_center():
    with pytest.raises(ParameterError):
        center_element(RootOfUnity(9, 1), Q7)


@pytest.mark.parametrize("q,eta", [(7, 1), (5, -1), (11, 1), (9, -1), (4, 1)])
def test_z_act_is_a_group_action(q, eta):
    p = params(q, eta)
    orbits = enumerate_orbits(p, 3)
    zs = center_elements(p)
    assert len({z.root for z in zs}) == p.center_order
    for g in orbits:
        for z in zs:
            moved = z_act(z, g)
            assert moved.degree == g.degree
            for w in zs:
                assert z_act(w, moved) == z_act(CenterElement(w.root * z.root), g)
    for d in range(1, 4):
        same = [g for g in orbits if g.degree == d]
        for z in zs:
            assert sorted(z_act(z, g).key for g in same) == sorted(g.key for g in same)


def test_e_of_orbit_examples():
    q2 = params(2)
    g1 = orbit_of(IDENTITY, q2)
    g2 = orbit_of(RootOfUnity(3, 1), q2)
    assert g2.degree == 2
    assert e_of_orbit(g1, 5) == 4
    assert e_of_orbit(g2, 5) == 2
    assert all(e_of_orbit(g, 2) == 1 for g in enumerate_orbits(params(9, -1), 3))
    with pytest.raises(ParameterError):
        e_of_orbit(g1, 2)


def test_gamma_alpha_examples():
    g = orbit_of(RootOfUnity(5, 1), params(3))
    assert gamma_alpha(g, 0).residues == g.residues()
    r = gamma_alpha(g, 1)
    assert r.residues == {1, 4} and r.degree == 2
    assert r.recover() == g
    h = orbit_of(RootOfUnity(9, 1), Q7)
    assert gamma_alpha(h, 1).degree == 3


@pytest.mark.parametrize("q,eta", [(3, 1), (5, -1), (7, 1), (9, -1), (11, 1)])
def test_gamma_alpha_degree_and_stabilization(q, eta):
    p = params(q, eta, 2)
    for g in enumerate_orbits(p, 8, True) if q < 9 else enumerate_orbits(p, 6, True):
        top = valuation(g.degree, 2)
        for alpha in range(top + 3):
            r = gamma_alpha(g, alpha)
            assert r.degree == g.degree // gcd(g.degree, 2 ** alpha)
            assert r.recover() == g
            if alpha >= top:
                assert r.residues == gamma_alpha(g, top).residues


@pytest.mark.parametrize("q,eta", [(5, -1), (7, 1), (9, -1), (11, 1), (13, 1)])
def test_lemma_two_power_property(q, eta):
    p = params(q, eta, 2)
    zs = odd_center_elements(p)
    for m in range(1, 400, 2):
        if m % p.p == 0:
            continue
        for g in orbits_of_modulus(m, p):
            top = valuation(g.degree, 2)
            refined = [gamma_alpha(g, a) for a in range(top + 3)]
            for z in zs:
                assert fixes(z, g) == all(r.fixed_by(z) for r in refined)

from itertools import product

import pytest

from slblocks.atlas import (
    BlockLabel,
    SemisimpleLabel,
    alp_count,
    blocks_of_label,
    centralizer_order,
    defect_group_2,
    enumerate_blocks,
    enumerate_semisimple_labels,
    exceptional_case,
    gl_order,
    ibr_count,
    two_adic_a,
    validate_block,
)
from slblocks.orbits import IDENTITY, RootOfUnity, orbit_of
from slblocks.params import ParameterError, two_part, valuation
from slblocks.partitions import two_adic_decomposition

from conftest import params


def brute_gl_order(n, p):
    """Count invertible n x n matrices over F_p by row reduction rank."""

    def rank(rows):
        rows = [list(r) for r in rows]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if rows[i][c] % p), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][c], -1, p)
            for i in range(n):
                if i != r and rows[i][c] % p:
                    f = rows[i][c] * inv
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
            r += 1
        return r

    vecs = list(product(range(p), repeat=n))
    return sum(rank(m) == n for m in product(vecs, repeat=n))


def test_semisimple_label_examples():
    labels = enumerate_semisimple_labels(2, params(3, 1, 2), True)
    assert [s.key for s in labels] == [(((1, 1, 0), 2),)]
    labels = enumerate_semisimple_labels(2, params(5, 1, 2), True)
    assert [s.key for s in labels] == [(((1, 1, 0), 2),), (((2, 3, 1), 1),)]
    for q, eta in [(2, 1), (3, -1), (7, 1), (8, -1)]:
        assert len(enumerate_semisimple_labels(1, params(q, eta))) == q - eta


def test_semisimple_labels_are_canonical():
    labels = enumerate_semisimple_labels(4, params(4, -1, 5), True)
    keys = [s.key for s in labels]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(s.n == 4 for s in labels)
    with pytest.raises(ParameterError):
        g = orbit_of(IDENTITY, params(3))
        SemisimpleLabel(((g, 1), (g, 1)))


def test_block_examples():
    assert len(enumerate_blocks(2, params(3, 1, 2))) == 1
    assert len(enumerate_blocks(2, params(5, 1, 2))) == 2
    (b,) = enumerate_blocks(2, params(2, 1, 3))
    assert b.cores == ((),) and b.e_values() == (2,)
    assert ibr_count(b) == alp_count(b) == 2


def test_ibr_alp_examples():
    (b,) = enumerate_blocks(2, params(3, 1, 2))
    assert ibr_count(b) == alp_count(b) == 2
    # GL_4(2), ell = 3: identity orbit with e = 2, multiplicity 4, empty core, weight 2
    q2 = params(2, 1, 3)
    one = orbit_of(IDENTITY, q2)
    b = BlockLabel(SemisimpleLabel(((one, 4),)), ((),))
    assert b.weights() == (2,)
    assert alp_count(b) == 5 == ibr_count(b)
    # weight zero blocks have a single Brauer character
    b = BlockLabel(SemisimpleLabel(((one, 3),)), ((2, 1),))
    assert b.weights() == (0,) and ibr_count(b) == alp_count(b) == 1


def test_ell_two_gives_one_block_per_label():
    for q, eta in [(3, 1), (5, -1), (9, 1), (7, -1)]:
        p = params(q, eta, 2)
        for n in range(1, 5):
            labels = enumerate_semisimple_labels(n, p, True)
            blocks = enumerate_blocks(n, p)
            assert len(blocks) == len(labels)
            assert all(c == () for b in blocks for c in b.cores)


def test_validate_block():
    p = params(2, 1, 3)
    one = orbit_of(IDENTITY, p)
    validate_block(BlockLabel(SemisimpleLabel(((one, 3),)), ((2, 1),)))
    with pytest.raises(ParameterError):
        validate_block(BlockLabel(SemisimpleLabel(((one, 3),)), ((),)))
    with pytest.raises(ParameterError):
        validate_block(BlockLabel(SemisimpleLabel(((one, 3),)), ((2,),)))


def test_gl_order_matches_brute_force():
    assert gl_order(2, 3) == brute_gl_order(2, 3) == 48
    assert gl_order(3, 2) == brute_gl_order(3, 2) == 168
    assert gl_order(2, 2) == brute_gl_order(2, 2) == 6
    # |GU_2(3)| = 3 * (3 + 1) * (9 - 1)
    assert gl_order(2, -3) == 96
    assert gl_order(3, 3) == 11232


def test_centralizer_examples():
    s = enumerate_semisimple_labels(2, params(3, 1, 2), True)[0]
    assert centralizer_order(s) == 48
    for q, eta in [(3, 1), (5, -1), (8, 1)]:
        p = params(q, eta)
        assert centralizer_order(SemisimpleLabel(((orbit_of(IDENTITY, p), 1),))) == q - eta
    p5 = params(5, 1, 2)
    g = orbit_of(RootOfUnity(3, 1), p5)
    assert centralizer_order(SemisimpleLabel(((g, 1),))) == 24


def test_defect_group_examples():
    (b,) = enumerate_blocks(2, params(3, 1, 2))
    d = defect_group_2(b)
    assert [dv.case for dv in d.divisors] == ["(2i)"]
    assert d.symbol() == "S~_{1,1,0}" and d.order == 16 == two_part(48)

    for q, eta in [(5, 1), (3, -1), (9, 1), (7, -1)]:
        (b,) = enumerate_blocks(1, params(q, eta, 2))[:1]
        d = defect_group_2(b)
        assert d.divisors[0].case == "(1)" and d.order == two_part(q - eta)

    b = [b for b in enumerate_blocks(3, params(3, 1, 2)) if b.s.entries[0][0].modulus == 1][0]
    d = defect_group_2(b)
    assert d.divisors[0].case == "(2ii)"
    assert d.symbol() == "R_{1,0} x S~_{1,1,0}"
    assert d.order == 32 == two_part(11232)

    with pytest.raises(ParameterError):
        defect_group_2(enumerate_blocks(2, params(2, 1, 3))[0])


@pytest.mark.parametrize("big_q", [3, -3, 5, -5, 7, -7, 9, 25, -27, 11])
def test_two_part_additivity(big_q):
    for n in range(1, 17):
        lhs = valuation(gl_order(n, big_q), 2)
        rhs = sum(valuation(gl_order(2 ** b, big_q), 2) for b in two_adic_decomposition(n))
        assert lhs == rhs


def test_exceptional_examples():
    (b,) = enumerate_blocks(2, params(3, 1, 2))
    assert exceptional_case(b).case == "iv"
    assert exceptional_case(b).r_prime == "R^-_{1,0,1}"
    for q in (3, 5, 7, 9):
        (b,) = enumerate_blocks(1, params(q, 1, 2))[:1]
        assert exceptional_case(b).case is None
    p5 = params(5, 1, 2)
    b = [b for b in enumerate_blocks(2, p5) if b.s.entries[0][0].modulus == 3][0]
    rep = exceptional_case(b)
    assert rep.case == "i" and rep.r_prime == "R_{2,0}"
    assert two_adic_a(5) == 2


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 17])
@pytest.mark.parametrize("eta", [1, -1])
def test_exceptional_preconditions(q, eta):
    p = params(q, eta, 2)
    a = two_adic_a(q)
    for n in range(1, 5):
        for b in enumerate_blocks(n, p):
            case = exceptional_case(b).case
            if case is None:
                continue
            ((g, m),) = b.s.entries
            alpha = valuation(g.degree, 2)
            expected = {
                "i": (q - eta) % 4 == 0 and alpha > 0 and m == 1 and n == g.degree,
                "ii": (q - eta) % 4 == 0 and a == 2 and alpha == 0 and m == 2 and n == 2 * g.degree,
                "iii": (q + eta) % 4 == 0 and alpha > 1 and m == 1 and n == g.degree,
                "iv": (q + eta) % 4 == 0 and a == 2 and alpha == 0 and m == 2 and n == 2 * g.degree,
            }
            assert [k for k, v in expected.items() if v] == [case]


def test_blocks_of_label_counts_cores():
    # GL_3(2), ell = 3: identity with e = 2, cores of size 1 or 3
    p = params(2, 1, 3)
    s = SemisimpleLabel(((orbit_of(IDENTITY, p), 3),))
    assert sorted(b.cores for b in blocks_of_label(s)) == [((1,),), ((2, 1),)]

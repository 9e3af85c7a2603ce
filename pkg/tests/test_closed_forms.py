"""Closed-form evaluators against the brute-force route and embedded tables."""

from math import comb, factorial, prod

import pytest

from spechtdiv import fixtures
from spechtdiv.closed_forms import (
    F2,
    LemFundError,
    contains_base_p,
    cort5_group,
    group_p_part,
    hook_forms,
    hook_polytabloid,
    hook_trigonal_basis,
    large_prime_analyze,
    lemfund_verify,
    rank_two_row,
    rectangular_scale,
    schaper_families,
    schaper_family,
    schaper_family_head,
    two_column_22_order,
    two_column_22_structure,
    two_column_entry,
    two_column_polytabloid,
    two_row_ediv,
)
from spechtdiv.combinatorics import dim_specht, partitions_of
from spechtdiv.jantzen import layers_from_divisors
from spechtdiv.linalg import (
    assemble_group,
    group_order,
    p_part_of_chain,
    valuation,
)
from spechtdiv.specht import (
    _primes_up_to,
    gram_chain,
    gram_det,
    gram_matrix,
    james_factor,
    pairing,
    vec_add,
    vec_scale,
)


def test_contains_base_p():
    # t = 0 is always contained; otherwise the top digit of s+1 must sit
    # strictly above t and each digit of t must be 0 or match s+1.
    for s in range(10):
        assert contains_base_p(s, 0, 2) == 1
    assert contains_base_p(-1, 0, 2) == 0
    assert contains_base_p(2, 1, 2) == 1  # 3 = 11b contains 1
    assert contains_base_p(4, 1, 2) == 1  # 5 = 101b contains 1
    assert contains_base_p(4, 2, 2) == 0  # 101b has no 2-bit
    assert contains_base_p(4, 4, 2) == 0  # top digits collide
    assert contains_base_p(7, 2, 3) == 1  # 8 = 22 base 3 contains 02
    assert contains_base_p(5, 2, 3) == 0  # 6 = 20 base 3, unit digit 0
    # Containment needs the top digit strictly above: t >= s+1 never works.
    for s in range(12):
        for t in range(s + 1, s + 6):
            assert contains_base_p(s, t, 2) == 0


def test_f2_values_and_internal_cross_check():
    # Small values by hand; the grid sweep also exercises the closed-product
    # assertion built into the evaluator.
    assert F2(2, 0) == 1
    assert F2(2, 1) == 1
    assert F2(5, 2) == sum(contains_base_p(5, 2 - 2 * i, 2) for i in range(2))
    for k in range(1, 40):
        for m in range(0, k // 2 + 1):
            value = F2(k, m)
            if m % 2 == 0:
                assert value >= 1  # the i with m - 2i = 0 contributes
            if k % 2 and m % 2:
                assert value == 0  # odd k+1 ends in 0, odd t never matches


def test_rank_two_row():
    for n in range(2, 12):
        for m in range(n // 2 + 1):
            expected = comb(n, m) - (comb(n, m - 1) if m else 0)
            assert rank_two_row(n, m) == expected
            if m:
                assert rank_two_row(n, m) == dim_specht((n - m, m))


@pytest.mark.parametrize("n", range(4, 9))
def test_two_row_matches_brute_force(n):
    for m in range(1, n // 2 + 1):
        lam = (n - m, m)
        chain = list(gram_chain(lam)[0])
        for p in (2, 3, 5, 7):
            assert two_row_ediv(n, m, p) == p_part_of_chain(chain, p)


@pytest.mark.parametrize("n", range(4, 9))
def test_cort5_group_above_small_primes(n):
    # The prime-free product formula is exact once every prime exceeds m.
    for m in range(1, n // 2 + 1):
        lam = (n - m, m)
        chain = list(gram_chain(lam)[0])
        closed = cort5_group(n, m)
        for p in _primes_up_to(n):
            if p > m:
                assert group_p_part(closed, p) == p_part_of_chain(chain, p)


@pytest.mark.parametrize("n", range(3, 8))
def test_hook_forms_group_and_order(n):
    for l in range(n):
        lam = (n - l,) + (1,) * l if l < n - 1 else (1,) * n
        chain, d = gram_chain(lam)
        hf = hook_forms(n, l)
        assert hf.group == assemble_group(list(chain))
        assert hf.order == abs(d)
        assert hf.order == group_order(hf.group)


@pytest.mark.parametrize("n", range(3, 8))
def test_hook_forms_layers(n):
    for l in range(n):
        lam = (n - l,) + (1,) * l if l < n - 1 else (1,) * n
        chain, _ = gram_chain(lam)
        for p in (2, 3, 5):
            hf = hook_forms(n, l, p)
            prof = layers_from_divisors(list(chain), len(chain), p)
            assert hf.layers == dict(prof.layer_dims)
            # Every listed layer subscript occurs in the brute-force profile.
            assert all(
                lay in prof.layer_dims for _, _, lay in hf.decomposition.terms
            )


def test_hook_polytabloid_alternating():
    # Swapping two column entries flips the sign of the bracket.
    v = hook_polytabloid(5, (2, 3))
    w = hook_polytabloid(5, (3, 2))
    assert w == vec_scale(v, -1)
    assert hook_polytabloid(5, (4, 2, 3)) == hook_polytabloid(5, (2, 3, 4))


def test_hook_trigonal_fixture_matrix():
    # Published pairing table for the shape (2,1,1).
    xs, ys = hook_trigonal_basis(4, 2)
    table = tuple(tuple(pairing(x, y) for y in ys) for x in xs)
    assert table == fixtures.EXHOOK4_MATRIX


@pytest.mark.parametrize("n,l", [(n, l) for n in range(2, 8) for l in range(n - 1)])
def test_hook_trigonal_lemfund(n, l):
    xs, ys = hook_trigonal_basis(n, l)
    lam = (n - l,) + (1,) * l
    d = gram_det(lam)
    diag = lemfund_verify(xs, ys, pairing, d)
    # Unscaled diagonal: l! repeated, then n*l!.
    lf = factorial(l)
    c_low = comb(n - 2, l)
    assert diag == [lf] * c_low + [n * lf] * (len(diag) - c_low)
    assert sorted(diag) == diag


def test_hook_layer_display_large():
    # Published layered decomposition of the hook (6,1^8) at p = 2.
    hf = hook_forms(14, 8, 2)
    got = tuple((m, lab, lay) for m, lab, lay in hf.decomposition.terms)
    assert sorted(got) == sorted(fixtures.EXHOOK6_DECOMP)


def test_lemfund_error_conditions():
    def mk(table):
        idx = {i: {} for i in range(len(table))}
        xs = list(range(len(table)))
        ys = list(range(len(table)))
        return xs, ys, lambda i, j: table[i][j]

    xs, ys, pair = mk([[0, 1], [0, 2]])
    with pytest.raises(LemFundError) as e:
        lemfund_verify(xs, ys, pair, 2)
    assert e.value.condition == "i"
    xs, ys, pair = mk([[1, 0], [3, 2]])
    with pytest.raises(LemFundError) as e:
        lemfund_verify(xs, ys, pair, 2)
    assert e.value.condition == "ii"
    xs, ys, pair = mk([[2, 1], [0, 4]])
    with pytest.raises(LemFundError) as e:
        lemfund_verify(xs, ys, pair, 8)
    assert e.value.condition == "iii"
    xs, ys, pair = mk([[2, 2], [0, 3]])
    with pytest.raises(LemFundError) as e:
        lemfund_verify(xs, ys, pair, 6)
    assert e.value.condition == "iv"
    xs, ys, pair = mk([[1, 1], [0, 2]])
    with pytest.raises(LemFundError) as e:
        lemfund_verify(xs, ys, pair, 6)
    assert e.value.condition == "v"
    with pytest.raises(ValueError):
        lemfund_verify([1], [], lambda x, y: 1, 1)


def test_two_column_entry_fixture_table():
    # Rescaled pairings of single brackets reproduce the published columns.
    n, h = 6, 2
    jf = james_factor((2, 2, 1, 1))
    for xi in fixtures.EX22_3_COLUMNS:
        for eta in fixtures.EX22_3_COLUMNS:
            u = two_column_polytabloid(n, xi)
            v = two_column_polytabloid(n, eta)
            assert two_column_entry(n, h, xi, eta) * jf == pairing(u, v)


def test_two_column_published_table():
    # Full 11 x 9 rescaled pairing table at n = 6.
    n = 6
    jf = james_factor((2, 2, 1, 1))
    from spechtdiv.closed_forms import _two_column_rho

    rows = []
    for spec in fixtures.EX22_3_ROW_SPECS:
        vec = {}
        for item in spec:
            if item[0] == "rho":
                vec = vec_add(vec, _two_column_rho(n, item[1]))
            else:
                c, pair = item
                vec = vec_add(vec, two_column_polytabloid(n, pair), c)
        rows.append(vec)
    cols = [two_column_polytabloid(n, pair) for pair in fixtures.EX22_3_COLUMNS]
    table = tuple(
        tuple(pairing(r, c) // jf for c in cols) for r in rows
    )
    assert table == fixtures.EX22_3_TABLE


@pytest.mark.parametrize("n", (6, 7))
def test_two_column_structure_matches_brute_force(n):
    lam = (2, 2) + (1,) * (n - 4)
    chain, d = gram_chain(lam)
    st = two_column_22_structure(n)
    assert tuple(chain) == st.chain
    assert assemble_group(list(chain)) == st.group
    assert st.order == abs(d) == two_column_22_order(n)
    # The stored tuples really trigonalize the unscaled form.
    diag = lemfund_verify(st.x, st.y, pairing, d)
    jf = james_factor(lam)
    assert sorted(q // jf for q in diag) == sorted(q // jf for q in chain)


def test_two_column_fixture_group():
    st = two_column_22_structure(6)
    assert tuple(st.group) == fixtures.EX22_3_GROUP
    assert st.chain == fixtures.EX22_3_CHAIN


@pytest.mark.parametrize("n", range(3, 8))
def test_large_prime_matches_brute_force(n):
    for lam in partitions_of(n):
        if len(lam) < 2:
            continue
        chain = list(gram_chain(lam)[0])
        for p in _primes_up_to(n):
            if p <= n - lam[0]:
                continue
            rep = large_prime_analyze(lam, p)
            brute = p_part_of_chain(chain, p)
            if rep.case == "simple":
                assert brute == []
            else:
                assert brute == list(rep.p_part)
                assert rep.h_t is not None and rep.h_t % p == 0
                assert rep.layer == valuation(rep.h_t, p)


def test_large_prime_rejects():
    with pytest.raises(ValueError):
        large_prime_analyze((5,), 7)
    with pytest.raises(ValueError):
        large_prime_analyze((3, 2), 2)


def test_schaper_family_heads():
    assert schaper_family_head("n-3,2,1", 6) == (3, 2, 1)
    assert schaper_family_head("n-4,2^2", 8) == (4, 2, 2)
    assert len(schaper_families()) == 4
    with pytest.raises(ValueError):
        schaper_family("nope", 8, 2)
    with pytest.raises(ValueError):
        schaper_family("n-3,2,1", 5, 2)


@pytest.mark.parametrize("fam", ["n-3,2,1", "n-4,2^2", "n-4,3,1", "n-4,2,1^2"])
def test_schaper_weighted_dimension(fam):
    # Weighted dimension of each printed identity equals the p-valuation of
    # the head determinant.
    low = 6 if fam == "n-3,2,1" else 8
    for n in range(low, 9):
        head = schaper_family_head(fam, n)
        for p in (2, 3, 5, 7):
            fs = schaper_family(fam, n, p)
            weighted = sum(c * dim_specht(lab) for c, lab, _ in fs.terms)
            assert weighted == valuation(abs(gram_det(head)), p)


def test_rectangular_scale():
    assert rectangular_scale((2, 2)) == ((2, 1), 2)
    assert rectangular_scale((3, 3)) == ((3, 2), 2)
    assert rectangular_scale((1, 1, 1)) == ((1, 1), 3)
    with pytest.raises(ValueError):
        rectangular_scale((3, 2))
    for mu in [(2, 2), (2, 2, 2), (3, 3)]:
        nu, h = rectangular_scale(mu)
        assert list(gram_chain(mu)[0]) == [h * d for d in gram_chain(nu)[0]]

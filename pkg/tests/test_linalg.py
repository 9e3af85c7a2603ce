"""Exact integer linear algebra: Smith/Hermite forms, kernels, p-parts."""

import random
from math import gcd, prod

import pytest

from spechtdiv.linalg import (
    assemble_group,
    det,
    first_divisor,
    group_order,
    hermite_form,
    identity_matrix,
    kernel_mod,
    mat_mul,
    merge_p_parts,
    p_part_chain,
    p_part_of_chain,
    rank_mod_p,
    smith_normal_form,
    valuation,
)


def random_matrix(rng, rows, cols, bound=30):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def random_nonsingular(rng, size, bound=30):
    while True:
        m = random_matrix(rng, size, size, bound)
        if det(m) != 0:
            return m


def test_smith_known_values():
    assert smith_normal_form([[2, 0], [0, 3]])[0] == [1, 6]
    assert smith_normal_form(identity_matrix(4))[0] == [1, 1, 1, 1]
    assert smith_normal_form([[0, 0], [0, 0]])[0] == []
    chain, d = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert chain == [2, 2, 156]
    assert abs(d) == 2 * 2 * 156


def test_smith_chain_properties():
    rng = random.Random(20260825)
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = random_matrix(rng, rows, cols)
        chain, d = smith_normal_form(m)
        assert all(x > 0 for x in chain)
        assert all(b % a == 0 for a, b in zip(chain, chain[1:]))
        if rows == cols:
            assert d is not None
            if d:
                assert abs(d) == prod(chain)
                assert abs(det(m)) == prod(chain)


def test_smith_against_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as snf

    rng = random.Random(7)
    for _ in range(25):
        size = rng.randint(1, 5)
        m = random_nonsingular(rng, size)
        expected = [abs(int(x)) for x in snf(sympy.Matrix(m)).diagonal()]
        assert smith_normal_form(m)[0] == sorted(expected)


def test_det_against_cofactor():
    def cofactor_det(m):
        if len(m) == 1:
            return m[0][0]
        return sum(
            (-1) ** j * m[0][j] * cofactor_det(
                [row[:j] + row[j + 1:] for row in m[1:]]
            )
            for j in range(len(m))
        )

    rng = random.Random(3)
    for _ in range(30):
        size = rng.randint(1, 5)
        m = random_matrix(rng, size, size)
        assert det(m) == cofactor_det(m)


def test_rank_mod_p():
    assert rank_mod_p([[2, 0], [0, 3]], 2) == 1
    assert rank_mod_p([[2, 0], [0, 3]], 3) == 1
    assert rank_mod_p([[2, 0], [0, 3]], 5) == 2
    rng = random.Random(11)
    for _ in range(25):
        size = rng.randint(1, 5)
        m = random_matrix(rng, size, size)
        for p in (2, 3, 5):
            chain, _ = smith_normal_form(m)
            expected = sum(1 for d in chain if d % p)
            assert rank_mod_p(m, p) == expected


def test_hermite_form_canonical():
    h = hermite_form([[1, 0, 0, 1], [0, 1, 0, -1], [0, 0, 1, 1], [0, 0, 0, 5]])
    assert h == [[1, 0, 0, 1], [0, 1, 0, 4], [0, 0, 1, 1], [0, 0, 0, 5]]
    assert hermite_form(h) == h


def test_hermite_form_lattice_invariance():
    # Unimodular row mixes and shuffles never change the Hermite form.
    rng = random.Random(99)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(rows, 6)
        m = random_matrix(rng, rows, cols)
        h = hermite_form(m)
        assert hermite_form(h) == h
        mixed = [row[:] for row in m]
        for _ in range(8):
            i, j = rng.randrange(rows), rng.randrange(rows)
            if i != j:
                c = rng.randint(-3, 3)
                mixed[i] = [a + c * b for a, b in zip(mixed[i], mixed[j])]
        rng.shuffle(mixed)
        assert hermite_form(mixed) == h
        # Pivots positive, entries above each pivot reduced.
        pivot_cols = []
        for row in h:
            j = next(k for k, x in enumerate(row) if x)
            assert row[j] > 0
            pivot_cols.append(j)
        assert pivot_cols == sorted(pivot_cols)
        for k, j in enumerate(pivot_cols):
            for i in range(k):
                assert 0 <= h[i][j] < h[k][j]


def test_kernel_mod():
    rng = random.Random(5)
    for _ in range(30):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = random_matrix(rng, rows, cols, 9)
        n = rng.choice([2, 4, 5, 12, 30])
        kern = kernel_mod(m, n)
        assert len(kern) == cols  # full-rank sublattice
        assert hermite_form(kern) == kern
        # Every generator maps to zero mod n.
        for v in kern:
            image = [sum(a * x for a, x in zip(row, v)) for row in m]
            assert all(e % n == 0 for e in image)
        # n * (ambient lattice) is contained in the kernel.
        scaled = hermite_form(kern + [[n * int(i == j) for j in range(cols)]
                                      for i in range(cols)])
        assert scaled == kern
        # Index equals the product of n / gcd(d_i, n).
        chain, _ = smith_normal_form(m)
        index = prod(n // gcd(d, n) for d in chain)
        assert prod(kern[i][i] for i in range(cols)) == index


def test_kernel_mod_one():
    assert kernel_mod([[3, 4]], 1) == identity_matrix(2)


def test_p_part_chain_matches_full_smith():
    rng = random.Random(17)
    for _ in range(60):
        size = rng.randint(1, 5)
        m = random_nonsingular(rng, size)
        chain, _ = smith_normal_form([row[:] for row in m])
        for p in (2, 3, 5):
            expected = sorted(p ** valuation(d, p) for d in chain)
            # Tiny starting precision exercises the doubling path.
            assert p_part_chain(m, p, start_prec=1) == expected
            assert p_part_chain(m, p) == expected


def test_first_divisor():
    assert first_divisor([[4, 6], [10, 2]]) == 2
    assert first_divisor(identity_matrix(3)) == 1


def test_group_helpers():
    chain = [1, 2, 2, 12]
    assert assemble_group(chain) == [(2, 2), (12, 1)]
    assert group_order(assemble_group(chain)) == 48
    assert p_part_of_chain(chain, 2) == [(2, 2), (4, 1)]
    assert p_part_of_chain(chain, 3) == [(3, 1)]
    assert p_part_of_chain(chain, 5) == []


def test_valuation():
    assert valuation(12, 2) == 2
    assert valuation(12, 3) == 1
    assert valuation(12, 5) == 0
    with pytest.raises(ValueError):
        valuation(0, 2)


def test_merge_p_parts_round_trip():
    rng = random.Random(23)
    for _ in range(40):
        rank = rng.randint(1, 6)
        chain = [1] * rank
        for p in (2, 3, 5):
            exps = sorted(rng.randint(0, 3) for _ in range(rank))
            chain = [c * p**e for c, e in zip(chain, exps)]
        per_prime = {
            p: [p ** valuation(d, p) for d in chain if d % p == 0]
            for p in (2, 3, 5)
        }
        assert merge_p_parts(per_prime, rank) == chain


def test_merge_p_parts_overflow():
    with pytest.raises(ValueError):
        merge_p_parts({2: [2, 2, 2]}, 2)


def test_mat_mul():
    a = [[1, 2], [3, 4]]
    b = [[5, 6], [7, 8]]
    assert mat_mul(a, b) == [[19, 22], [43, 50]]
    assert mat_mul(a, identity_matrix(2)) == a

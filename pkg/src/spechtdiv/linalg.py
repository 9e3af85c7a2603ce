"""Exact integer linear algebra.

Dense matrices are lists of lists of Python ints.  Everything here is
arbitrary precision: Smith and Hermite normal forms, determinants, rank over
GF(p), kernel lattices mod N, and divisor-chain bookkeeping.
"""

from __future__ import annotations

from math import gcd, prod

Matrix = list[list[int]]


def identity_matrix(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def copy_matrix(mat: Matrix) -> Matrix:
    return [row[:] for row in mat]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose_matrix(mat: Matrix) -> Matrix:
    return [list(col) for col in zip(*mat)] if mat else []


def _min_abs_pivot(a: Matrix, start: int, rows: int, cols: int):
    best = None
    best_val = None
    for i in range(start, rows):
        row = a[i]
        for j in range(start, cols):
            v = row[j]
            if v:
                av = abs(v)
                if best_val is None or av < best_val:
                    best, best_val = (i, j), av
                    if av == 1:
                        return best
    return best


def _sym_quotient(a: int, piv: int) -> int:
    """Quotient leaving the symmetric remainder in (-piv/2, piv/2]."""
    rem = a % piv
    if 2 * rem > piv:
        rem -= piv
    return (a - rem) // piv


def _sym_mod(x: int, mod: int) -> int:
    r = x % mod
    return r - mod if 2 * r > mod else r


def _smith(a: Matrix, want_right: bool, reduce_mod: int | None = None):
    """In-place Smith reduction.

    Returns (divisors, sign, right_transform).  The right transform V
    satisfies original · V = column-reduced result, so kernel coordinates pull
    back through V.  Sign tracks row/column swaps and negations, making
    sign·∏divisors the determinant of square input.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    v = identity_matrix(cols) if want_right else None
    sign = 1
    divisors: list[int] = []
    r = 0
    while True:
        if reduce_mod is not None:
            # Entries may be folded mod reduce_mod: the lattice spanned by the
            # columns is assumed to contain reduce_mod times every unit vector.
            for i in range(r, rows):
                a[i][r:] = [_sym_mod(x, reduce_mod) for x in a[i][r:]]
        piv = _min_abs_pivot(a, r, rows, cols)
        if piv is None:
            break
        pi, pj = piv
        if pi != r:
            a[pi], a[r] = a[r], a[pi]
            sign = -sign
        if pj != r:
            for row in a:
                row[pj], row[r] = row[r], row[pj]
            if want_right:
                for row in v:
                    row[pj], row[r] = row[r], row[pj]
            sign = -sign
        if a[r][r] < 0:
            a[r] = [-x for x in a[r]]
            sign = -sign
        piv_val = a[r][r]
        # One reduction pass with symmetric remainders; if any remainder
        # survives it is smaller than the pivot, so re-selecting the minimal
        # pivot makes strict progress.
        changed = False
        for i in range(r + 1, rows):
            if a[i][r]:
                q = _sym_quotient(a[i][r], piv_val)
                if q:
                    arr = a[r]
                    a[i] = [x - q * y for x, y in zip(a[i], arr)]
                if a[i][r]:
                    changed = True
        for j in range(r + 1, cols):
            if a[r][j]:
                q = _sym_quotient(a[r][j], piv_val)
                if q:
                    for row in a:
                        row[j] -= q * row[r]
                    if want_right:
                        for row in v:
                            row[j] -= q * row[r]
                if a[r][j]:
                    changed = True
        if changed:
            continue
        # Make the pivot divide the remaining submatrix.
        dirty = False
        if piv_val != 1:
            for i in range(r + 1, rows):
                row = a[i]
                for j in range(r + 1, cols):
                    if row[j] % piv_val:
                        a[r] = [x + y for x, y in zip(a[r], row)]
                        dirty = True
                        break
                if dirty:
                    break
        if dirty:
            continue
        divisors.append(piv_val)
        r += 1
    return divisors, sign, v


def smith_normal_form(mat: Matrix) -> tuple[list[int], int | None]:
    """Smith chain of an integer matrix.

    Returns (divisors, det) where divisors are the nonzero invariant factors
    d1 | d2 | ... and det is the signed determinant for square input (None
    for rectangular input).
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    divisors, sign, _ = _smith(copy_matrix(mat), want_right=False)
    det: int | None = None
    if rows == cols:
        det = sign * prod(divisors) if len(divisors) == rows else 0
    return divisors, det


def det(mat: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = copy_matrix(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[i], a[k] = a[k], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_mod_p(mat: Matrix, p: int) -> int:
    """Rank over the field with p elements."""
    a = [[x % p for x in row] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    col = 0
    while rank < rows and col < cols:
        piv = next((i for i in range(rank, rows) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank


def hermite_form(rows_in: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; zero rows dropped.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).  Unique, so lattice equality is list equality.
    """
    if not rows_in:
        return []
    work = [row[:] for row in rows_in]
    cols = len(work[0])
    basis: list[list[int]] = []
    pivots: list[int] = []
    pivot_row: dict[int, int] = {}
    for vec in work:
        j = next((jj for jj in range(cols) if vec[jj]), None)
        while j is not None:
            k = pivot_row.get(j)
            if k is None:
                if vec[j] < 0:
                    vec = [-x for x in vec]
                where = 0
                while where < len(pivots) and pivots[where] < j:
                    where += 1
                basis.insert(where, vec)
                pivots.insert(where, j)
                pivot_row = {p: i for i, p in enumerate(pivots)}
                break
            row = basis[k]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, row)]
            else:
                g, x, y = _xgcd(a, b)
                ag, bg = a // g, b // g
                combined = [x * aa + y * bb for aa, bb in zip(row, vec)]
                vec = [-bg * aa + ag * bb for aa, bb in zip(row, vec)]
                basis[k] = combined
            j = next((jj for jj in range(j + 1, cols) if vec[jj]), None)
    # Reduce entries above each pivot, left to right so a reduction never
    # disturbs a pivot column that was already cleaned.
    for k in range(len(basis)):
        j = pivots[k]
        piv = basis[k][j]
        for i in range(k):
            q = basis[i][j] // piv
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[k])]
    return basis


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def kernel_mod(mat: Matrix, n: int) -> list[list[int]]:
    """Canonical basis of {v : mat · v == 0 mod n}, as Hermite-form rows.

    The kernel is a full-rank sublattice of the ambient column space; it is
    described through the right Smith transform: with M V = diag(d_i) up to
    row operations, v = V w lies in the kernel iff each w_i is divisible by
    n / gcd(d_i, n).
    """
    cols = len(mat[0]) if mat else 0
    if n == 1:
        return identity_matrix(cols)
    divisors, _, v = _smith(copy_matrix(mat), want_right=True)
    scales = [n // gcd(d, n) for d in divisors] + [1] * (cols - len(divisors))
    gens = [[v[i][j] * scales[j] for i in range(cols)] for j in range(cols)]
    return hermite_form(gens)


def p_part_chain(mat: Matrix, p: int, start_prec: int = 16) -> list[int]:
    """p-power parts of the invariant factors of a nonsingular square matrix.

    Works over Z/p^K with entries folded into the symmetric range, which keeps
    every number small; precision K doubles until no computed power caps out.
    Much faster than a full Smith reduction when only one prime matters.
    Returns the sorted chain of p-powers, length = matrix size.
    """
    r = len(mat)
    k = start_prec
    while True:
        mod = p**k
        divisors, _, _ = _smith(copy_matrix(mat), want_right=False, reduce_mod=mod)
        chain = sorted(gcd(d, mod) for d in divisors) + [mod] * (r - len(divisors))
        if all(c < mod for c in chain):
            return chain
        k *= 2


def first_divisor(rows: list[list[int]]) -> int:
    """Smallest invariant factor of the matrix with the given rows."""
    divisors, _ = smith_normal_form(rows)
    return divisors[0] if divisors else 0


GroupDecomposition = list[tuple[int, int]]


def assemble_group(chain: list[int]) -> GroupDecomposition:
    """Divisor chain -> sorted (modulus, multiplicity) pairs, dropping 1s."""
    counts: dict[int, int] = {}
    for d in chain:
        if d != 1:
            counts[d] = counts.get(d, 0) + 1
    return sorted(counts.items())


def group_order(group: GroupDecomposition) -> int:
    return prod(m**k for m, k in group)


def valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def p_part_of_chain(chain: list[int], p: int) -> GroupDecomposition:
    return assemble_group([p ** valuation(d, p) for d in chain])


def merge_p_parts(per_prime: dict[int, list[int]], rank: int) -> list[int]:
    """Combine prime-power multisets positionally into a divisor chain.

    Each prime's list of powers is padded with 1s to the full rank, sorted,
    and multiplied position by position.
    """
    chain = [1] * rank
    for p, powers in per_prime.items():
        if len(powers) > rank:
            raise ValueError(f"too many {p}-power summands for rank {rank}")
        padded = sorted(powers + [1] * (rank - len(powers)))
        chain = [c * q for c, q in zip(chain, padded)]
    return chain

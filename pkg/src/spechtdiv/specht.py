"""Specht lattices inside the tabloid permutation module.

A tabloid is stored as a row-assignment tuple: entry v-1 holds the (0-based)
row containing the value v.  That encoding is canonical by construction — two
tabloids are equal iff the tuples are equal — and it keeps large supports
cheap.  ``tabloid_rows`` converts back to sorted row tuples for display and
for the lexicographic-on-rows ordering used in deterministic output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from math import factorial, gcd, prod

from .combinatorics import Partition, dim_specht, standard_tableaux, transpose
from .linalg import (
    Matrix,
    det,
    first_divisor,
    hermite_form,
    kernel_mod,
    mat_mul,
    p_part_chain,
    smith_normal_form,
    valuation,
)

Tabloid = tuple[int, ...]
TabloidVector = dict[Tabloid, int]
Tableau = tuple[tuple[int, ...], ...]


def tabloid_of(t: Tableau) -> Tabloid:
    n = sum(len(r) for r in t)
    row_of = [0] * n
    for i, row in enumerate(t):
        for v in row:
            row_of[v - 1] = i
    return tuple(row_of)


def tabloid_rows(key: Tabloid, nrows: int | None = None) -> tuple[tuple[int, ...], ...]:
    if nrows is None:
        nrows = max(key) + 1
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for v, i in enumerate(key, start=1):
        rows[i].append(v)
    return tuple(tuple(r) for r in rows)


def tabloid_sort_key(key: Tabloid):
    """Lexicographic on concatenated sorted rows."""
    return sum(tabloid_rows(key), ())


@cache
def _signed_perms(entries: tuple[int, ...]):
    """All permutations of the entries, each with its sign."""
    out = []
    for perm in itertools.permutations(entries):
        inv = sum(
            1
            for i in range(len(perm))
            for j in range(i + 1, len(perm))
            if perm[i] > perm[j]
        )
        out.append((perm, -1 if inv & 1 else 1))
    return out


def tableau_columns(t: Tableau) -> list[tuple[int, ...]]:
    ncols = len(t[0])
    return [tuple(row[j] for row in t if len(row) > j) for j in range(ncols)]


def expand_polytabloid(t: Tableau) -> TabloidVector:
    """Signed sum of the tabloid over the column stabilizer of t."""
    n = sum(len(r) for r in t)
    cols = tableau_columns(t)
    result: TabloidVector = {}
    for choice in itertools.product(*(_signed_perms(c) for c in cols)):
        row_of = [0] * n
        sign = 1
        for perm, s in choice:
            sign *= s
            for pos, v in enumerate(perm):
                row_of[v - 1] = pos
        key = tuple(row_of)
        c = result.get(key, 0) + sign
        if c:
            result[key] = c
        else:
            del result[key]
    return result


def pairing(u: TabloidVector, v: TabloidVector) -> int:
    if len(v) < len(u):
        u, v = v, u
    return sum(c * v.get(t, 0) for t, c in u.items() if t in v)


def vec_add(u: TabloidVector, v: TabloidVector, scale: int = 1) -> TabloidVector:
    out = dict(u)
    for t, c in v.items():
        s = out.get(t, 0) + scale * c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def vec_scale(u: TabloidVector, scale: int) -> TabloidVector:
    if scale == 0:
        return {}
    return {t: scale * c for t, c in u.items()}


def act(v: TabloidVector, sigma: dict[int, int]) -> TabloidVector:
    """Apply a permutation of [1,n] to every tabloid in the support."""
    out: TabloidVector = {}
    for key, c in v.items():
        new = list(key)
        for val, row in enumerate(key, start=1):
            new[sigma.get(val, val) - 1] = row
        out[tuple(new)] = c
    return out


def row_symmetrize(t: Tableau) -> TabloidVector:
    """Image of the polytabloid under the row-stabilizer sum of t."""
    base = expand_polytabloid(t)
    result: TabloidVector = {}
    for choice in itertools.product(*(itertools.permutations(r) for r in t)):
        sigma = {}
        for row, perm in zip(t, choice):
            sigma.update(zip(row, perm))
        result = vec_add(result, act(base, sigma))
    return result


@dataclass(frozen=True)
class SpechtBasis:
    shape: Partition
    tableaux: tuple[Tableau, ...]
    vectors: tuple[TabloidVector, ...]

    @property
    def tabloid_index(self) -> list[Tabloid]:
        seen = set()
        for v in self.vectors:
            seen.update(v)
        return sorted(seen, key=tabloid_sort_key)


@cache
def build_basis(lam: Partition) -> SpechtBasis:
    tabs = standard_tableaux(lam)
    vectors = tuple(expand_polytabloid(t) for t in tabs)
    assert len(vectors) == dim_specht(lam)
    return SpechtBasis(lam, tabs, vectors)


def james_factor(lam: Partition) -> int:
    lamt = transpose(lam) + (0,)
    return prod(factorial(lamt[i] - lamt[i + 1]) for i in range(len(lamt) - 1))


@dataclass(frozen=True)
class GramContext:
    basis: SpechtBasis
    gram: Matrix
    james_factor: int
    gram_scaled: Matrix | None


def gram_matrix(lam: Partition, scaled: bool = False) -> GramContext:
    basis = build_basis(lam)
    vecs = basis.vectors
    d = len(vecs)
    gram = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            gram[i][j] = gram[j][i] = pairing(vecs[i], vecs[j])
    jf = james_factor(lam)
    scaled_mat = None
    if scaled:
        for row in gram:
            for x in row:
                if x % jf:
                    raise ArithmeticError(
                        f"scaling factor {jf} does not divide Gram entry {x}"
                    )
        scaled_mat = [[x // jf for x in row] for row in gram]
    return GramContext(basis, gram, jf, scaled_mat)


_full_chains: dict[Partition, tuple[tuple[int, ...], int]] = {}


def gram_chain(lam: Partition) -> tuple[tuple[int, ...], int]:
    """Elementary divisors and determinant of the Gram matrix.

    The chain always has full length dim_specht(lam) since the form is
    nondegenerate over the rationals.
    """
    if lam not in _full_chains:
        ctx = gram_matrix(lam)
        chain, determinant = smith_normal_form(ctx.gram)
        assert determinant is not None
        assert len(chain) == len(ctx.gram) and determinant != 0
        _full_chains[lam] = (tuple(chain), determinant)
    return _full_chains[lam]


@lru_cache(maxsize=None)
def gram_p_part(lam: Partition, p: int) -> tuple[int, ...]:
    """Chain of p-power parts of the Gram elementary divisors.

    Reuses a previously computed full chain when available; otherwise runs
    the p-local reduction, which is far cheaper for large shapes.
    """
    if lam in _full_chains:
        return tuple(p ** valuation(d, p) for d in _full_chains[lam][0])
    ctx = gram_matrix(lam)
    return tuple(p_part_chain(ctx.gram, p))


@lru_cache(maxsize=None)
def gram_det(lam: Partition) -> int:
    """Signed Gram determinant, by fraction-free elimination."""
    if lam in _full_chains:
        return _full_chains[lam][1]
    return det(gram_matrix(lam).gram)


class MembershipError(ValueError):
    """Vector not in the integer span of the standard basis."""


@lru_cache(maxsize=None)
def _basis_solver(shape: Partition):
    """Standard-tabloid keys and the inverse coordinate matrix of a basis.

    The matrix of standard-tabloid coefficients of the standard polytabloids
    is invertible (classically, unitriangular in dominance order), so solving
    against it determines candidate coordinates uniquely.
    """
    basis = build_basis(shape)
    d = len(basis.vectors)
    keys = [tabloid_of(t) for t in basis.tableaux]
    a = [
        [Fraction(basis.vectors[j].get(keys[i], 0)) for j in range(d)]
        for i in range(d)
    ]
    inv = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    for col in range(d):
        piv = next(i for i in range(col, d) if a[i][col])
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = 1 / a[col][col]
        a[col] = [x * f for x in a[col]]
        inv[col] = [x * f for x in inv[col]]
        for i in range(d):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return keys, inv


def straighten(v: TabloidVector, basis: SpechtBasis) -> list[int]:
    """Integer coordinates of v with respect to the standard basis.

    Solves against the standard-tabloid coordinates and verifies the full
    reconstruction, which catches non-members of the lattice.
    """
    keys, inv = _basis_solver(basis.shape)
    rhs = [v.get(k, 0) for k in keys]
    coords = [sum(f * r for f, r in zip(row, rhs) if r) for row in inv]
    if any(c.denominator != 1 for c in coords):
        raise MembershipError("vector is not an integral standard-basis combination")
    ints = [int(c) for c in coords]
    recon: TabloidVector = {}
    for c, w in zip(ints, basis.vectors):
        if c:
            recon = vec_add(recon, w, c)
    if recon != v:
        raise MembershipError("vector lies outside the Specht lattice")
    return ints


# --- two-column kernel-intersection machinery ------------------------------


def _primes_up_to(m: int) -> list[int]:
    sieve = [True] * (m + 1)
    out = []
    for q in range(2, m + 1):
        if sieve[q]:
            out.append(q)
            for mult in range(q * q, m + 1, q):
                sieve[mult] = False
    return out


def quasi_factorial(m: int) -> int:
    """Product over primes q <= m of the largest power of q not exceeding m."""
    if m < 1:
        raise ValueError("m must be positive")
    result = 1
    for q in _primes_up_to(m):
        qk = q
        while qk * q <= m:
            qk *= q
        result *= qk
    return result


def position_sum(column: tuple[int, ...], zeta: tuple[int, ...]) -> int:
    """Sum of the 1-based positions of the zeta values inside the column."""
    return sum(column.index(z) + 1 for z in zeta)


def column_slide(t: Tableau, k: int) -> TabloidVector:
    """Signed sum over moving k second-column entries to the first column.

    For each k-subset of second-column positions, the chosen entries are
    appended (in order) at the bottom of the first column and the resulting
    polytabloid enters with sign (-1) to the position sum.
    """
    h = sum(1 for row in t if len(row) == 2)
    col1 = [row[0] for row in t]
    col2 = [t[i][1] for i in range(h)]
    result: TabloidVector = {}
    for idxs in itertools.combinations(range(h), k):
        chosen = set(idxs)
        sign = -1 if sum(i + 1 for i in idxs) & 1 else 1
        new_col1 = col1 + [col2[i] for i in idxs]
        # The appended entries leave the first column unsorted; the literal
        # tableau's polytabloid differs from the sorted-column expansion by
        # the sign of the sorting permutation.
        inversions = sum(
            1
            for i in range(len(new_col1))
            for j in range(i + 1, len(new_col1))
            if new_col1[i] > new_col1[j]
        )
        if inversions & 1:
            sign = -sign
        remaining = [col2[i] for i in range(h) if i not in chosen]
        rows = [
            (new_col1[i], remaining[i]) if i < h - k else (new_col1[i],)
            for i in range(len(new_col1))
        ]
        result = vec_add(result, expand_polytabloid(tuple(rows)), sign)
    return result


def conm5_check(n: int, h: int) -> tuple[bool, dict]:
    """Compare the iterated slide-map kernel lattice with the form kernel.

    Starting from the full Specht lattice of shape (2^h, 1^(n-2h)), repeatedly
    intersect with the kernel, modulo n-2h+1+k, of the k-fold slide map scaled
    by k-quasi-factorial over the first divisor of the running lattice.  The
    final lattice must equal the kernel of the Gram pairing mod n!/rank.
    """
    if not 1 <= h <= n // 2:
        raise ValueError(f"need 1 <= h <= n/2, got h={h}, n={n}")
    b = n - 2 * h + 1
    shape0 = (2,) * h + (1,) * (n - 2 * h)
    basis0 = build_basis(shape0)
    d0 = len(basis0.vectors)
    lattice = [[int(i == j) for j in range(d0)] for i in range(d0)]
    gammas, coeffs, moduli = [], [], []
    for k in range(1, h + 1):
        shape_k = (2,) * (h - k) + (1,) * (n - 2 * h + 2 * k)
        basis_k = build_basis(shape_k)
        a_cols = [straighten(column_slide(t, k), basis_k) for t in basis0.tableaux]
        a_k = [list(col) for col in zip(*a_cols)]
        gamma = first_divisor(lattice)
        qf = quasi_factorial(k)
        c = qf // gcd(qf, gamma)
        gammas.append(gamma)
        coeffs.append(c)
        moduli.append(b + k)
        lat_t = [list(col) for col in zip(*lattice)]
        m_k = [[c * x for x in row] for row in mat_mul(a_k, lat_t)]
        w = kernel_mod(m_k, b + k)
        lattice = hermite_form(mat_mul(w, lattice))
    ctx = gram_matrix(shape0)
    target = kernel_mod(ctx.gram, factorial(n) // d0)
    holds = hermite_form(lattice) == target
    report = {
        "n": n,
        "h": h,
        "rank": d0,
        "gammas": gammas,
        "coefficients": coeffs,
        "moduli": moduli,
        "holds": holds,
    }
    return holds, report

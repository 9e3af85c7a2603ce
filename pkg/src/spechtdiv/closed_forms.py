"""Closed-form evaluators for special partition families.

Each evaluator here has an exact counterpart in the brute-force route
(Gram matrix + Smith form); the test suite cross-validates them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial, prod

from .combinatorics import (
    Partition,
    carter_payne_shift,
    dim_specht,
    first_row_hooks,
    regularity,
    strip_skew_hook,
    transpose,
)
from .jantzen import FormalSum
from .linalg import GroupDecomposition, valuation
from .specht import (
    TabloidVector,
    expand_polytabloid,
    pairing,
    row_symmetrize,
    vec_add,
    vec_scale,
)


def _digits(x: int, p: int) -> list[int]:
    out = []
    while x:
        out.append(x % p)
        x //= p
    return out


def contains_base_p(s: int, t: int, p: int) -> int:
    """1 if s+1 contains t to base p, else 0.

    Containment: t = 0 (with s >= 0), or the top p-adic digit of s+1 sits
    strictly above that of t and every digit of t is 0 or the matching digit
    of s+1.
    """
    if s < 0:
        return 0
    if t == 0:
        return 1
    if t < 0:
        return 0
    sd = _digits(s + 1, p)
    td = _digits(t, p)
    if len(sd) <= len(td):
        return 0
    return int(all(td[i] in (0, sd[i]) for i in range(len(td))))


def F2(k: int, m: int) -> int:
    """Sum of f_2(k, m - 2i) over i >= 0, with a closed-form cross-check."""
    total = sum(contains_base_p(k, m - 2 * i, 2) for i in range(m // 2 + 1))
    if m == 0:
        total += 0  # the i = 0 term is already counted above
    a = _digits(k + 1, 2)
    b = _digits(m, 2)
    big_k = len(a) - 1
    big_m = len(b) - 1  # -1 when m = 0
    if big_k > big_m:
        t = max([s for s in range(1, big_m + 1) if a[s] < b[s]], default=0)
        closed = (
            2 ** sum(a[1 : t + 1])
            * (
                1
                + sum(
                    a[s] * b[s] * 2 ** sum(a[t + 1 : s])
                    for s in range(t + 1, big_m + 1)
                )
            )
            * (0 if (k * m) % 2 else 1)
        )
        assert closed == total, (k, m, closed, total)
    return total


def rank_two_row(n: int, m: int) -> int:
    """Rank of the two-row Specht lattice (n-m, m)."""
    return comb(n, m) * (n - 2 * m + 1) // (n - m + 1)


def _vp_fraction(num: int, den: int, p: int) -> int:
    return valuation(num, p) - valuation(den, p)


@dataclass(frozen=True)
class TwoRowContext:
    n: int
    m: int
    p: int
    f_table: tuple[tuple[int, ...], ...]
    b_table: tuple[tuple[int, ...], ...]
    schaper: tuple[int, ...]  # v_p((n+1-m-i)/(m-i)) for i in [0, m-1]
    mu: tuple[int, ...]  # indices j in [0, m]
    dims_d: tuple[int, ...]  # dim of the simple head of (n-j, j), j in [0, n//2]


@cache
def two_row_context(n: int, m: int, p: int) -> TwoRowContext:
    if not 0 <= 2 * m <= n:
        raise ValueError(f"need 0 <= m <= n/2, got n={n}, m={m}")
    size = n // 2 + 1
    f_table = tuple(
        tuple(contains_base_p(n - 2 * j, i - j, p) for j in range(size))
        for i in range(size)
    )
    # Invert the lower unitriangular f-matrix by forward substitution.
    b = [[0] * size for _ in range(size)]
    for i in range(size):
        b[i][i] = 1
        for j in range(i - 1, -1, -1):
            b[i][j] = -sum(f_table[i][k] * b[k][j] for k in range(j, i))
    schaper = tuple(
        _vp_fraction(n + 1 - m - i, m - i, p) for i in range(m)
    )
    mu = tuple(
        sum(
            schaper[i] * contains_base_p(n - 2 * j, i - j, p)
            for i in range(j, m)
        )
        for j in range(m + 1)
    )
    dims_d = tuple(
        sum(b[j][l] * rank_two_row(n, l) for l in range(j + 1))
        for j in range(size)
    )
    assert all(d >= 0 for d in dims_d)
    return TwoRowContext(
        n, m, p,
        tuple(tuple(row) for row in f_table),
        tuple(tuple(row) for row in b),
        schaper, mu, dims_d,
    )


def _merge_group(pairs) -> GroupDecomposition:
    counts: dict[int, int] = {}
    for modulus, mult in pairs:
        if modulus > 1 and mult > 0:
            counts[modulus] = counts.get(modulus, 0) + mult
    return sorted(counts.items())


def two_row_ediv(n: int, m: int, p: int) -> GroupDecomposition:
    """p-part of the divisor group of the two-row shape (n-m, m)."""
    ctx = two_row_context(n, m, p)
    return _merge_group(
        (p ** ctx.mu[j], ctx.dims_d[j]) for j in range(m)
    )


def cort5_group(n: int, m: int) -> GroupDecomposition:
    """Full divisor group of (n-m, m), valid whenever each prime p > m."""
    return _merge_group(
        (n + 1 - m - j, rank_two_row(n, j)) for j in range(m)
    )


def group_p_part(group: GroupDecomposition, p: int) -> GroupDecomposition:
    return _merge_group((p ** valuation(mod, p), mult) for mod, mult in group)


# --- hooks -----------------------------------------------------------------


@dataclass(frozen=True)
class HookForms:
    n: int
    l: int
    group: GroupDecomposition
    order: int
    decomposition: FormalSum | None
    layers: dict[int, int] | None


def hook_forms(n: int, l: int, p: int | None = None) -> HookForms:
    if not (n >= 2 and 0 <= l <= n - 1):
        raise ValueError(f"invalid hook parameters n={n}, l={l}")
    lam = (n - l,) + (1,) * l if l < n - 1 else (1,) * n
    lf = factorial(l)
    c_high = comb(n - 2, l - 1) if l >= 1 else 0
    group = _merge_group([(lf, comb(n - 2, l)), (n * lf, c_high)])
    order = lf ** comb(n - 1, l) * n**c_high
    decomposition = None
    layers = None
    if p is not None:
        terms: list[tuple[int, Partition, int]] = []
        layer_counts: dict[int, int] = {}

        def add_layer(layer, count):
            if count:
                layer_counts[layer] = layer_counts.get(layer, 0) + count

        if p >= 3:
            if n % p:
                terms.append((1, regularity(lam, p)[1], valuation(lf, p)))
                add_layer(valuation(lf, p), comb(n - 1, l))
            elif l == 0:
                terms.append((1, (n,), 0))
                add_layer(0, 1)
            elif l == n - 1:
                terms.append(
                    (1, regularity((1,) * n, p)[1], valuation(factorial(n), p))
                )
                add_layer(valuation(factorial(n), p), 1)
            else:
                for j, layer, count in (
                    (l, valuation(lf, p), comb(n - 2, l)),
                    (l - 1, valuation(lf * n, p), comb(n - 2, l - 1)),
                ):
                    drop = 1 if j >= n - n // p else 0
                    label = (n - j - drop,) + (1,) * (j + drop)
                    terms.append((1, regularity(label, p)[1], layer))
                    add_layer(layer, count)
        else:
            ctx = two_row_context(n, min(l, n - l - 1), 2)
            ell = l if 2 * l <= n - 1 else n - l - 1
            for j in range(ell + 1):
                mult = F2(n - 2 * j, ell - j)
                if not mult:
                    continue
                layer = valuation(lf * n ** ((l - j) % 2), 2)
                label = (n - j, j) if j else (n,)
                terms.append((mult, label, layer))
                add_layer(layer, mult * ctx.dims_d[j])
        decomposition = FormalSum(tuple(terms))
        layers = layer_counts
    return HookForms(n, l, group, order, decomposition, layers)


def hook_polytabloid(n: int, col: tuple[int, ...]) -> TabloidVector:
    """Polytabloid of the hook shape determined by its first column.

    Alternating in the column entries: an odd rearrangement flips the sign.
    """
    rest = sorted(set(range(1, n + 1)) - set(col))
    rows = [(col[0],) + tuple(rest)] + [(c,) for c in col[1:]]
    inversions = sum(
        1
        for i in range(len(col))
        for j in range(i + 1, len(col))
        if col[i] > col[j]
    )
    vec = expand_polytabloid(tuple(rows))
    return vec_scale(vec, -1) if inversions % 2 else vec


def hook_trigonal_basis(n: int, l: int):
    """Trigonalizing vector tuples (x, y) for the hook shape (n-l, 1^l).

    x pairs single polytabloids with first entry n against standard vectors
    without n in the first column, then orbit sums against the rest.
    """
    xs: list[TabloidVector] = []
    ys: list[TabloidVector] = []
    for b in itertools.combinations(range(2, n), l):
        xs.append(hook_polytabloid(n, (n,) + b))
        ys.append(hook_polytabloid(n, (1,) + b))
    for d in itertools.combinations(range(2, n), l - 1) if l else ():
        total: TabloidVector = {}
        for s in range(1, n):
            if s not in d:
                total = vec_add(total, hook_polytabloid(n, (s,) + d + (n,)))
        xs.append(total)
        ys.append(hook_polytabloid(n, (1,) + d + (n,)))
    return xs, ys


# --- fundamental trigonalization lemma -------------------------------------


class LemFundError(ValueError):
    def __init__(self, condition: str, detail: str):
        super().__init__(f"condition {condition} failed: {detail}")
        self.condition = condition


def lemfund_verify(xs, ys, pair, det: int) -> list[int]:
    """Divisor chain from trigonalizing tuples, after checking all conditions.

    Conditions: nonzero diagonal; zeros below the diagonal; each diagonal
    entry divides its row to the right; the diagonal entries form a
    divisibility chain; the diagonal product equals the determinant up to
    sign.
    """
    m = len(xs)
    if len(ys) != m:
        raise ValueError("tuple lengths differ")
    table = [[pair(x, y) for y in ys] for x in xs]
    for i in range(m):
        if table[i][i] == 0:
            raise LemFundError("i", f"zero diagonal entry at {i}")
    for i in range(m):
        for j in range(i):
            if table[i][j]:
                raise LemFundError("ii", f"nonzero below diagonal at ({i},{j})")
    for i in range(m):
        for j in range(i + 1, m):
            if table[i][j] % table[i][i]:
                raise LemFundError(
                    "iii", f"entry ({i},{j}) not divisible by diagonal {i}"
                )
    for i in range(m - 1):
        if table[i + 1][i + 1] % table[i][i]:
            raise LemFundError("iv", f"diagonal chain breaks at {i}")
    diag_product = prod(table[i][i] for i in range(m))
    if abs(diag_product) != abs(det):
        raise LemFundError(
            "v", f"diagonal product {diag_product} vs determinant {det}"
        )
    return [abs(table[i][i]) for i in range(m)]


# --- two-column shapes -----------------------------------------------------


def two_column_entry(n: int, h: int, xi: tuple, eta: tuple) -> int:
    """Rescaled pairing of the polytabloids with second columns xi and eta."""
    for tup in (xi, eta):
        if len(tup) != h or len(set(tup)) != h or any(
            not 1 <= v <= n for v in tup
        ):
            raise ValueError(f"not an h-subset of [1,n]: {tup}")
    i = len(set(xi) & set(eta))
    value = factorial(h - i) * factorial(n - 2 * h + i) // factorial(n - 2 * h)
    sign = -1 if (h - i + sum(xi) + sum(eta)) % 2 else 1
    return sign * value


def two_column_polytabloid(n: int, second: tuple[int, ...]) -> TabloidVector:
    """Polytabloid with the given second column, first column the sorted rest.

    Alternating in the second-column entries.
    """
    first = sorted(set(range(1, n + 1)) - set(second))
    rows = [
        (first[i], second[i]) if i < len(second) else (first[i],)
        for i in range(len(first))
    ]
    inversions = sum(
        1
        for i in range(len(second))
        for j in range(i + 1, len(second))
        if second[i] > second[j]
    )
    vec = expand_polytabloid(tuple(rows))
    return vec_scale(vec, -1) if inversions % 2 else vec


def _two_column_rho(n: int, second: tuple[int, ...]) -> TabloidVector:
    first = sorted(set(range(1, n + 1)) - set(second))
    rows = [
        (first[i], second[i]) if i < len(second) else (first[i],)
        for i in range(len(first))
    ]
    return row_symmetrize(tuple(rows))


@dataclass(frozen=True)
class TwoColumnStructure:
    n: int
    group: GroupDecomposition
    chain: tuple[int, ...]
    order: int
    x: tuple[TabloidVector, ...]
    y: tuple[TabloidVector, ...]


def two_column_22_order(n: int) -> int:
    return (
        (2 * factorial(n - 4)) ** ((n * n - 3 * n) // 2)
        * (n - 1) ** ((n * n - 3 * n - 2) // 2)
        * (n - 2) ** ((n * n - 5 * n + 2) // 2)
        * 2
    )


def two_column_22_structure(n: int) -> TwoColumnStructure:
    """Group structure and trigonalizing bases for the shape (2,2,1^(n-4))."""
    if n < 6:
        raise ValueError("need n >= 6")
    fac = 2 * factorial(n - 4)
    group = _merge_group(
        [
            (2 ** (n % 2) * fac, 1),
            ((n - 1) * fac, n - 3),
            (2 ** ((n + 1) % 2) * (n - 1) * fac, 1),
            ((n - 2) * (n - 1) * fac, (n * n - 5 * n + 2) // 2),
        ]
    )
    pt = lambda a, b: two_column_polytabloid(n, (a, b))
    rho = lambda a, b: _two_column_rho(n, (a, b))

    ys: list[TabloidVector] = []
    for i in range(1, n - 1):
        ys.append(pt(n - i, n))
    for i in range(1, n - 2):
        ys.append(pt(n - 1 - i, n - 1))
    bc_pairs = [
        (b, c)
        for c in range(n - 2, 3, -1)
        for b in range(c - 1, 1, -1)
        if (b, c) != (2, 3)
    ]
    for b, c in bc_pairs:
        ys.append(pt(b, c))

    xs: list[TabloidVector] = []
    if n % 2:
        xs.append(pt(3, 4))
    else:
        xs.append(vec_add(pt(3, n), vec_scale(pt(3, 4), (n - 2) // 2)))
    for i in range(2, n - 1):
        sign = -1 if (n - i) % 2 else 1
        xs.append(vec_add(pt(n - i, n - 1), pt(1, n - 1), sign))
    bridge = vec_add(
        vec_add(pt(3, n), pt(n - 1, n), -1 if n % 2 else 1),
        pt(3, n - 1),
        -(n - 3),
    )
    if n % 2:
        special = vec_add(
            vec_scale(rho(n - 2, n - 1), (n - 3) // 2),
            bridge,
            -((n - 1) // 2),
        )
    else:
        special = vec_add(rho(n - 2, n - 1), bridge)
    xs.append(special)
    for i in range(2, n - 2):
        xs.append(rho(n - 1 - i, n - 1))
    for b, c in bc_pairs:
        xs.append(rho(b, c))

    chain = lemfund_verify(xs, ys, pairing, two_column_22_order(n))
    return TwoColumnStructure(
        n, group, tuple(chain), two_column_22_order(n), tuple(xs), tuple(ys)
    )


# --- large primes ----------------------------------------------------------


@dataclass(frozen=True)
class LargePrimeReport:
    lam: Partition
    p: int
    case: str  # "simple" or "shifted"
    hooks: tuple[int, ...]
    t: int | None = None
    s: int | None = None
    h_t: int | None = None
    shift: Partition | None = None
    layer: int | None = None
    strips: tuple[Partition, ...] = ()
    dim_shift: int | None = None
    p_part: GroupDecomposition = ()


def large_prime_analyze(lam: Partition, p: int) -> LargePrimeReport:
    """Simple-or-shifted dichotomy for primes above the sub-first-row size."""
    n = sum(lam)
    if len(lam) < 2:
        raise ValueError("one-row shapes carry a unimodular form; nothing to do")
    if p <= n - lam[0]:
        raise ValueError(f"need p > {n - lam[0]}, got p={p}")
    hooks = tuple(first_row_hooks(lam))
    divisible = [j for j, h in enumerate(hooks, start=1) if h % p == 0]
    assert len(divisible) <= 1
    if not divisible:
        return LargePrimeReport(lam, p, "simple", hooks)
    t = divisible[0]
    s = transpose(lam)[t - 1]
    h_t = hooks[t - 1]
    layer = valuation(h_t, p)
    shift = carter_payne_shift(lam, t)
    strips = tuple(strip_skew_hook(lam, i, t) for i in range(2, s + 1))
    dim_shift = sum(
        (-1) ** (s - i) * dim_specht(strip)
        for i, strip in zip(range(2, s + 1), strips)
    )
    assert dim_shift >= 0
    assert strips[-1] == shift
    p_part = _merge_group([(p**layer, dim_shift)])
    return LargePrimeReport(
        lam, p, "shifted", hooks, t, s, h_t, shift, layer, strips, dim_shift,
        p_part,
    )


# --- printed Schaper identities for three- and four-part families ----------

_SCHAPER_FAMILIES = {
    "n-3,2,1": {
        "min_n": 6,
        "head": lambda n: (n - 3, 2, 1),
        "terms": lambda n: [
            (Fraction(3), lambda n: (n - 3, 3)),
            (Fraction(n - 1), lambda n: (n - 2, 2)),
            (Fraction(3, n - 1), lambda n: (n,)),
            (Fraction(n - 3), lambda n: (n - 2, 1, 1)),
        ],
    },
    "n-4,2^2": {
        "min_n": 8,
        "head": lambda n: (n - 4, 2, 2),
        "terms": lambda n: [
            (Fraction(3, 2), lambda n: (n - 4, 4)),
            (Fraction(n - 2, 2), lambda n: (n - 2, 2)),
            (Fraction(3, n - 2), lambda n: (n - 1, 1)),
            (Fraction(2), lambda n: (n - 4, 3, 1)),
            (Fraction(n - 3), lambda n: (n - 3, 2, 1)),
            (Fraction(2, n - 3), lambda n: (n - 2, 1, 1)),
        ],
    },
    "n-4,3,1": {
        "min_n": 8,
        "head": lambda n: (n - 4, 3, 1),
        "terms": lambda n: [
            (Fraction(4, n - 2), lambda n: (n,)),
            (Fraction(n - 2), lambda n: (n - 3, 3)),
            (Fraction(4), lambda n: (n - 4, 4)),
            (Fraction(n - 4, 2), lambda n: (n - 2, 1, 1)),
            (Fraction(n - 5), lambda n: (n - 3, 2, 1)),
        ],
    },
    "n-4,2,1^2": {
        "min_n": 8,
        "head": lambda n: (n - 4, 2, 1, 1),
        "terms": lambda n: [
            (Fraction(2), lambda n: (n - 4, 2, 2)),
            (Fraction(4), lambda n: (n - 4, 3, 1)),
            (Fraction(n - 1), lambda n: (n - 3, 2, 1)),
            (Fraction(1, 2), lambda n: (n - 4, 4)),
            (Fraction(2, n - 1), lambda n: (n - 2, 2)),
            (Fraction(n - 1, 4), lambda n: (n,)),
            (Fraction(n - 4), lambda n: (n - 3, 1, 1, 1)),
        ],
    },
}


def schaper_families() -> list[str]:
    return list(_SCHAPER_FAMILIES)


def schaper_family_head(family: str, n: int) -> Partition:
    spec = _SCHAPER_FAMILIES[family]
    if n < spec["min_n"]:
        raise ValueError(f"family {family} needs n >= {spec['min_n']}")
    return spec["head"](n)


def schaper_family(family: str, n: int, p: int) -> FormalSum:
    """Signed coefficient list of the printed self-dual-quotient identity."""
    if family not in _SCHAPER_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    spec = _SCHAPER_FAMILIES[family]
    if n < spec["min_n"]:
        raise ValueError(f"family {family} needs n >= {spec['min_n']}")
    terms = []
    for frac, label in spec["terms"](n):
        coeff = _vp_fraction(frac.numerator, frac.denominator, p)
        if coeff:
            terms.append((coeff, label(n), None))
    return FormalSum(tuple(terms))


# --- rectangular scaling ---------------------------------------------------


def rectangular_scale(mu: Partition) -> tuple[Partition, int]:
    """Drop the lower-right node of a rectangle; divisors scale by the height."""
    h = len(mu)
    if mu[0] != mu[h - 1]:
        raise ValueError(f"{mu} is not rectangular")
    nu = list(mu)
    nu[h - 1] -= 1
    return tuple(x for x in nu if x), h

"""Higher-level diagnostics: modular ranks, divisibility bounds,
unimodularity obstructions, and invariants of self-conjugate shapes."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd, isqrt, prod

from .combinatorics import Partition, cell_hooks, dim_specht, is_regular, transpose
from .linalg import rank_mod_p, valuation
from .specht import gram_matrix, james_factor


def dim_simple(lam: Partition, p: int) -> int:
    """Dimension of the simple head over F_p: the modular rank of the form."""
    return rank_mod_p(gram_matrix(lam).gram, p)


def first_gram_divisor(lam: Partition) -> int:
    """First elementary divisor: the gcd of all Gram entries."""
    g = 0
    for row in gram_matrix(lam).gram:
        for x in row:
            g = gcd(g, x)
    return g


def james_bound_report(lam: Partition) -> dict:
    """Sandwich for the first divisor: column-difference factorial product
    below, its exponent-weighted variant above."""
    lamt = transpose(lam) + (0,)
    lower = james_factor(lam)
    upper = prod(
        factorial(lamt[i] - lamt[i + 1]) ** (i + 1) for i in range(len(lamt) - 1)
    )
    d1 = first_gram_divisor(lam)
    return {
        "partition": lam,
        "lower": lower,
        "first_divisor": d1,
        "upper": upper,
        "ok": d1 % lower == 0 and upper % d1 == 0,
    }


# --- self-conjugate shapes -------------------------------------------------


@dataclass(frozen=True)
class SymmetricReport:
    lam: Partition
    rank: int
    durfee: int
    diag_hook_product: int  # H: product of principal hooks
    middle_jump: int  # quotient of the two middle divisors
    alpha: int  # product of strictly-upper-diagonal hooks
    gamma: int  # first elementary divisor
    square_part: int  # largest h with h^2 | H
    jump_square_ok: bool  # H / jump is a square in Q
    jump_integral_ok: bool  # H / jump is an integer
    middle_identity_ok: bool  # (n!/rank) / jump is the square of d_{r/2}
    gamma_bound_ok: bool
    signed_h_square: bool  # (-1)^((n-s)/2) H is a perfect square


def _is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


def symmetric_report(lam: Partition) -> SymmetricReport:
    if transpose(lam) != lam:
        raise ValueError(f"{lam} is not self-conjugate")
    from .specht import gram_chain

    chain, _ = gram_chain(lam)
    r = len(chain)
    if r % 2:
        raise ValueError("odd rank for a self-conjugate shape")
    n = sum(lam)
    s = max(i + 1 for i in range(len(lam)) if lam[i] >= i + 1)
    h_prod = prod(2 * lam[i] - 2 * i - 1 for i in range(s))
    jump = chain[r // 2] // chain[r // 2 - 1]
    assert chain[r // 2] % chain[r // 2 - 1] == 0
    hooks = cell_hooks(lam)
    alpha = prod(h for (i, j), h in hooks.items() if j > i)
    gamma = chain[0]
    square_part = max(
        h for h in range(1, isqrt(h_prod) + 1) if h_prod % (h * h) == 0
    )
    signed = (-1) ** ((n - s) // 2) * h_prod
    signed_square = _is_square(signed)
    if signed_square:
        bound = alpha * isqrt(h_prod)
    else:
        bound = alpha * square_part
    return SymmetricReport(
        lam=lam,
        rank=r,
        durfee=s,
        diag_hook_product=h_prod,
        middle_jump=jump,
        alpha=alpha,
        gamma=gamma,
        square_part=square_part,
        jump_square_ok=_is_square(h_prod * jump),
        jump_integral_ok=h_prod % jump == 0,
        middle_identity_ok=factorial(n) // r == jump * chain[r // 2 - 1] ** 2,
        gamma_bound_ok=bound % gamma == 0,
        signed_h_square=signed_square,
    )


# --- unimodularity obstructions for two-row shapes -------------------------


def unimodular_local(n: int, m: int, p: int) -> tuple[bool, list[int]]:
    """Evenness test of the self-dual-quotient multiplicities at p.

    An invariant unimodular lattice at p forces every multiplicity
    v_p((n - 2m + 1 + i) / i), i in [1, m], to be even.
    """
    if not 1 <= m <= n // 2:
        raise ValueError(f"need 1 <= m <= n/2, got n={n}, m={m}")
    mults = [
        valuation(n - 2 * m + 1 + i, p) - valuation(i, p) for i in range(1, m + 1)
    ]
    return all(v % 2 == 0 for v in mults), mults


def unimodular_global(n: int, m: int) -> dict:
    """Run the local test at every prime up to n; report the failures."""
    from .specht import _primes_up_to

    failures = {}
    for p in _primes_up_to(n):
        ok, mults = unimodular_local(n, m, p)
        if not ok:
            failures[p] = mults
    return {
        "n": n,
        "m": m,
        "passes": not failures,
        "failing_primes": failures,
    }


def pell_search(bound: int) -> list[tuple[int, int, int]]:
    """Positive solutions (x, y, z) of 2y^2 - x^2 = 1 and 3z^2 - x^2 = 2
    with x up to the bound."""
    out = []
    for x in range(1, bound + 1, 2):
        y2, rem2 = divmod(x * x + 1, 2)
        if rem2:
            continue
        z2, rem3 = divmod(x * x + 2, 3)
        if rem3:
            continue
        y = isqrt(y2)
        z = isqrt(z2)
        if y * y == y2 and z * z == z2:
            out.append((x, y, z))
    return out


def regularity_dichotomy(lam: Partition, p: int) -> dict:
    """Modular rank is positive exactly for regular shapes."""
    d = dim_simple(lam, p)
    reg = is_regular(lam, p)
    return {
        "partition": lam,
        "prime": p,
        "dim_simple": d,
        "regular": reg,
        "ok": (d > 0) == reg,
    }

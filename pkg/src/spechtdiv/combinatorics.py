"""Partitions, tableaux and diagram surgery.

Partitions are plain tuples of weakly decreasing positive integers.  All
operations are pure; anything expensive is cached.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from math import factorial, prod

Partition = tuple[int, ...]

_PART_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def check_partition(parts) -> Partition:
    """Validate and canonicalize a sequence of parts.

    Raises ValueError on non-positive or increasing parts.
    """
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse "3,2,1" or exponent notation "2^2,1^4" into a partition tuple."""
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        m = _PART_TOKEN.match(token)
        if not m:
            raise ValueError(f"malformed partition token: {token!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        parts.extend([value] * mult)
    if not parts:
        raise ValueError("empty partition")
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""

    def gen(remaining, maximum):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maximum), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def cell_hooks(lam: Partition) -> dict[tuple[int, int], int]:
    """Hook lengths, keyed by 1-based (row, col)."""
    lamt = transpose(lam)
    return {
        (i, j): lam[i - 1] - j + lamt[j - 1] - i + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    }


def first_row_hooks(lam: Partition) -> list[int]:
    """Hook lengths of the first-row cells over columns 1..lam_2.

    Empty for one-row shapes.
    """
    if len(lam) < 2:
        return []
    lamt = transpose(lam)
    return [lam[0] - j + lamt[j - 1] for j in range(1, lam[1] + 1)]


@dataclass(frozen=True)
class HookData:
    cell_hooks: dict[tuple[int, int], int]
    first_row: tuple[int, ...]


def hook_data(lam: Partition) -> HookData:
    return HookData(cell_hooks(lam), tuple(first_row_hooks(lam)))


@cache
def dim_specht(lam: Partition) -> int:
    """Rank of the Specht lattice, via the hook length formula."""
    n = sum(lam)
    return factorial(n) // prod(cell_hooks(lam).values())


@cache
def standard_tableaux(lam: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All standard tableaux of the given shape.

    Each tableau is a tuple of row tuples.  Ordered by row-reading word,
    lexicographically.
    """
    n = sum(lam)
    results = []
    rows: list[list[int]] = [[] for _ in lam]

    def place(k: int):
        if k > n:
            results.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) >= lam[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue
            row.append(k)
            place(k + 1)
            row.pop()

    place(1)
    results.sort(key=lambda t: sum(t, ()))
    return tuple(results)


def is_standard(t) -> bool:
    rows_ok = all(r[j] < r[j + 1] for r in t for j in range(len(r) - 1))
    cols_ok = all(
        t[i][j] < t[i + 1][j]
        for i in range(len(t) - 1)
        for j in range(len(t[i + 1]))
    )
    return rows_ok and cols_ok


def is_regular(lam: Partition, p: int) -> bool:
    """No p (or more) equal parts, i.e. successive transpose differences < p."""
    lamt = transpose(lam) + (0,)
    return all(lamt[i] - lamt[i + 1] < p for i in range(len(lamt) - 1))


def regularize(lam: Partition, p: int) -> Partition:
    """Push every cell up its ladder to the highest free position.

    The ladder through cell (i, j) consists of the cells (i - k(p-1), j + k);
    cells slide toward larger column index.  Fixes regular partitions.
    """
    cells = {
        (i, j)
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    }
    # Group cells by ladder number l = i + (p-1)(j-1), then refill each
    # ladder from its topmost (largest column) position downwards.
    ladders: dict[int, int] = {}
    for (i, j) in cells:
        l = i + (p - 1) * (j - 1)
        ladders[l] = ladders.get(l, 0) + 1
    new_rows: dict[int, int] = {}
    for l, count in ladders.items():
        # Positions on ladder l, from the top: j as large as possible with
        # i = l - (p-1)(j-1) >= 1.
        j = (l - 1) // (p - 1) + 1
        i = l - (p - 1) * (j - 1)
        for _ in range(count):
            new_rows[i] = new_rows.get(i, 0) + 1
            i += p - 1
            j -= 1
    result = tuple(new_rows[i] for i in sorted(new_rows))
    return check_partition(result)


def regularity(lam: Partition, p: int) -> tuple[bool, Partition]:
    if is_regular(lam, p):
        return True, lam
    return False, regularize(lam, p)


def carter_payne_shift(mu: Partition, j: int) -> Partition:
    """Cut the last row meeting column j at column j-1, push the rest to row 1."""
    if len(mu) < 2 or not 1 <= j <= mu[1]:
        raise ValueError(f"column {j} out of range for {mu}")
    mut = transpose(mu)
    r = mut[j - 1]  # last row meeting column j
    parts = list(mu)
    parts[0] = mu[0] + mu[r - 1] - j + 1
    parts[r - 1] = j - 1
    result = tuple(p for p in parts if p > 0)
    result = check_partition(result)
    assert sum(result) == sum(mu)
    return result


def strip_skew_hook(lam: Partition, i: int, t: int) -> Partition:
    """Remove the rim hook of cell (i, t), append its length to row 1.

    Rim hook removal is done on first-column beta-numbers: subtract the hook
    length from the i-th beta-number and re-sort.
    """
    if not (1 <= i <= len(lam) and 1 <= t <= lam[i - 1]):
        raise ValueError(f"cell ({i},{t}) not in {lam}")
    hook = cell_hooks(lam)[(i, t)]
    r = len(lam)
    betas = [lam[k] + (r - 1 - k) for k in range(r)]
    betas[i - 1] -= hook
    if betas[i - 1] < 0 or len(set(betas)) < r:
        raise ValueError(f"cell ({i},{t}) hook not removable from {lam}")
    betas.sort(reverse=True)
    stripped = [betas[k] - (r - 1 - k) for k in range(r)]
    stripped[0] += hook
    result = tuple(p for p in stripped if p > 0)
    result = check_partition(result)
    assert sum(result) == sum(lam)
    return result

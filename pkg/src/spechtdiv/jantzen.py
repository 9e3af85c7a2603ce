"""Filtration-layer arithmetic for divisor chains at a fixed prime.

The layer profile of a chain records, for each i >= 0, how many divisors
have p-valuation exactly i.  Layer profiles are the ground truth here;
statements about individual simple constituents live in closed_forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .combinatorics import Partition, transpose
from .linalg import valuation


@dataclass(frozen=True)
class JantzenProfile:
    prime: int
    layer_dims: dict[int, int]

    @property
    def rank(self) -> int:
        return sum(self.layer_dims.values())

    @property
    def weighted_sum(self) -> int:
        return sum(i * d for i, d in self.layer_dims.items())


@dataclass(frozen=True)
class FormalSum:
    """Integer combination of partition-labelled classes, optionally layered."""

    terms: tuple[tuple[int, Partition, int | None], ...]

    def __post_init__(self):
        keys = [(label, layer) for _, label, layer in self.terms]
        if len(keys) != len(set(keys)):
            raise ValueError("duplicate (label, layer) term")

    def coefficient(self, label: Partition, layer: int | None = None) -> int:
        for c, lab, lay in self.terms:
            if lab == label and lay == layer:
                return c
        return 0


def layers_from_divisors(chain, rank: int, p: int) -> JantzenProfile:
    chain = list(chain)
    if len(chain) != rank:
        raise ValueError(f"chain length {len(chain)} != rank {rank}")
    dims: dict[int, int] = {}
    for d in chain:
        v = valuation(d, p)
        dims[v] = dims.get(v, 0) + 1
    return JantzenProfile(p, dims)


def distribute_multiplicity(total: int, weighted: int, forced_zero_below: int = 0):
    """Split a total multiplicity over layers when a corollary forces it.

    Returns a layer -> multiplicity map, or the string "underdetermined" when
    neither forcing argument applies.
    """
    if total < 0 or weighted < 0:
        raise ValueError("negative inputs")
    if total == 0:
        if weighted:
            raise ValueError("zero multiplicity with positive weight")
        return {}
    if weighted < forced_zero_below * total:
        raise ValueError(
            f"weighted sum {weighted} below forced floor {forced_zero_below * total}"
        )
    if total == 1:
        return {weighted: 1}
    s = forced_zero_below
    if s >= 1 and weighted <= s * total:
        # Every copy sits at layer >= s and the weight budget allows layer s
        # only, so all copies live there.
        return {s: total}
    return "underdetermined"


def duality_checks(lam: Partition, p: int, chain=None, chain_t=None) -> dict:
    """Mirror symmetry of layer profiles between a shape and its transpose.

    Checks that the layer profile of lam at i matches the profile of the
    transpose at N - i where N = v_p(n!/rank), that nothing lives above N,
    and the positional product identity d_i * d'_{r+1-i} = n!/rank.
    """
    from .specht import gram_chain

    if chain is None:
        chain = gram_chain(lam)[0]
    if chain_t is None:
        chain_t = gram_chain(transpose(lam))[0]
    n = sum(lam)
    rank = len(chain)
    target = factorial(n) // rank
    big_n = valuation(target, p)
    prof = layers_from_divisors(chain, rank, p)
    prof_t = layers_from_divisors(chain_t, rank, p)
    mirror_ok = all(
        prof.layer_dims.get(i, 0) == prof_t.layer_dims.get(big_n - i, 0)
        for i in range(big_n + 1)
    )
    bounded_ok = all(i <= big_n for i in prof.layer_dims)
    products = [chain[i] * chain_t[rank - 1 - i] for i in range(rank)]
    product_ok = all(x == target for x in products)
    return {
        "partition": lam,
        "prime": p,
        "modulus": target,
        "top_layer": big_n,
        "mirror_ok": mirror_ok,
        "bounded_ok": bounded_ok,
        "product_ok": product_ok,
        "ok": mirror_ok and bounded_ok and product_ok,
    }

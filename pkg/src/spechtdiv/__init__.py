"""Exact elementary divisors of Gram matrices of Specht lattices.

Brute-force route: build the standard polytabloid basis, pair it under the
invariant bilinear form, and run an exact Smith reduction.  Closed-form
route: evaluators for two-row shapes, hooks, two-column shapes, large
primes, and several three- and four-part families — each cross-validated
against the brute-force route by the ``verify`` harness.
"""

from .combinatorics import (
    Partition,
    dim_specht,
    format_partition,
    hook_data,
    parse_partition,
    partitions_of,
    regularity,
    transpose,
)
from .linalg import (
    assemble_group,
    hermite_form,
    kernel_mod,
    merge_p_parts,
    p_part_chain,
    p_part_of_chain,
    rank_mod_p,
    smith_normal_form,
)
from .specht import (
    build_basis,
    conm5_check,
    expand_polytabloid,
    gram_chain,
    gram_det,
    gram_matrix,
    gram_p_part,
    james_factor,
    pairing,
    straighten,
)
from .closed_forms import (
    F2,
    contains_base_p,
    cort5_group,
    hook_forms,
    hook_trigonal_basis,
    large_prime_analyze,
    lemfund_verify,
    rectangular_scale,
    schaper_family,
    two_column_22_structure,
    two_column_entry,
    two_row_context,
    two_row_ediv,
)
from .analyses import (
    dim_simple,
    james_bound_report,
    pell_search,
    symmetric_report,
    unimodular_global,
    unimodular_local,
)
from .jantzen import duality_checks, layers_from_divisors

__version__ = "1.0"

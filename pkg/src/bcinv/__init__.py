"""Exact-arithmetic (b,c)-inverses over concrete rings.

The library computes and certifies (b,c)-inverses and their
specializations (Moore-Penrose, group, Drazin, core, dual core, the
inverse along an element) over integers mod n, exact matrix rings and
Cayley-table rings, and ships exhaustive verification sweeps for the
underlying existence criteria.
"""

from .engine import (
    ONLY_ONE_SIDED,
    InverseReport,
    bc_exists_annihilator,
    bc_exists_drazin,
    bc_exists_fiveway,
    bc_exists_kcc,
    bc_inverse,
    core_inverse,
    drazin_inverse,
    dual_core_inverse,
    generator_invariance,
    group_inverse,
    group_via_along,
    inner_outer_bc,
    inverse_along,
    is_annihilator_bc,
    is_bc_inverse,
    is_hybrid_bc,
    is_left_bc_invertible,
    is_right_bc_invertible,
    left_bc_family,
    left_right_coincide,
    moore_penrose,
    one_four_inverse,
    one_three_inverse,
    right_bc_family,
    star_duality_check,
)
from .finite import (
    ElementSet,
    FiniteEnumeration,
    brute_force_bc,
    inner_inverses,
    is_direct_sum,
    is_regular,
    left_annihilator,
    left_ideal,
    product_set,
    right_annihilator,
    right_ideal,
)
from .rings import (
    Element,
    Involution,
    MatrixRing,
    ModularRing,
    Ring,
    TableRing,
    parse_ring,
)
from .verify import SuiteReport, cross_backend_check, run_suite, suite_ids

__all__ = [name for name in dir() if not name.startswith("_")]

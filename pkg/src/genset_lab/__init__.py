"""genset-lab: generation invariants (d, m, delta, length) and base-size
invariants (B, H, I) of explicitly constructed finite groups, with exhaustive
oracles for the counting formulas they satisfy."""

__version__ = "0.1.0"

from .arith import binary_ones, factorize, omega, big_omega, prime_pi, zsigmondy_ppd
from .perm import Permutation
from .chain import StabilizerChain, schreier_sims
from .group import (
    ActionInstance,
    GroupHandle,
    alternating,
    close,
    coset_action,
    cyclic,
    dihedral,
    direct_product,
    frobenius21,
    is_primitive,
    metacyclic,
    metacyclic_inverted,
    natural_action,
    quaternion8,
    symmetric,
    sylow_subgroup,
)
from .lattice import GroupTable, SubgroupLattice, length, subgroup_lattice
from .gensets import (
    check_bounds,
    delta,
    invariant_report,
    is_minimal_genset,
    max_minimal_genset_size,
    min_genset_size,
)
from .actions import (
    base_report,
    check_cyclic_quotient_bound,
    check_primitive_height_bound,
    height,
    max_irredundant_base,
    max_minimal_base,
    rc_upper_bound,
)
from .field import FieldElement, FieldMatrix, FiniteField, field_make
from .lie import (
    LieGroupSpec,
    build_genset,
    check_omega_lower_bound,
    check_rank_one_bounds,
    psl_group,
    psl_order,
    verify_construction,
)
from .counts import (
    check_pi_bound,
    constants_audit,
    goursat_maximal_count,
    hom_count_to_cyclic,
    length_formula_sn,
    metacyclic_maximal_count,
)

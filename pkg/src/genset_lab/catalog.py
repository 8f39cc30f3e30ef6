"""The named test catalog: small symmetric/alternating/dihedral/metacyclic
groups, the PSL permutation groups, and the faithful primitive coset actions
used by the verification suites.  Ordering is fixed so reports are stable.
"""

from __future__ import annotations

from .group import (
    ActionInstance,
    GroupHandle,
    alternating,
    coset_action,
    cyclic,
    dihedral,
    direct_product,
    frobenius21,
    is_primitive,
    natural_action,
    quaternion8,
    symmetric,
)
from .lattice import GroupTable, subgroup_lattice
from .lie import LieGroupSpec, psl_group


def catalog_groups() -> list[tuple[str, GroupHandle]]:
    """Small groups whose invariants the suites compute exhaustively."""
    out: list[tuple[str, GroupHandle]] = []
    for n in range(2, 7):
        out.append((f"S{n}", symmetric(n)))
    for n in range(3, 7):
        out.append((f"A{n}", alternating(n)))
    out.append(("C6", cyclic(6)))
    out.append(("C12", cyclic(12)))
    out.append(("C30", cyclic(30)))
    out.append(("D8", dihedral(4)))
    out.append(("Q8", quaternion8()))
    out.append(("F21", frobenius21()))
    return out


def nilpotent_catalog() -> list[tuple[str, GroupHandle]]:
    """Nilpotent groups for the m = delta and d = max_p d(G_p) checks."""
    c2_4 = direct_product(
        direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(2))
    )
    return [
        ("C12", cyclic(12)),
        ("C2^4", c2_4),
        ("D8xC9", direct_product(dihedral(4), cyclic(9))),
        ("Q8xC3", direct_product(quaternion8(), cyclic(3))),
        ("C30", cyclic(30)),
    ]


PSL_SPECS: dict[str, LieGroupSpec] = {
    "PSL2(4)": LieGroupSpec(2, 2, 2),
    "PSL2(5)": LieGroupSpec(2, 5, 1),
    "PSL2(7)": LieGroupSpec(2, 7, 1),
    "PSL2(8)": LieGroupSpec(2, 2, 3),
    "PSL2(9)": LieGroupSpec(2, 3, 2),
}


def psl_catalog() -> list[tuple[str, GroupHandle]]:
    return [(name, psl_group(spec)) for name, spec in PSL_SPECS.items()]


def primitive_coset_actions(G: GroupHandle, prefix: str) -> list[tuple[str, ActionInstance]]:
    """Faithful primitive coset actions of G on its maximal-subgroup cosets,
    one per conjugacy class, ordered by index."""
    lat = subgroup_lattice(G)
    table = lat.table
    reps = lat.maximal_subgroups_up_to_conjugacy()
    reps.sort(key=lambda m: (-m.bit_count(), m))
    out = []
    seen: dict[str, int] = {}
    for mask in reps:
        H = table.subgroup_handle(mask)
        A = coset_action(G, H)
        if not A.faithful:
            continue
        assert is_primitive(A)
        name = f"{prefix}/cosets[{A.domain_size}]"
        n = seen.get(name, 0)
        seen[name] = n + 1
        if n:
            name += chr(ord("a") + n)
        out.append((name, A))
    return out


def catalog_actions() -> list[tuple[str, ActionInstance]]:
    """The action catalog for the invariant-chain suite: natural actions of
    the small groups plus all faithful primitive coset actions of A5, S5 and
    PSL2(q) for q in {7, 8, 9}."""
    out: list[tuple[str, ActionInstance]] = []
    for name, G in catalog_groups():
        out.append((f"{name}/natural", natural_action(G)))
    for name, G in [
        ("A5", alternating(5)),
        ("S5", symmetric(5)),
        ("PSL2(7)", psl_group(PSL_SPECS["PSL2(7)"])),
        ("PSL2(8)", psl_group(PSL_SPECS["PSL2(8)"])),
        ("PSL2(9)", psl_group(PSL_SPECS["PSL2(9)"])),
    ]:
        out.extend(primitive_coset_actions(G, name))
    return out

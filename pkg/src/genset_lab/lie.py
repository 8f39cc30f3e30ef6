"""Type-A (SL/PSL) constructions: the explicit minimal generating sets built
from unit elementary matrices and diagonal torus elements, the projective
permutation action, order formulas, and the omega lower-bound checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import factorize, is_prime, omega, zsigmondy_ppd
from .chain import schreier_sims
from .field import FieldElement, FieldMatrix, FiniteField, field_make, subfield_primitive_element
from .group import GroupHandle, close
from .perm import Permutation

PROJECTIVE_DEGREE_CAP = 10**4


@dataclass(frozen=True)
class LieGroupSpec:
    """SL_n / PSL_n over GF(p^f); rank r = n - 1, q = p^f."""

    n: int
    p: int
    f: int
    family: str = "A"

    def __post_init__(self):
        if self.family != "A":
            raise ValueError("only type A (SL/PSL) is supported")
        if self.n < 2:
            raise ValueError("dimension must be >= 2")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.f < 1:
            raise ValueError("field degree must be >= 1")

    @property
    def r(self) -> int:
        return self.n - 1

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def projective_degree(self) -> int:
        return (self.q**self.n - 1) // (self.q - 1)

    def field(self) -> FiniteField:
        return field_make(self.p, self.f)


@dataclass
class LieGenSet:
    """The 2r + omega(f) matrices {x_i, y_i, z_i} with their torus scalars."""

    spec: LieGroupSpec
    x: list[FieldMatrix]
    y: list[FieldMatrix]
    z: list[FieldMatrix]
    lambdas: list[FieldElement]

    @property
    def matrices(self) -> list[FieldMatrix]:
        return self.x + self.y + self.z

    def __len__(self):
        return 2 * len(self.x) + len(self.z)


def root_elements(spec: LieGroupSpec, i: int) -> tuple[FieldMatrix, FieldMatrix]:
    """(x_i, y_i): identity plus the unit entry at (i, i+1) resp. (i+1, i)."""
    if not 1 <= i <= spec.r:
        raise ValueError(f"root index {i} out of range 1..{spec.r}")
    F = spec.field()
    xi = [[F.one if a == b else F.zero for b in range(spec.n)] for a in range(spec.n)]
    yi = [r[:] for r in xi]
    xi[i - 1][i] = F.one
    yi[i][i - 1] = F.one
    return FieldMatrix(F, xi), FieldMatrix(F, yi)


def torus_element(spec: LieGroupSpec, lam: FieldElement) -> FieldMatrix:
    """diag(lam, lam^-1, 1, ..., 1); determinant 1 by construction."""
    if not lam:
        raise ValueError("torus parameter must be nonzero")
    F = spec.field()
    rows = [[F.one if a == b else F.zero for b in range(spec.n)] for a in range(spec.n)]
    rows[0][0] = lam
    rows[1][1] = lam.inverse()
    return FieldMatrix(F, rows)


def build_genset(spec: LieGroupSpec) -> LieGenSet:
    """The minimal generating set of size 2r + omega(f).

    For each prime e_i of f with primary part f_i = e_i^{a_i}, the torus
    scalar lambda_i is the canonical primitive element of GF(p^{f_i}) inside
    GF(p^f).
    """
    F = spec.field()
    xs, ys = [], []
    for i in range(1, spec.r + 1):
        xi, yi = root_elements(spec, i)
        xs.append(xi)
        ys.append(yi)
    zs, lams = [], []
    for e, a in factorize(spec.f):
        lam = subfield_primitive_element(F, e**a)
        lams.append(lam)
        zs.append(torus_element(spec, lam))
    return LieGenSet(spec, xs, ys, zs, lams)


def sl_order(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q**i - 1
    return out


def psl_order(n: int, q: int) -> int:
    """|PSL_n(q)| = q^{n(n-1)/2} * prod_{i=2..n} (q^i - 1) / gcd(n, q-1)."""
    if n < 2 or q < 2:
        raise ValueError("need n >= 2 and q >= 2")
    return sl_order(n, q) // gcd(n, q - 1)


def _projective_points(F: FiniteField, n: int) -> list[tuple]:
    """Canonical projective points: last nonzero coordinate 1, lex order."""
    points = []
    all_elems = F.elements()
    for code in range(F.q**n):
        vec = []
        c = code
        for _ in range(n):
            vec.append(all_elems[c % F.q])
            c //= F.q
        if not any(vec):
            continue
        last = max(i for i, v in enumerate(vec) if v)
        if vec[last] == F.one:
            points.append(tuple(vec))
    return points


def _canonicalize(vec, one):
    last = max(i for i, v in enumerate(vec) if v)
    if vec[last] == one:
        return tuple(vec)
    scale = vec[last].inverse()
    return tuple(v * scale for v in vec)


def projective_matrix_permutation(M: FieldMatrix, points, point_index) -> Permutation:
    """Row-vector action v -> v*M on canonical projective points."""
    F = M.field
    images = []
    for vec in points:
        out = []
        for j in range(M.n):
            acc = F.zero
            for k in range(M.n):
                if vec[k]:
                    acc = acc + vec[k] * M.rows[k][j]
            out.append(acc)
        images.append(point_index[_canonicalize(out, F.one)])
    return Permutation(images)


def projective_action(spec: LieGroupSpec, matrices) -> list[Permutation]:
    """Permutations induced on the projective points by the given matrices.

    The kernel of the projectivization is exactly the scalar subgroup, so the
    images generate a subgroup of PSL_n(q).
    """
    if spec.projective_degree > PROJECTIVE_DEGREE_CAP:
        raise ValueError(
            f"projective degree {spec.projective_degree} exceeds cap {PROJECTIVE_DEGREE_CAP}"
        )
    F = spec.field()
    points = _projective_points(F, spec.n)
    point_index = {pt: i for i, pt in enumerate(points)}
    return [projective_matrix_permutation(M, points, point_index) for M in matrices]


def psl_group(spec: LieGroupSpec) -> GroupHandle:
    """PSL_n(q) as a permutation group on the projective points."""
    gens = build_genset(spec).matrices
    perms = projective_action(spec, gens)
    handle = GroupHandle(perms, Permutation.identity(spec.projective_degree))
    return handle


@dataclass
class ConstructionReport:
    spec: LieGroupSpec
    set_size: int
    group_order: int
    expected_order: int
    generates: bool
    leave_one_out_orders: list[int]
    all_proper: bool
    subfield_checks: list[dict]
    lower_bound: int

    @property
    def passed(self) -> bool:
        return self.generates and self.all_proper and all(
            c["divides"] for c in self.subfield_checks
        )


def verify_construction(spec: LieGroupSpec) -> ConstructionReport:
    """Verify the 2r + omega(f) set: it generates PSL_n(q), and every
    leave-one-out subset generates a proper subgroup (so m >= 2r + omega(f)).

    Omitting z_i must land in the subfield subgroup over GF(p^{f/e_i}); this is
    recorded as an order-divisibility check.
    """
    gs = build_genset(spec)
    mats = gs.matrices
    for M in mats:
        if M.det() != spec.field().one:
            raise AssertionError("constructed matrix is not in SL")
    perms = projective_action(spec, mats)
    expected = psl_order(spec.n, spec.q)
    full_order = schreier_sims(perms, spec.projective_degree).order()
    generates = full_order == expected

    orders = []
    for drop in range(len(perms)):
        rest = [g for i, g in enumerate(perms) if i != drop]
        orders.append(schreier_sims(rest, spec.projective_degree).order())
    all_proper = all(o < expected for o in orders)

    subfield_checks = []
    primes = [e for e, _ in factorize(spec.f)]
    n_xy = 2 * spec.r
    for idx, e in enumerate(primes):
        sub_order = orders[n_xy + idx]
        bound = sl_order(spec.n, spec.p ** (spec.f // e))
        subfield_checks.append(
            {
                "omitted_torus_index": idx + 1,
                "subfield_prime": e,
                "subgroup_order": sub_order,
                "subfield_sl_order": bound,
                "divides": bound % sub_order == 0,
            }
        )

    return ConstructionReport(
        spec=spec,
        set_size=len(gs),
        group_order=full_order,
        expected_order=expected,
        generates=generates,
        leave_one_out_orders=orders,
        all_proper=all_proper,
        subfield_checks=subfield_checks,
        lower_bound=2 * spec.r + omega(spec.f),
    )


@dataclass
class OmegaReport:
    spec: LieGroupSpec
    group_order: int
    omega_value: int
    lower_bound: int
    holds: bool
    zsigmondy_witnesses: dict


def check_omega_lower_bound(spec: LieGroupSpec) -> OmegaReport:
    """omega(|PSL_n(q)|) >= max(1, (r-1)/2) + omega(f), with the primitive
    prime divisors behind the divisor-chain argument recorded."""
    order = psl_order(spec.n, spec.q)
    w = omega(order)
    # compare 2*omega >= max(2, r-1) + 2*omega(f) to stay in integers
    holds = 2 * w >= max(2, spec.r - 1) + 2 * omega(spec.f)
    lower = max(1, (spec.r - 1) / 2) + omega(spec.f)

    witnesses = {}
    # chain of subfield exponents 1, e1, e1*e2, ... then f*i for i = 2..n
    exps = [1]
    acc = 1
    for e, _ in factorize(spec.f):
        acc *= e
        exps.append(acc)
    exps.extend(spec.f * i for i in range(2, spec.n + 1))
    for i in sorted(set(exps)):
        try:
            witnesses[i] = zsigmondy_ppd(spec.p, i)
        except ValueError:
            witnesses[i] = None
    return OmegaReport(
        spec=spec,
        group_order=order,
        omega_value=w,
        lower_bound=lower,
        holds=holds,
        zsigmondy_witnesses=witnesses,
    )


@dataclass
class SaxlWhistonReport:
    spec: LieGroupSpec
    m: int
    m_exact: bool
    upper_bound: int
    lower_bound: int
    upper_holds: bool
    lower_holds: bool


def check_rank_one_bounds(spec: LieGroupSpec) -> SaxlWhistonReport:
    """Exact m(PSL_2(p^f)) against the max{6, omega(f)+2} upper bound and the
    2 + omega(f) constructive lower bound."""
    if spec.n != 2:
        raise ValueError("rank-one check requires n = 2")
    from .gensets import max_minimal_genset_size

    G = psl_group(spec)
    G.elements()
    m, _, exact = max_minimal_genset_size(G)
    upper = max(6, omega(spec.f) + 2)
    lower = 2 + omega(spec.f)
    return SaxlWhistonReport(
        spec=spec,
        m=m,
        m_exact=exact,
        upper_bound=upper,
        lower_bound=lower,
        upper_holds=m <= upper,
        lower_holds=m >= lower,
    )

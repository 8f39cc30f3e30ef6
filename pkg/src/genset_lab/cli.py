"""Command-line entry point: group-spec ingestion, invariant/action/construct
commands, and the deterministic verification suites.

Reports are JSON (canonical: sorted keys, two-space indent) or CSV.  Group
orders are serialized as decimal strings, permutations in 1-indexed cycle
notation, field elements as constant-first coefficient vectors over GF(p).
Wall-clock timings are opt-in (--timings) so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .arith import factorize, omega
from .group import (
    CLOSURE_CAP,
    ActionInstance,
    CONSTRUCTORS,
    GroupHandle,
    close,
    coset_action,
    frobenius21,
    natural_action,
)
from .field import FiniteField
from .lattice import LATTICE_CAP, subgroup_lattice
from .perm import Permutation

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_PRECONDITION = 4

DEGREE_CAP = 10**4


class SpecError(Exception):
    """Invalid group-spec document (exit 2)."""


class PreconditionError(Exception):
    """Well-formed input that violates an operation precondition (exit 4)."""


# -- serialization helpers -----------------------------------------------------


def perm_str(p: Permutation) -> str:
    return p.cycle_string()


def element_vector(x) -> list[int]:
    """Field element as constant-first coefficient list."""
    return list(x.coeffs)


def matrix_doc(M) -> list[list[list[int]]]:
    return [[element_vector(x) for x in row] for row in M.rows]


def record(name: str, claim: str, status: str, values: dict) -> dict:
    return {"name": name, "claim": claim, "status": status, "values": values}


def order_str(n: int) -> str:
    return str(n)


# -- group-spec documents ------------------------------------------------------


def parse_group_spec(doc: dict) -> GroupHandle:
    """Build a GroupHandle from a GroupSpecDocument dictionary."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SpecError("group spec must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "constructor":
        name = doc.get("name")
        args = doc.get("args", [])
        if name == "frobenius21":
            return frobenius21()
        if name not in CONSTRUCTORS:
            known = sorted(CONSTRUCTORS) + ["frobenius21"]
            raise SpecError(f"unknown constructor {name!r}; known: {known}")
        try:
            return CONSTRUCTORS[name](*args)
        except (TypeError, ValueError) as e:
            raise SpecError(f"constructor {name}{tuple(args)} failed: {e}") from e
    if kind == "permutation":
        degree = doc.get("degree")
        if not isinstance(degree, int) or degree < 1:
            raise SpecError("permutation spec needs a positive integer 'degree'")
        if degree > DEGREE_CAP:
            raise SpecError(f"degree {degree} exceeds cap {DEGREE_CAP}")
        gens = []
        for g in doc.get("generators", []):
            try:
                gens.append(Permutation.parse(g, degree))
            except (ValueError, TypeError) as e:
                raise SpecError(f"bad generator {g!r}: {e}") from e
        if not gens:
            raise SpecError("permutation spec needs at least one generator")
        return close(gens, degree=degree)
    if kind == "matrix":
        return _parse_matrix_spec(doc)
    raise SpecError(f"unknown kind {kind!r}")


def _parse_matrix_spec(doc: dict) -> GroupHandle:
    from .field import FieldMatrix
    from .lie import LieGroupSpec, projective_action

    p = doc.get("p")
    f = doc.get("f", 1)
    dim = doc.get("dimension")
    if not (isinstance(p, int) and isinstance(f, int) and isinstance(dim, int)):
        raise SpecError("matrix spec needs integer 'p', 'f', 'dimension'")
    try:
        spec = LieGroupSpec(dim, p, f)
        F = spec.field()
    except ValueError as e:
        raise SpecError(str(e)) from e
    modulus = doc.get("modulus")
    if modulus is not None and tuple(modulus) != tuple(F.modulus):
        raise SpecError(
            f"unsupported modulus {modulus}; the canonical modulus for "
            f"GF({p}^{f}) is {list(F.modulus)}"
        )
    elems = F.elements()

    def as_element(entry):
        if isinstance(entry, int):
            return elems[entry % F.q]
        return F.element(entry)

    mats = []
    for rows in doc.get("generators", []):
        try:
            mats.append(
                FieldMatrix(F, [[as_element(x) for x in row] for row in rows])
            )
        except (ValueError, TypeError, IndexError) as e:
            raise SpecError(f"bad matrix generator: {e}") from e
    if not mats:
        raise SpecError("matrix spec needs at least one generator")
    if not doc.get("projective", True):
        raise SpecError("only projective matrix actions are supported")
    perms = projective_action(spec, mats)
    return close(perms, degree=spec.projective_degree)


def load_spec_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise SpecError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise SpecError(f"{path} is not valid JSON: {e}") from e


# -- report assembly -----------------------------------------------------------


class ReportBuilder:
    def __init__(self, command: str, input_echo, timings: bool):
        self.doc = {
            "artifact": "genset-lab",
            "version": __version__,
            "command": command,
            "input": input_echo,
            "records": [],
        }
        self.timings = timings

    def add(self, name: str, claim: str, values: dict, status: str = "pass"):
        rec = record(name, claim, status, values)
        self.doc["records"].append(rec)
        return rec

    def run(self, name: str, claim: str, fn):
        """Run one check; fn returns (passed, values)."""
        t0 = time.perf_counter()
        try:
            passed, values = fn()
            status = "pass" if passed else "fail"
        except (ValueError, NotImplementedError) as e:
            status, values = "skip", {"reason": str(e)}
        rec = self.add(name, claim, values, status)
        if self.timings:
            rec["wall_clock_s"] = round(time.perf_counter() - t0, 3)
        return rec

    def finish(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for rec in self.doc["records"]:
            counts[rec["status"]] += 1
        self.doc["summary"] = counts
        return self.doc


def emit(doc: dict, fmt: str, out_path: str | None):
    if fmt == "json":
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "claim", "status", "values"])
        for rec in doc["records"]:
            writer.writerow(
                [
                    rec["name"],
                    rec["claim"],
                    rec["status"],
                    json.dumps(rec["values"], sort_keys=True),
                ]
            )
        text = buf.getvalue()
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def exit_code(doc: dict) -> int:
    return EXIT_OK if doc["summary"]["fail"] == 0 else EXIT_CHECK_FAILED


# -- command implementations ---------------------------------------------------


def cmd_invariants(args) -> int:
    from .gensets import invariant_report
    from .lattice import GroupTable

    spec_doc = load_spec_file(args.specfile)
    G = parse_group_spec(spec_doc)
    n = G.order()
    if n > args.lattice_cap:
        raise PreconditionError(
            f"group order {n} exceeds lattice cap {args.lattice_cap}"
        )
    rb = ReportBuilder("invariants", spec_doc, args.timings)
    t = GroupTable(G)
    rep = invariant_report(G, table=t)
    rb.add(
        "generation-invariants",
        "d <= m <= l; delta = sum_p d(Sylow_p)",
        {
            "order": order_str(n),
            "d": rep.d,
            "m": rep.m,
            "m_exact": rep.m_exact,
            "delta": rep.delta,
            "length": rep.length,
            "witness_min": [perm_str(x) for x in rep.witness_min],
            "witness_max": [perm_str(x) for x in rep.witness_max],
            "witness_chain_orders": [h.order() for h in rep.witness_chain]
            if rep.witness_chain
            else None,
        },
        status="pass" if rep.d <= rep.m <= rep.length else "fail",
    )
    doc = rb.finish()
    emit(doc, args.format, args.out)
    if not rep.m_exact:
        return EXIT_RESOURCE
    return exit_code(doc)


def cmd_action(args) -> int:
    from .actions import base_report

    spec_doc = load_spec_file(args.specfile)
    G = parse_group_spec(spec_doc)
    if args.coset is not None:
        lat = subgroup_lattice(G, cap=args.lattice_cap)
        masks = [
            m
            for m in lat.maximal_subgroups_up_to_conjugacy()
            if m.bit_count() == args.coset
        ]
        if not masks:
            raise PreconditionError(
                f"no maximal subgroup of order {args.coset} found"
            )
        A = coset_action(G, lat.table.subgroup_handle(masks[0]))
    elif args.stabilizer is not None:
        point = args.stabilizer - 1
        if not 0 <= point < G.degree:
            raise PreconditionError(f"point {args.stabilizer} out of range")
        stab = G.subgroup([g for g in G.elements() if g(point) == point])
        A = coset_action(G, stab)
    else:
        A = natural_action(G)
    if not A.faithful:
        raise PreconditionError("requested action is not faithful")
    rb = ReportBuilder("action", spec_doc, args.timings)
    rep = base_report(A)
    rb.add(
        "base-invariants",
        "B <= H <= I; RC <= H + 1",
        {
            "domain_size": A.domain_size,
            "order": order_str(A.image.order()),
            "B": rep.B,
            "H": rep.H,
            "I": rep.I,
            "rc_upper": rep.rc_upper,
            "witness_minimal_base": [x + 1 for x in rep.witness_minimal_base],
            "witness_independent": [x + 1 for x in rep.witness_independent],
            "witness_irredundant": [x + 1 for x in rep.witness_irredundant],
        },
        status="pass" if rep.B <= rep.H <= rep.I else "fail",
    )
    doc = rb.finish()
    emit(doc, args.format, args.out)
    return exit_code(doc)


def cmd_construct(args) -> int:
    from .lie import LieGroupSpec, build_genset, verify_construction

    try:
        spec = LieGroupSpec(args.n, args.p, args.f, family=args.family)
    except ValueError as e:
        raise SpecError(str(e)) from e
    if spec.projective_degree > args.degree_cap:
        raise PreconditionError(
            f"projective degree {spec.projective_degree} exceeds cap {args.degree_cap}"
        )
    gs = build_genset(spec)
    rep = verify_construction(spec)
    rb = ReportBuilder("construct", {"family": args.family, "n": args.n, "p": args.p, "f": args.f}, args.timings)
    rb.add(
        f"construct-PSL{spec.n}({spec.q})",
        "the 2r+omega(f) matrices generate PSL_n(q); every leave-one-out subset is proper",
        {
            "set_size": rep.set_size,
            "expected_order": order_str(rep.expected_order),
            "group_order": order_str(rep.group_order),
            "leave_one_out_orders": [order_str(o) for o in rep.leave_one_out_orders],
            "subfield_checks": [
                {k: (order_str(v) if isinstance(v, int) and k.endswith("order") else v) for k, v in c.items()}
                for c in rep.subfield_checks
            ],
            "x": [matrix_doc(M) for M in gs.x],
            "y": [matrix_doc(M) for M in gs.y],
            "z": [matrix_doc(M) for M in gs.z],
            "torus_scalars": [element_vector(lam) for lam in gs.lambdas],
            "field_modulus": list(spec.field().modulus),
        },
        status="pass" if rep.passed else "fail",
    )
    doc = rb.finish()
    emit(doc, args.format, args.out)
    return exit_code(doc)


# -- suites --------------------------------------------------------------------


def _suite_formulas(rb: ReportBuilder, quick: bool):
    from .counts import (
        check_pi_bound,
        constants_audit,
        goursat_maximal_count,
        length_formula_sn,
        metacyclic_maximal_count,
        metacyclic_parameter_sweep,
    )
    from .group import symmetric
    from .lattice import length

    def check_length():
        values = {}
        ok = True
        top = 5 if quick else 6
        for n in range(2, top + 1):
            formula = length_formula_sn(n)
            brute, _ = length(symmetric(n))
            values[f"S{n}"] = {"formula": formula, "lattice": brute}
            ok = ok and formula == brute
        return ok, values

    rb.run(
        "length-formula-Sn",
        "l(S_n) = floor((3n-1)/2) - (binary ones of n)",
        check_length,
    )

    def check_goursat():
        S4 = symmetric(4)
        lat = subgroup_lattice(S4)
        reps = lat.subgroups_up_to_conjugacy()
        ok = True
        values = {"classes": len(reps), "cases": []}
        ns = [2, 6] if quick else [2, 6, 30]
        for mask in reps:
            H = lat.table.subgroup_handle(mask)
            for n in ns:
                rep = goursat_maximal_count(H, n)
                ok = ok and rep.passed
                values["cases"].append(
                    {
                        "H_order": mask.bit_count(),
                        "n": n,
                        "formula": rep.formula_value,
                        "oracle": rep.oracle_value,
                        "bound": rep.bound_value,
                    }
                )
        equality = any(
            c["formula"] == c["bound"] and c["H_order"] == 24 and c["n"] == 6
            for c in values["cases"]
        )
        values["bound_attained_at_S4_C6"] = equality
        return ok and equality, values

    rb.run(
        "goursat-maximal-count",
        "|M(H x C_n)| = |M(H)| + omega(n) + sum_p (|Hom(H,C_p)| - 1) <= 9 + omega(n)",
        check_goursat,
    )

    def check_metacyclic():
        limit = 60 if quick else 200
        tuples = metacyclic_parameter_sweep(limit)
        ok = True
        worst = {"plain": None, "inverted": None}
        for m, n, k in tuples:
            for inverted in (False, True):
                rep = metacyclic_maximal_count(m, n, k, inverted=inverted)
                ok = ok and rep.within_bound
                key = "inverted" if inverted else "plain"
                slack = rep.bound_value - rep.oracle_value
                if worst[key] is None or slack < worst[key]["slack"]:
                    worst[key] = {
                        "m": m, "n": n, "k": k,
                        "count": rep.oracle_value,
                        "bound": rep.bound_value,
                        "slack": slack,
                    }
        frob = metacyclic_maximal_count(7, 3, 2)
        ok = ok and frob.oracle_value == 8 and frob.bound_value == 8
        return ok, {
            "tuples": len(tuples),
            "tightest": worst,
            "frobenius21_count": frob.oracle_value,
        }

    rb.run(
        "metacyclic-maximal-count",
        "maximal subgroups of C_m:C_n <= m + omega(n); inverted case <= 2m + omega(n) + 2",
        check_metacyclic,
    )

    def check_constants():
        rep = constants_audit()
        return rep.passed, {
            "alpha": rep.formula_value,
            "a_value": order_str(5_904_900_000),
            "bound": order_str(rep.bound_value),
        }

    rb.run(
        "constants-audit",
        "max{100*177, 192} = 17700 and 10^5 * 3^10 = 5904900000 < 10^10",
        check_constants,
    )

    def check_pi():
        values = {}
        ok = True
        for n in (54, 100, 1000):
            rep = check_pi_bound(n)
            values[str(n)] = {"pi": rep.formula_value, "holds": rep.within_bound}
            ok = ok and rep.within_bound
        return ok, values

    rb.run("prime-counting", "pi(n) > n/log n and log n < sqrt(n)", check_pi)


def _suite_genset(rb: ReportBuilder, quick: bool, node_budget: int | None):
    from .catalog import catalog_groups, nilpotent_catalog
    from .gensets import check_bounds, delta, min_genset_size, max_minimal_genset_size, sylow_ranks
    from .lattice import GroupTable, length

    heavy_budget = node_budget if node_budget is not None else 200_000

    for name, G in catalog_groups():
        n = G.order()
        if quick and n > 200:
            continue

        def check(G=G, n=n):
            t = GroupTable(G)
            budget = heavy_budget if n > 360 else None
            d, _ = min_genset_size(G, table=t)
            m, wit, exact = max_minimal_genset_size(G, table=t, node_budget=budget)
            ell, _ = length(G, table=t)
            dl = delta(G)
            ok = d <= m <= ell and m <= 10**10 * dl**10
            return ok, {
                "order": order_str(n),
                "d": d,
                "m": m,
                "m_exact": exact,
                "delta": dl,
                "length": ell,
                "witness_max": [perm_str(x) for x in wit],
            }

        rb.run(f"genset[{name}]", "d <= m <= l and m <= 10^10 * delta^10", check)

    for name, G in nilpotent_catalog():

        def check(G=G):
            d, _ = min_genset_size(G)
            m, _, exact = max_minimal_genset_size(G)
            ranks = sylow_ranks(G)
            dl = sum(ranks.values())
            ok = exact and m == dl and d == max(ranks.values())
            return ok, {
                "order": order_str(G.order()),
                "d": d,
                "m": m,
                "delta": dl,
                "sylow_ranks": {str(p): r for p, r in sorted(ranks.items())},
            }

        rb.run(
            f"nilpotent[{name}]",
            "for nilpotent G: m = delta and d = max_p d(Sylow_p)",
            check,
        )


def _suite_actions(rb: ReportBuilder, quick: bool):
    from .actions import (
        base_report,
        check_cyclic_quotient_bound,
        check_primitive_height_bound,
        independent_check_full,
    )
    from .catalog import catalog_actions, PSL_SPECS
    from .group import alternating, cyclic, dihedral, symmetric
    from .lattice import length
    from .lie import LieGroupSpec, psl_group

    for name, A in catalog_actions():
        if quick and A.image.order() > 360:
            continue

        def check(A=A):
            rep = base_report(A)
            ok = rep.B <= rep.H <= rep.I and rep.rc_upper == rep.H + 1
            ok = ok and independent_check_full(A, rep.witness_independent)
            values = {
                "domain_size": A.domain_size,
                "order": order_str(A.image.order()),
                "B": rep.B,
                "H": rep.H,
                "I": rep.I,
                "rc_upper": rep.rc_upper,
            }
            if A.image.order() <= LATTICE_CAP:
                ell, _ = length(A.image)
                values["length"] = ell
                ok = ok and rep.I <= ell
            return ok, values

        rb.run(f"action[{name}]", "B <= H <= I <= l(G); RC <= H + 1", check)

    triples = [
        ("S4/A4", symmetric(4), lambda G: [g for g in G.elements() if g.sign() == 1]),
        ("C6/C3", cyclic(6), lambda G: [G.generators[0] * G.generators[0]]),
        ("D8/C4", dihedral(4), lambda G: [G.generators[0]]),
        ("S5/A5", symmetric(5), lambda G: [g for g in G.elements() if g.sign() == 1]),
        ("S6/A6", symmetric(6), lambda G: [g for g in G.elements() if g.sign() == 1]),
    ]
    for name, G, pick in triples:
        if quick and G.order() > 120:
            continue

        def check(G=G, pick=pick):
            N = G.subgroup(pick(G))
            rep = check_cyclic_quotient_bound(natural_action(G), N)
            ok = rep.holds and rep.delta_independent_for_N
            return ok, {
                "H_G": rep.H_G,
                "H_N": rep.H_N,
                "omega_index": rep.omega_index,
                "delta_subset": [x + 1 for x in rep.delta_subset],
            }

        rb.run(
            f"cyclic-quotient[{name}]",
            "H(G) <= H(N) + omega(|G/N|) for N normal with cyclic quotient",
            check,
        )

    height_cases = [("PSL2(7)", PSL_SPECS["PSL2(7)"], 1, 1), ("PSL2(9)", PSL_SPECS["PSL2(9)"], 1, 2)]
    if not quick:
        height_cases.append(("PSL2(64)", LieGroupSpec(2, 2, 6), 1, 6))
    for name, spec, r, f in height_cases:

        def check(spec=spec, r=r, f=f):
            G = psl_group(spec)
            rep = check_primitive_height_bound(natural_action(G), r, f)
            return rep.holds, {
                "H": rep.H,
                "B": rep.B,
                "bound": rep.bound,
                "margin": rep.margin,
            }

        rb.run(
            f"height-bound[{name}]",
            "H and B at most 177 r^8 + omega(f) for faithful primitive actions",
            check,
        )


def _suite_lie(rb: ReportBuilder, quick: bool):
    from .lie import (
        LieGroupSpec,
        check_omega_lower_bound,
        check_rank_one_bounds,
        psl_order,
        verify_construction,
    )
    from .arith import zsigmondy_ppd
    from .catalog import PSL_SPECS

    construct_specs = [
        ("PSL2(4)", LieGroupSpec(2, 2, 2)),
        ("PSL2(7)", LieGroupSpec(2, 7, 1)),
        ("PSL2(8)", LieGroupSpec(2, 2, 3)),
        ("PSL2(9)", LieGroupSpec(2, 3, 2)),
        ("PSL3(4)", LieGroupSpec(3, 2, 2)),
    ]
    if not quick:
        construct_specs.append(("PSL2(64)", LieGroupSpec(2, 2, 6)))
    for name, spec in construct_specs:

        def check(spec=spec):
            rep = verify_construction(spec)
            return rep.passed, {
                "set_size": rep.set_size,
                "group_order": order_str(rep.group_order),
                "expected_order": order_str(rep.expected_order),
                "leave_one_out_orders": [order_str(o) for o in rep.leave_one_out_orders],
            }

        rb.run(
            f"construction[{name}]",
            "the 2r+omega(f) set generates and every leave-one-out subset is proper",
            check,
        )

    def check_omega():
        ok = True
        values = {}
        for n, p, f in [(2, 2, 2), (2, 2, 3), (2, 3, 2), (2, 2, 4), (2, 3, 3), (2, 2, 6)]:
            rep = check_omega_lower_bound(LieGroupSpec(n, p, f))
            ok = ok and rep.holds
            values[f"PSL{n}({p**f})"] = {
                "omega": rep.omega_value,
                "witnesses": {str(k): v for k, v in rep.zsigmondy_witnesses.items()},
            }
        w4 = omega(psl_order(4, 2))
        values["PSL4(2)"] = {"omega": w4}
        ok = ok and w4 >= 1
        return ok, values

    rb.run(
        "omega-lower-bound",
        "omega(|PSL_n(q)|) >= max(1,(r-1)/2) + omega(f), via Zsigmondy primes",
        check_omega,
    )

    def check_zsigmondy():
        missing = []
        for p in (2, 3, 5, 7):
            for i in range(2, 13):
                if zsigmondy_ppd(p, i) is None:
                    missing.append([p, i])
        expected = [[2, 6], [3, 2], [7, 2]]
        return missing == expected, {"missing": missing, "expected": expected}

    rb.run(
        "zsigmondy-exceptions",
        "p^i - 1 lacks a primitive prime divisor exactly for (2,6) and p+1 = 2^s at i = 2",
        check_zsigmondy,
    )

    rank_one = ["PSL2(4)", "PSL2(5)", "PSL2(7)"] if quick else list(PSL_SPECS)
    for name in rank_one:

        def check(name=name):
            rep = check_rank_one_bounds(PSL_SPECS[name])
            ok = rep.m_exact and rep.upper_holds and rep.lower_holds
            return ok, {
                "m": rep.m,
                "upper_bound": rep.upper_bound,
                "lower_bound": rep.lower_bound,
            }

        rb.run(
            f"rank-one-m[{name}]",
            "2 + omega(f) <= m(PSL_2(p^f)) <= max{6, omega(f) + 2}",
            check,
        )


SUITES = {
    "formulas": [_suite_formulas],
    "genset": [_suite_genset],
    "actions": [_suite_actions],
    "lie": [_suite_lie],
}


def cmd_formulas(args) -> int:
    rb = ReportBuilder("formulas", None, args.timings)
    _suite_formulas(rb, args.quick)
    doc = rb.finish()
    emit(doc, args.format, args.out)
    return exit_code(doc)


def cmd_suite(args) -> int:
    names = ["formulas", "genset", "actions", "lie"] if args.suite == "all" else [args.suite]
    rb = ReportBuilder(f"suite {args.suite}", None, args.timings)
    for name in names:
        if name == "formulas":
            _suite_formulas(rb, args.quick)
        elif name == "genset":
            _suite_genset(rb, args.quick, args.node_budget)
        elif name == "actions":
            _suite_actions(rb, args.quick)
        elif name == "lie":
            _suite_lie(rb, args.quick)
    doc = rb.finish()
    emit(doc, args.format, args.out)
    s = doc["summary"]
    print(
        f"suite {args.suite}: {s['pass']} passed, {s['fail']} failed, {s['skip']} skipped",
        file=sys.stderr,
    )
    return exit_code(doc)


# -- argument parsing ----------------------------------------------------------


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.add_argument("--timings", action="store_true", help="include wall-clock per record")
    p.add_argument("--closure-cap", type=int, default=CLOSURE_CAP)
    p.add_argument("--degree-cap", type=int, default=DEGREE_CAP)
    p.add_argument("--lattice-cap", type=int, default=LATTICE_CAP)
    p.add_argument("--node-budget", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="genset-lab",
        description="generation and base-size invariants of explicit finite groups",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("invariants", help="d, m, delta, length of a group spec")
    p.add_argument("specfile")
    _add_common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("action", help="B, H, I, RC-bound of a faithful action")
    p.add_argument("specfile")
    p.add_argument("--stabilizer", type=int, default=None, metavar="POINT",
                   help="act on cosets of the stabilizer of POINT (1-indexed)")
    p.add_argument("--coset", type=int, default=None, metavar="ORDER",
                   help="act on cosets of a maximal subgroup of this order")
    _add_common(p)
    p.set_defaults(fn=cmd_action)

    p = sub.add_parser("construct", help="build and verify a PSL generating set")
    p.add_argument("--family", default="A", choices=["A"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--f", type=int, default=1)
    _add_common(p)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("formulas", help="run the counting-formula checks")
    p.add_argument("--quick", action="store_true")
    _add_common(p)
    p.set_defaults(fn=cmd_formulas)

    p = sub.add_parser("suite", help="run a verification suite")
    p.add_argument("--suite", choices=["formulas", "genset", "actions", "lie", "all"],
                   default="all")
    p.add_argument("--quick", action="store_true",
                   help="skip the heaviest catalog entries")
    _add_common(p)
    p.set_defaults(fn=cmd_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())

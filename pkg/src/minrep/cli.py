"""Command-line front end for the verification suites.

Every subcommand runs a batch of exact checks, emits a machine-readable
report (json, csv or text) and exits 0 only if all checks pass.  Exit
codes: 0 all pass, 1 check failure, 2 usage error, 3 internal invariant
breach.  Reports are byte-stable for fixed arguments and seed when
--stable is given (wall times omitted, sorted keys).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import bilocal, fockspace, harmonics, massless, oscrep, rootsys
from .reports import Report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

DEFAULT_STATE_CAP = 200_000


class UsageError(ValueError):
    pass


def _parse_ranks(text: str):
    lo, _, hi = text.partition("..")
    return tuple(range(int(lo), int(hi or lo) + 1))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default argument values")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", help="output path (default stdout); directory taken "
                                      "from MINREP_OUT_DIR when set")
    common.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                        help="shorthand for --format json [--out PATH]")
    common.add_argument("--stable", action="store_true",
                        help="byte-stable output: no wall times")
    common.add_argument("--max-states", type=int, default=DEFAULT_STATE_CAP,
                        help="refuse Fock bases larger than this")

    p = argparse.ArgumentParser(
        prog="minrep",
        description="exact verification of oscillator realizations, dual pairs "
                    "and bilocal commutator algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    t1 = add("table1", help="minimal-orbit dimension table")
    t1.add_argument("--ranks-a", type=_parse_ranks, default=None, metavar="LO..HI")
    t1.add_argument("--ranks-b", type=_parse_ranks, default=None, metavar="LO..HI")
    t1.add_argument("--ranks-c", type=_parse_ranks, default=None, metavar="LO..HI")
    t1.add_argument("--ranks-d", type=_parse_ranks, default=None, metavar="LO..HI")

    cr = add("check-relations", help="Chevalley-Serre and structure suites")
    cr.add_argument("--algebra", choices=("su22", "unn", "so-star"), required=True)
    cr.add_argument("--n", type=int, default=2)

    dp = add("check-dual-pair", help="commutant checks")
    dp.add_argument("--algebra", choices=("su22", "so-star"), required=True)
    dp.add_argument("--n", type=int, default=2)

    cb = add("check-bilocal", help="bilocal commutator formula and friends")
    cb.add_argument("--L", type=int, default=3)
    cb.add_argument("--trials", type=int, default=50)
    cb.add_argument("--seed", type=int, default=7)

    dc = add("decompose", help="lowest-weight/gauge decomposition")
    dc.add_argument("--algebra", choices=("so-star",), default="so-star")
    dc.add_argument("--n", type=int, default=2)
    dc.add_argument("--level", type=int, default=3)

    hm = add("harmonics", help="harmonic mode construction and checks")
    hm.add_argument("--nmax", type=int, default=6)

    add("massless", help="light-cone realization checks")

    cl = add("closure", help="flavored bilinear closure at finite cutoff")
    cl.add_argument("--family", choices=("sp-real", "u-pq", "so-star"), required=True)
    cl.add_argument("--k", type=int, default=2)
    cl.add_argument("--flavors", type=int, default=1)
    cl.add_argument("--level", type=int, default=0)
    cl.add_argument("--pair-limit", type=int, default=None)
    return p


def _apply_config(args, argv):
    """File values fill in for any flag not given explicitly on the line."""
    if not args.config:
        return args
    try:
        with open(args.config) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}")
    given = set(argv if argv is not None else sys.argv[1:])
    for key, value in data.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise UsageError(f"unknown config key {key!r}")
        if f"--{key.replace('_', '-')}" not in given:
            setattr(args, attr, value)
    return args


# ---------------------------------------------------------------------------
# command implementations


def run_table1(args) -> tuple[Report, list]:
    ranks = {}
    for fam in "ABCD":
        arg = getattr(args, f"ranks_{fam.lower()}")
        if arg:
            ranks[fam] = tuple(arg)
    rows = rootsys.table1_report(ranks or None)
    rep = Report("table1")
    table = []
    for r in rows:
        fam = r.algebra_label if r.algebra_label[0] not in "ABCD" else r.algebra_label[0]
        rank = 0 if fam == r.algebra_label else int(r.algebra_label[1:])
        g1, gk = rootsys.expected_dims(fam, rank)
        want_h = rootsys.expected_centralizer(fam, rank)
        ok = (r.identities_hold() and r.dim_g1 == g1 and r.gk_dim == gk
              and rootsys.same_algebra_label(r.centralizer_label, want_h))
        rep.add(f"table1/{r.algebra_label}", ok,
                detail=f"H = {r.centralizer_label}, g1 = {r.dim_g1}, gk = {r.gk_dim}")
        table.append({"label": r.algebra_label, "dim_g": r.dim_g,
                      "H_label": r.centralizer_label, "dim_g1": r.dim_g1,
                      "gk_dim": r.gk_dim, "eq_identities_ok": r.identities_hold()})
    return rep, table


def _generators(algebra: str, n: int):
    if algebra == "su22":
        return oscrep.su22_generators()
    if algebra == "unn":
        return oscrep.unn_generators(n)
    return oscrep.so_star_generators(n)


def run_check_relations(args) -> Report:
    gens = _generators(args.algebra, args.n)
    rep = Report(f"check-relations/{gens.algebra_label}")
    rep.extend(oscrep.check_chevalley(gens))
    rep.extend(oscrep.check_theta_sl2(gens))
    derived = oscrep.derive_cartan_matrix(gens)
    rep.add(f"{gens.algebra_label}/cartan-derived", derived == gens.cartan_matrix,
            detail=f"{derived}")
    if args.algebra == "su22":
        rep.extend(oscrep.theta_grading_check())
        rep.extend(oscrep.sl2_centralizer_check())
        # adjoint pairing holds on the compact chain nodes
        rep.add("su22/adjoint/E1F1", gens.E[0].adjoint() == gens.F[0])
        rep.add("su22/adjoint/E3F3", gens.E[2].adjoint() == gens.F[2])
    if args.algebra == "so-star":
        for i, (e, f) in enumerate(zip(gens.E[:-1], gens.F[:-1]), start=1):
            rep.add(f"{gens.algebra_label}/adjoint/E{i}", e.adjoint() == f)
        if args.n == 2:
            rep.extend(oscrep.nilpotent_cone_check())
        if args.n <= 2:
            _, crep = oscrep.casimir_defect(args.n)
            rep.extend(crep)
        else:
            rep.add(f"{gens.algebra_label}/casimir/deferred", True,
                    detail="quadratic Casimir suite runs here for n <= 2; "
                           "call oscrep.casimir_defect(n) for larger ranks")
    return rep


def run_check_dual_pair(args) -> Report:
    if args.algebra == "su22":
        gens = oscrep.su22_generators()
        basis = oscrep.u22_weight_basis()
        return oscrep.check_dual_pair(
            [gens.extras["h"]], [w for _, w in basis],
            label="dual-pair/helicity-u22",
            names_a=["h"], names_b=[n for n, _ in basis])
    gens = oscrep.so_star_generators(args.n)
    pairs = oscrep.so_star_pair_elements(gens)
    rep = oscrep.check_dual_pair(
        oscrep.sp2_triple(args.n), [w for _, w in pairs],
        label=f"dual-pair/sp2-{gens.algebra_label}",
        names_a=["E", "F", "Q"], names_b=[n for n, _ in pairs])
    # negative control: a quadratic outside the commutant must not commute
    from .weylalg import WeylElement, commutator
    bad = WeylElement.monomial([("a", 1)], [("a", 1)])
    fires = not commutator(bad, gens.extras["sp2_E"]).is_zero()
    rep.add(f"dual-pair/{gens.algebra_label}/negative-control", fires,
            negative_control=True,
            detail="a1*a1 must fail to commute with the gauge sp(2)")
    return rep


def run_check_bilocal(args) -> Report:
    rng = random.Random(args.seed)
    rep = Report(f"check-bilocal/L{args.L}/seed{args.seed}")

    def rnd(size):
        return [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                 for _ in range(size)] for _ in range(size)]

    for left in range(1, args.L + 1):
        ident = [[Fraction(int(i == j)) for j in range(left)] for i in range(left)]
        rep.extend(_retitle(bilocal.verify_commutator_formula(ident, ident),
                            f"bilocal/identity/L{left}"))
    ok_all = True
    first_defect = ""
    for t in range(args.trials):
        m, mp = rnd(args.L), rnd(args.L)
        r = bilocal.verify_commutator_formula(m, mp)
        if not r.ok and not first_defect:
            first_defect = r.records[0].defect
        ok_all &= r.ok
    rep.add(f"bilocal/random/L{args.L}/trials{args.trials}", ok_all,
            detail=f"seed {args.seed}", defect=first_defect)

    ok_frob = all(bilocal.frobenius_property_check(rnd(args.L), rnd(args.L),
                                                   rnd(args.L)).ok
                  for _ in range(args.trials))
    rep.add(f"bilocal/frobenius/trials{args.trials}", ok_frob)

    mats2 = [[[Fraction(int(i == a and j == b)) for j in range(2)] for i in range(2)]
             for a in range(2) for b in range(2)]
    kind, comm = bilocal.commutant_type(bilocal.TAlgebra(mats2))
    rep.add("bilocal/commutant/full-mat2", kind == "R" and len(comm) == 1,
            detail=f"type {kind}, dim {len(comm)}")
    kind, comm = bilocal.commutant_type(bilocal.TAlgebra(bilocal.canonical_m_span("C", 1)))
    rep.add("bilocal/commutant/complex-scalars", kind == "C" and len(comm) == 2,
            detail=f"type {kind}, dim {len(comm)}")
    lefts = bilocal.quaternion_left_algebra(1)
    kind, comm = bilocal.commutant_type(bilocal.TAlgebra(lefts))
    rep.add("bilocal/commutant/quaternion-left", kind == "H" and len(comm) == 4,
            detail=f"type {kind}, dim {len(comm)}")

    for kind_name, n in (("R", 2), ("C", 1), ("H", 1)):
        rep.extend(bilocal.canonical_form_check(kind_name, n))
    return rep


def _retitle(rep: Report, prefix: str) -> Report:
    out = Report(rep.title)
    for r in rep.records:
        out.add(f"{prefix}/{r.check_id}", r.passed, negative_control=r.negative_control,
                detail=r.detail, defect=r.defect)
    return out


def run_decompose(args) -> tuple[Report, list]:
    gens = oscrep.so_star_generators(args.n)
    k = 2 * args.n
    modes = [("a", i) for i in range(1, k + 1)] + [("b", i) for i in range(1, k + 1)]
    fock = fockspace.enumerate_basis(modes, args.level, max_states=args.max_states)
    gauge = oscrep.GeneratorSet("sp2", [[2]], E=[gens.extras["sp2_E"]],
                                F=[gens.extras["sp2_F"]], H=[gens.extras["sp2_Q"]])
    table = fockspace.joint_weight_decomposition(gens, gauge, fock)
    rep = Report(f"decompose/{gens.algebra_label}/level{args.level}")
    lw = fockspace.lowest_weight_vectors(gens, fock)
    for level in range(args.level + 1):
        total = sum(len(vs) for (lvl, _), vs in lw.items() if lvl == level)
        rep.add(f"decompose/level{level}/bookkeeping",
                total == table.lw_dimension(level),
                detail=f"{total} lowest-weight vectors vs gauge content "
                       f"{table.lw_dimension(level)}")
        mults = [r.multiplicity for r in table.rows_at(level)]
        rep.add(f"decompose/level{level}/multiplicity-one",
                all(m == 1 for m in mults), detail=f"multiplicities {mults}")
    return rep, table.as_dicts()


def run_harmonics(args) -> Report:
    rep = Report(f"harmonics/nmax{args.nmax}")
    for n in range(1, args.nmax + 1):
        for l in range(n):
            for m in range(-l, l + 1):
                mode = harmonics.build_harmonic(n, l, m)
                rep.extend(harmonics.verify_mode(mode.poly, n, l, m))
    rep.extend(harmonics.level_count_check(args.nmax))
    rep.extend(harmonics.angular_algebra_check())
    rep.add("harmonics/negative-control/z1^2",
            not harmonics.verify_mode(
                harmonics.Poly(4, {(2, 0, 0, 0): harmonics.QI(1)}), 3, 0, 0).ok,
            negative_control=True,
            detail="a non-harmonic polynomial must fail the eigen-checks")
    rng = random.Random(11)
    pts = [tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(4))
           for _ in range(20)]
    ok = True
    for x in pts:
        try:
            if harmonics.sphere_identity_defect(x):
                ok = False
        except harmonics.ConformalInfinityError:
            continue
    rep.add("harmonics/compactification/20-points", ok)
    rep.add("harmonics/compactification/polynomial-identity",
            harmonics.sphere_identity_polynomial_check())
    return rep


def run_massless(args) -> Report:
    rep = Report("massless")
    rep.extend(massless.ccr_check(6))
    rep.extend(massless.vacuum_checks())
    rep.extend(massless.lightlike_identity())
    rep.extend(massless.surd_cancellation_check())
    rep.extend(massless.realization_functoriality_check(3))
    modes = [("a", 1), ("a", 2), ("b", 1), ("b", 2)]
    fock = fockspace.enumerate_basis(modes, 2)
    spectra = {lvl: fockspace.helicity_spectrum(fock, lvl) for lvl in (0, 1, 2)}
    want = {0: {0: 1}, 1: {-1: 2, 1: 2}, 2: {-2: 3, 0: 4, 2: 3}}
    for lvl in (0, 1, 2):
        rep.add(f"massless/helicity/level{lvl}", spectra[lvl] == want[lvl],
                detail=f"{spectra[lvl]}")
    return rep


def run_closure(args) -> Report:
    family = args.family.replace("-", "_")
    return fockspace.truncated_closure_check(family, args.k, args.flavors,
                                             level=args.level,
                                             pair_limit=args.pair_limit)


# ---------------------------------------------------------------------------
# output


def emit(report: Report, args, table: list | None = None) -> str:
    if args.format == "json":
        payload = report.as_dict(stable=args.stable)
        if table is not None:
            payload["table"] = table
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        if table is not None:
            writer = csv.DictWriter(buf, fieldnames=list(table[0].keys()))
            writer.writeheader()
            writer.writerows(table)
        else:
            writer = csv.writer(buf)
            writer.writerow(["check_id", "passed", "negative_control", "detail"])
            for r in sorted(report.records, key=lambda r: r.check_id):
                writer.writerow([r.check_id, r.passed, r.negative_control, r.detail])
        text = buf.getvalue()
    else:
        text = report.to_text() + "\n"
        if table is not None:
            text += "\n" + "\n".join(str(row) for row in table) + "\n"
    out_path = args.out
    if out_path:
        out_dir = os.environ.get("MINREP_OUT_DIR")
        if out_dir and not os.path.isabs(out_path):
            out_path = os.path.join(out_dir, out_path)
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return text


COMMANDS = {
    "table1": run_table1,
    "check-relations": run_check_relations,
    "check-dual-pair": run_check_dual_pair,
    "check-bilocal": run_check_bilocal,
    "decompose": run_decompose,
    "harmonics": run_harmonics,
    "massless": run_massless,
    "closure": run_closure,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args = _apply_config(args, argv)
        if args.json is not None:
            args.format = "json"
            if args.json != "-":
                args.out = args.json
        _validate(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    start = time.monotonic()
    try:
        result = COMMANDS[args.command](args)
    except (fockspace.FockError, oscrep.AlgebraError, rootsys.RootSystemError,
            harmonics.HarmonicError) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if isinstance(result, tuple):
        report, table = result
    else:
        report, table = result, None
    if not args.stable:
        for r in report.records:
            if r.wall_ms is None:
                r.wall_ms = (time.monotonic() - start) * 1000 / max(1, len(report.records))
    emit(report, args, table)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


DESK_SCALE_N = 8


def _validate(args):
    if getattr(args, "n", 1) < 1:
        raise UsageError("--n must be at least 1")
    if getattr(args, "n", 1) > DESK_SCALE_N:
        raise UsageError(f"--n is capped at the desk scale {DESK_SCALE_N}")
    if getattr(args, "k", 1) < 1 or getattr(args, "k", 1) > DESK_SCALE_N:
        raise UsageError(f"--k must be between 1 and {DESK_SCALE_N}")
    if getattr(args, "flavors", 1) < 1 or getattr(args, "flavors", 1) > 4:
        raise UsageError("--flavors must be between 1 and 4")
    if getattr(args, "nmax", 1) < 1 or getattr(args, "nmax", 1) > 12:
        raise UsageError("--nmax must be between 1 and 12")
    if getattr(args, "trials", 1) < 0:
        raise UsageError("--trials must be nonnegative")
    if getattr(args, "seed", 0) < 0 or getattr(args, "seed", 0) >= 2 ** 64:
        raise UsageError("--seed must fit in 64 bits")
    if getattr(args, "level", 0) < 0:
        raise UsageError("--level must be nonnegative")
    lcap = getattr(args, "L", 1)
    if args.command == "check-bilocal" and not 1 <= lcap <= 8:
        raise UsageError("--L must be between 1 and 8")
    if args.command == "decompose":
        k = 2 * args.n
        if fockspace.basis_size(2 * k, args.level) > args.max_states:
            raise UsageError("requested basis exceeds --max-states; "
                             "lower --level or --n or raise the cap")


if __name__ == "__main__":
    sys.exit(main())

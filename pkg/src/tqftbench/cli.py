"""Command-line front end.

Exit codes: 0 pass, 1 theorem-instance failure, 2 input error, 3 unsupported.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import algebras as alg
from . import azu, bord2, corpus, frob, inv, suite, tang
from .exactlin import field_from_name, rank
from .report import EXIT_INPUT, RunReport, digest_inputs


class InputError(ValueError):
    pass


# -- argument helpers -----------------------------------------------------------------


def _builtin_algebra(spec: str, field):
    """``k``, ``Z/n``, ``M<n>``, ``T<n>``, ``S3``, ``Q8``, ``k^n``; the field comes from ``--field``."""
    if spec in ("k", "field"):
        return alg.base_field(field), [1]
    m = re.fullmatch(r"Z/(\d+)", spec)
    if m:
        n = int(m.group(1))
        return alg.cyclic_group_algebra(n, field), [1] + [0] * (n - 1)
    m = re.fullmatch(r"k\^(\d+)", spec)
    if m:
        n = int(m.group(1))
        return alg.field_power(n, field), [1] * n
    m = re.fullmatch(r"([MT])(\d+)", spec)
    if m:
        n = int(m.group(2))
        if m.group(1) == "M":
            return alg.matrix_algebra(n, field), None
        return alg.upper_triangular(n, field), None
    if spec == "S3":
        return alg.symmetric_group_algebra(field), [1] + [0] * 5
    if spec == "Q8":
        return alg.quaternion_group_algebra(field), [1] + [0] * 7
    return None


def resolve_algebra(spec: str, field_name: str | None) -> corpus.AlgebraFile:
    if Path(spec).is_file():
        return corpus.load_algebra(spec)
    field = field_from_name(field_name or "Q")
    found = _builtin_algebra(spec, field)
    if found is None:
        raise InputError(f"{spec!r} is neither a file nor a built-in algebra (k, Z/n, k^n, Mn, Tn, S3, Q8)")
    a, counit = found
    return corpus.AlgebraFile(a, None if counit is None else tuple(field(c) for c in counit))


def _resolve_mtc(spec: str) -> inv.MTCData:
    if Path(spec).is_file():
        return inv.parse_mtc(Path(spec).read_text(), name=Path(spec).stem)
    if spec in inv.MTCS:
        return inv.MTCS[spec]
    raise InputError(f"unknown MTC {spec!r} (built-ins: {', '.join(inv.MTCS)})")


def _resolve_manifold(spec: str) -> inv.FourManifold:
    if Path(spec).is_file():
        return inv.parse_manifold(Path(spec).read_text(), name=Path(spec).stem)
    if spec in inv.MANIFOLDS:
        return inv.MANIFOLDS[spec]
    raise InputError(f"unknown manifold {spec!r} (built-ins: {', '.join(inv.MANIFOLDS)})")


def _fields(arg: str | None, default=("Q", "F3", "F5")) -> tuple:
    if not arg:
        return default
    names = tuple(x.strip() for x in arg.split(",") if x.strip())
    bad = [n for n in names if n not in corpus.FIELDS]
    if bad:
        raise InputError(f"unknown fields {bad}; choose from {', '.join(corpus.FIELDS)}")
    return names


# -- commands ------------------------------------------------------------------------------


def cmd_bord(args, rep: RunReport):
    if args.action == "compose":
        bs = [bord2.bordism_from_spec(s) for s in args.bordisms]
        b = bord2.compose_all(bs)
        rep.add(bord2.format_bordism(b), chi=b.chi, source=b.source, target=b.target)
    elif args.action == "decompose":
        b = bord2.bordism_from_spec(args.bordisms[0])
        layers = bord2.pants_decompose(b, stacked=args.stacked)
        for layer in layers:
            rep.add(str(layer))
        for g in b.closed:
            rep.add(f"closed genus {g}")
        rep.add(f"layers {len(layers)}", layers=len(layers))
    else:
        if len(args.bordisms) != 2:
            raise InputError("surgery-path needs a source and a target state")
        s, t = (bord2.parse_state(x) for x in args.bordisms)
        moves = bord2.surgery_path(s, t, args.genus_cap)
        states = bord2.replay(s, moves)
        for m, before, after in zip(moves, states, states[1:]):
            rep.add(f"{bord2.format_state(before)} --{m}--> {bord2.format_state(after)}", move=str(m))
        ok = states[-1] == t
        rep.add(f"moves {len(moves)} replay {'ok' if ok else 'FAILED'}", moves=len(moves), replay=ok)
        if not ok:
            rep.fail()


def cmd_frob(args, rep: RunReport):
    af = resolve_algebra(args.algebra, args.field)
    a = af.frobenius()
    v = frob.validate(a)
    rep.add(str(v), valid=v.ok)
    if not v.ok:
        rep.merge_verdict("error")
        return
    if args.action == "check":
        verdict = frob.is_invertible_theory(a)
        t = frob.torus_value(a)
        rep.add(f"Z(T2) = {t}", torus=t)
        rep.add(f"invertible theory: {'yes' if verdict else 'no'} ({verdict.witness})", invertible=bool(verdict))
        rep.add(f"closed surfaces: {[str(frob.closed_surface_value(a, g)) for g in range(4)]}")
    else:
        if not args.bordism:
            raise InputError("frob eval needs a bordism")
        b = bord2.bordism_from_spec(args.bordism)
        m = frob.evaluate(a, b)
        rep.add(f"{b.source} -> {b.target} circles, matrix {m.rows}x{m.cols}")
        rep.add(str(m))


def cmd_azu(args, rep: RunReport):
    if args.action == "harness":
        if args.algebras:
            algs = corpus.load_corpus(args.algebras)
        else:
            algs = list(corpus.azumaya_corpus(_fields(args.field), include_f2=args.field is None or "F2" in args.field).values())
        reports = suite.harness_reports(algs)
        if not reports:
            rep.warnings.append("empty corpus: nothing to check")
        rep.add("name dim center circle azumaya saddle verdict")
        for r in reports:
            rep.add(r.line(), name=r.name, field=r.field, dim=r.dim, center=r.center_dim, circle=r.circle_dim,
                    azumaya_rank=r.azumaya_rank, verdict=r.verdict)
            if not r.consistent:
                rep.fail()
        rep.add(f"checked {sum(r.eligible for r in reports)} eligible of {len(reports)}")
        return
    if not args.algebras:
        raise InputError(f"azu {args.action} needs an algebra")
    af = resolve_algebra(args.algebras[0], args.field)
    a = af.algebra
    if args.action == "center":
        basis = azu.center(a)
        rep.add(f"{a.name}: center dim {len(basis)}", dim=len(basis))
        for v in basis:
            rep.add("  (" + ", ".join(map(str, v)) + ")")
    elif args.action == "azumaya":
        r = rank(azu.azumaya_map(a))
        rep.add(f"{a.name}: azumaya map rank {r}/{a.dim ** 2} -> {'Azumaya' if r == a.dim ** 2 else 'not Azumaya'}",
                rank=r, size=a.dim**2)
    else:
        d, basis = azu.circle_value(a)
        rep.add(f"{a.name}: circle value dim {d}", dim=d)


def cmd_tang(args, rep: RunReport):
    t = tang.parse_structure(Path(args.file).read_text(), name=Path(args.file).stem)
    if args.action == "spherophilic":
        per = tang.spherophilic(t)
        for name, ok in per.items():
            rep.add(f"{name}: {'yes' if ok else 'no'}", component=name, spherophilic=ok)
        rep.add(f"spherophilic: {'yes' if all(per.values()) else 'no'}")
    else:
        mode = args.mode or "total"
        if mode == "total":
            counts = tang.pi0_total_reduction_S1(t)
        else:
            counts = tang.pi0_nullholonomic_reduction_S1(t)
        for name, n in counts.items():
            rep.add(f"{name}: {n}", component=name, count=n)
        rep.add(f"total {mode}: {tang.total_count(counts)}", total=tang.total_count(counts))


def cmd_inv(args, rep: RunReport):
    tol = args.tolerance
    if args.action == "cy":
        if len(args.items) != 2:
            raise InputError("inv cy needs an MTC and a manifold")
        m, w = _resolve_mtc(args.items[0]), _resolve_manifold(args.items[1])
        v = inv.crane_yetter(m, w, tol)
        rep.add(f"CY({m.name}, {w.name}): {v}", re=f"{v.value.real:.12g}", im=f"{v.value.imag:.12g}", chi=v.chi, sigma=v.sigma, p1=v.p1)
    elif args.action == "modular":
        if len(args.items) != 1:
            raise InputError("inv modular needs one MTC")
        v = inv.is_modular(_resolve_mtc(args.items[0]), tol)
        rep.add(str(v), modular=v.modular, dim_T3=v.dim_torus3)
    else:
        if len(args.items) != 2:
            raise InputError("inv euler needs lambda and a bordism")
        try:
            lam = Fraction(args.items[0])
        except ValueError:
            raise InputError(f"bad lambda {args.items[0]!r}") from None
        b = bord2.bordism_from_spec(args.items[1])
        rep.add(f"Z = {inv.euler_theory(lam, b)} (lambda={lam}, chi={b.chi})", chi=b.chi)


def cmd_report(args, rep: RunReport):
    cfg = suite.load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    if args.tolerance_given:
        cfg.tolerance = args.tolerance
    rep.digest = digest_inputs(rep.command, suite.config_inputs(cfg))
    suite.run_all(cfg, rep)


# -- parser -----------------------------------------------------------------------------------


def _positive_float(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q, F2, F3 or F5 (harness: comma-separated list)")
    common.add_argument("--tolerance", type=_positive_float, default=None, help="complex comparison tolerance (default 1e-9)")
    common.add_argument("--genus-cap", type=int, default=8, help="surgery search cap on total genus")
    common.add_argument("--seed", type=int, default=None, help="seed for enumerated corpora (default 0)")
    common.add_argument("--dump", metavar="PATH", help="also write key=value records to PATH")
    common.add_argument("--no-footer", action="store_true", help="omit the wall-time footer")

    p = argparse.ArgumentParser(prog="tqftbench", description="Evaluators and theorem-instance checks for invertible field theories.")
    sub = p.add_subparsers(dest="group", required=True)

    b = sub.add_parser("bord", parents=[common], help="2-dimensional bordisms")
    b.add_argument("action", choices=["compose", "decompose", "surgery-path"])
    b.add_argument("bordisms", nargs="+", help="bordism specs (names, a;b, a*b, genus:g, files) or surgery states like {1,1}")
    b.add_argument("--stacked", action="store_true", help="alternative handle placement for decompose")
    b.set_defaults(func=cmd_bord)

    f = sub.add_parser("frob", parents=[common], help="commutative Frobenius algebras")
    f.add_argument("action", choices=["eval", "check"])
    f.add_argument("algebra")
    f.add_argument("bordism", nargs="?")
    f.set_defaults(func=cmd_frob)

    a = sub.add_parser("azu", parents=[common], help="once-extended evaluation and the torus criterion")
    a.add_argument("action", choices=["center", "azumaya", "circle", "harness"])
    a.add_argument("algebras", nargs="*", help="algebra files, directories or built-in names")
    a.set_defaults(func=cmd_azu)

    t = sub.add_parser("tang", parents=[common], help="tangential structure data")
    t.add_argument("action", choices=["spherophilic", "reduce"])
    t.add_argument("file")
    t.add_argument("--mode", choices=["total", "nullholonomic"])
    t.set_defaults(func=cmd_tang)

    i = sub.add_parser("inv", parents=[common], help="invertible theories")
    i.add_argument("action", choices=["cy", "modular", "euler"])
    i.add_argument("items", nargs="+")
    i.set_defaults(func=cmd_inv)

    r = sub.add_parser("report", parents=[common], help="run every section of the end-to-end suite")
    r.add_argument("action", choices=["all"])
    r.add_argument("--config", help="JSON config (default: the bundled one)")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    args.tolerance_given = args.tolerance is not None
    if args.tolerance is None:
        args.tolerance = 1e-9
    random.seed(args.seed or 0)
    # presentation flags do not change results, so they stay out of the header and digest
    shown = []
    skip = False
    for tok in argv[1:]:
        if skip:
            skip = False
        elif tok == "--no-footer" or tok.startswith("--dump="):
            pass
        elif tok == "--dump":
            skip = True
        else:
            shown.append(tok)
    command = " ".join([args.group] + shown)
    rep = RunReport(command)
    inputs = [x for x in shown if not x.startswith("-")]
    rep.digest = digest_inputs(command, inputs)
    start = time.perf_counter()
    try:
        args.func(args, rep)
    except (tang.UnsupportedStructure, NotImplementedError) as exc:
        rep.add(f"unsupported: {exc}")
        rep.merge_verdict("unsupported")
    except (InputError, suite.ConfigError, corpus.AlgebraParseError, tang.StructureParseError, inv.InvParseError,
            bord2.BordismError, frob.DegeneratePairing, azu.PreconditionError, inv.AnomalousData,
            inv.DataInconsistency, OSError, ValueError, ZeroDivisionError) as exc:
        rep.add(f"error: {exc}")
        rep.merge_verdict("error")
    rep.wall_time = None if args.no_footer else time.perf_counter() - start
    sys.stdout.write(rep.render())
    if args.dump:
        Path(args.dump).write_text(rep.dump())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""The workbench's end-to-end checks, grouped in sections, driven by a JSON config.

Config keys (paths are relative to the config file)::

    seed, tolerance, genus_cap, pairs
    algebras: "builtin" or a list of .alg files / directories
    fields: fields of the built-in corpus
    structures, structures2d: directories of .struct files
    mtc, manifolds: lists of files (omit "mtc" to skip Crane-Yetter)
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import bord2, corpus, frob, inv, tang
from .azu import torus_criterion_extended
from .report import RunReport


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    seed: int = 0
    tolerance: float = 1e-9
    genus_cap: int = 8
    pairs: int = 120
    algebras: object = "builtin"
    fields: tuple = ("Q", "F3", "F5")
    structures: Path | None = None
    structures2d: Path | None = None
    mtc: list = field(default_factory=list)
    manifolds: list = field(default_factory=list)
    source: str = "<defaults>"


def data_dir() -> Path:
    return Path(str(resources.files("tqftbench") / "data"))


def default_config_path() -> Path:
    return data_dir() / "report_default.json"


def load_config(path=None) -> Config:
    path = Path(path) if path else default_config_path()
    try:
        raw = json.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: top level must be an object")
    known = {"seed", "tolerance", "genus_cap", "pairs", "algebras", "fields", "structures", "structures2d", "mtc", "manifolds"}
    extra = set(raw) - known
    if extra:
        raise ConfigError(f"{path}: unknown keys {sorted(extra)}")
    base = path.parent
    cfg = Config(source=str(path))
    cfg.seed = raw.get("seed", 0)
    cfg.tolerance = raw.get("tolerance", 1e-9)
    cfg.genus_cap = raw.get("genus_cap", 8)
    cfg.pairs = raw.get("pairs", 120)
    if not isinstance(cfg.seed, int):
        raise ConfigError("seed must be an integer")
    if not isinstance(cfg.tolerance, (int, float)) or cfg.tolerance <= 0:
        raise ConfigError(f"tolerance must be positive, got {cfg.tolerance!r}")
    if not isinstance(cfg.genus_cap, int) or cfg.genus_cap < 1:
        raise ConfigError(f"genus_cap must be a positive integer, got {cfg.genus_cap!r}")
    if not isinstance(cfg.pairs, int) or cfg.pairs < 0:
        raise ConfigError("pairs must be a non-negative integer")
    algs = raw.get("algebras", "builtin")
    cfg.algebras = algs if algs == "builtin" else [base / p for p in algs]
    cfg.fields = tuple(raw.get("fields", cfg.fields))
    bad = [f for f in cfg.fields if f not in corpus.FIELDS]
    if bad:
        raise ConfigError(f"unknown fields {bad}")
    for key in ("structures", "structures2d"):
        if key in raw:
            setattr(cfg, key, base / raw[key])
    cfg.mtc = [base / p for p in raw.get("mtc", [])]
    cfg.manifolds = [base / p for p in raw.get("manifolds", [])]
    return cfg


def config_inputs(cfg: Config) -> list:
    files = [cfg.source]
    if cfg.algebras != "builtin":
        files += cfg.algebras
    for d in (cfg.structures, cfg.structures2d):
        if d is not None:
            files += sorted(d.glob("*.struct"))
    return files + cfg.mtc + cfg.manifolds


def _mark(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- sections ----------------------------------------------------------------------


def harness_reports(algebras) -> list:
    """``algebras`` is an iterable of Algebra or AlgebraFile."""
    out = []
    for item in algebras:
        if isinstance(item, corpus.AlgebraFile):
            out.append(torus_criterion_extended(item.algebra, form=item.trace))
        else:
            out.append(torus_criterion_extended(item))
    return out


def section_harness(cfg: Config, rep: RunReport):
    if cfg.algebras == "builtin":
        algs = list(corpus.azumaya_corpus(cfg.fields).values())
    else:
        algs = corpus.load_corpus(cfg.algebras)
    reports = harness_reports(algs)
    eligible = [r for r in reports if r.eligible]
    violations = [r.name for r in reports if not r.consistent]
    center_bad = [r.name for r in eligible if r.center_dim != r.circle_dim]
    comp_bad = [r.name for r in eligible if r.azumaya and not r.composites_identity]
    saddle_bad = [r.name for r in eligible if r.saddle_invertible != r.azumaya]
    for r in reports:
        rep.add(f"  {r.line()}", section="harness", name=r.name, field=r.field, dim=r.dim,
                center=r.center_dim, circle=r.circle_dim, azumaya_rank=r.azumaya_rank, verdict=r.verdict)
    if not reports:
        rep.warnings.append("empty algebra corpus: harness passes vacuously")
    checks = [
        ("theorem instances", not violations, f"{len(eligible)} eligible, {len(reports) - len(eligible)} ineligible, violations={violations}"),
        ("circle = center", not center_bad, f"mismatches={center_bad}"),
        ("saddle dichotomy", not saddle_bad and not comp_bad, f"saddle/azumaya mismatches={saddle_bad}, composite failures={comp_bad}"),
    ]
    for name, ok, detail in checks:
        rep.add(f"[{_mark(ok)}] harness: {name}: {detail}", section="harness", check=name, ok=ok)
        if not ok:
            rep.fail()


def section_frob(cfg: Config, rep: RunReport):
    fc = corpus.frobenius_corpus()
    z2 = fc["Q[Z/2]"]
    values = [frob.closed_surface_value(z2, g) for g in range(4)]
    checks = [("Z(Sigma_g) for Q[Z/2]", values == [1, 2, 4, 8], f"{[str(v) for v in values]}")]
    torus_bad = [n for n, a in fc.items() if frob.torus_value(a) != a.field(a.dim)]
    checks.append(("Z(T2) = dim A", not torus_bad, f"{len(fc)} algebras, mismatches={torus_bad}"))
    pairs = bord2.composable_pairs(cfg.pairs, cfg.seed)
    bad = 0
    for name in ("Q[Z/3]", "QxQ", "F2[Z/3]"):
        a = fc[name]
        for b1, b2 in pairs:
            e1, e2 = frob.evaluate(a, b1), frob.evaluate(a, b2)
            c = bord2.compose(b1, b2)
            bad += frob.evaluate(a, c) != e2 @ e1
            bad += frob.evaluate(a, bord2.tensor(b1, b2)) != e1.kron(e2)
            open_c = bord2.Bordism(c.source, c.target, c.components, ())
            plain = frob.evaluate_layers(a, bord2.pants_decompose(open_c), c.source)
            stacked = frob.evaluate_layers(a, bord2.pants_decompose(open_c, stacked=True), c.source)
            bad += plain != stacked
    checks.append(("functoriality", bad == 0 and len(pairs) >= 100, f"{len(pairs)} pairs x 3 algebras, seed {cfg.seed}, failures={bad}"))
    exhibit = frob.torus_counterexample_exhibit(fc)
    checks.append(("torus counterexamples", len(exhibit) >= 3, f"{len(exhibit)} algebras, e.g. {', '.join(e.name for e in exhibit[:3])}"))
    for name, ok, detail in checks:
        rep.add(f"[{_mark(ok)}] frob: {name}: {detail}", section="frob", check=name, ok=ok)
        if not ok:
            rep.fail()


def closed_states(max_genus: int, max_components: int):
    """Nonempty states with total genus <= max_genus and at most max_components components."""
    seen = set()
    for k in range(1, max_components + 1):
        for gs in itertools.combinations_with_replacement(range(max_genus + 1), k):
            if sum(gs) <= max_genus:
                seen.add(bord2.surface_state(gs))
    return sorted(seen)


def section_surgery(cfg: Config, rep: RunReport):
    cap = cfg.genus_cap
    lengths = {}
    for s in [(0,), (1, 1)] + [(g,) for g in range(1, 5)]:
        path = bord2.surgery_path(s, (1,), cap)
        bord2.replay(s, path)
        lengths[bord2.format_state(s)] = len(path)
    expected = {"{0}": 1, "{1,1}": 2, **{f"{{{g}}}": abs(g - 1) for g in range(1, 5)}}
    checks = [("path lengths", lengths == expected, " ".join(f"{k}->{{1}}:{v}" for k, v in lengths.items()))]
    states = closed_states(4, 4)
    unreachable = []
    for s in states:
        try:
            bord2.surgery_path(s, (1,), cap)
        except bord2.SurgeryPathNotFound:
            unreachable.append(s)
    checks.append(("reachability", not unreachable, f"{len(states)} states with genus <= 4, unreachable={unreachable}"))
    flips = bad = 0
    for s in states:
        for m in bord2.surgery_moves(s):
            flips += 1
            if abs(bord2.state_chi(bord2.surgery_apply(s, m)) - bord2.state_chi(s)) != 2:
                bad += 1
    checks.append(("chi changes by 2", bad == 0, f"{flips} moves checked"))
    for name, ok, detail in checks:
        rep.add(f"[{_mark(ok)}] surgery: {name}: {detail}", section="surgery", check=name, ok=ok)
        if not ok:
            rep.fail()


SPHEROPHILIA_TABLE = {"orientations": True, "spin": True, "stable framings": True, "tangential 2-framings": False}


def restriction_cases() -> list[tuple[tang.TangentialStructureData, tuple]]:
    """Eight inputs: d = 3 with one or two components and all flag patterns, d = 4 with one."""
    one = tang.ComponentData("X0", 2, 0, 2)
    two = tang.ComponentData("X1", 1, 1, 1)
    cases = []
    for flags in itertools.product([True, False], repeat=1):
        cases.append((tang.structure(3, one), flags))
    for flags in itertools.product([True, False], repeat=2):
        cases.append((tang.structure(3, one, two), flags))
    for flags in itertools.product([True, False], repeat=1):
        cases.append((tang.structure(4, two), flags))
    return cases


def load_structures(directory: Path) -> dict[str, tang.TangentialStructureData]:
    out = {}
    for p in sorted(directory.glob("*.struct")):
        out[p.stem] = tang.parse_structure(p.read_text(), name=p.stem)
    return out


def section_tang(cfg: Config, rep: RunReport):
    table = {name: tang.is_spherophilic(tang.STANDARD_2D[name]) for name in SPHEROPHILIA_TABLE}
    checks = [("spherophilia table", table == SPHEROPHILIA_TABLE, " ".join(f"{k.replace(' ', '_')}={'yes' if v else 'no'}" for k, v in table.items()))]
    cases = restriction_cases()
    ok = all(tang.is_spherophilic(tang.restrict_to_dim2(t, flags)) for t, flags in cases)
    checks.append(("restriction to dim 2", ok and len(cases) == 8, f"{len(cases)} cases"))
    if cfg.structures2d is not None:
        for name, t in load_structures(cfg.structures2d).items():
            rep.add(f"  {name}: spherophilic={'yes' if tang.is_spherophilic(t) else 'no'}", section="tang", structure=name)
    if cfg.structures is not None:
        structs = load_structures(cfg.structures)
        bad = []
        for name, t in structs.items():
            total = tang.pi0_total_reduction_S1(t)
            null = tang.pi0_nullholonomic_reduction_S1(t)
            for c in t.components:
                if not (null[c.name] in (1, 2) and null[c.name] <= total[c.name] == c.pi1_F_order):
                    bad.append(f"{name}/{c.name}")
            rep.add(f"  {name}: total={tang.total_count(total)} nullholonomic={tang.total_count(null)}",
                    section="tang", structure=name, total=tang.total_count(total), null=tang.total_count(null))
        checks.append(("reduction counts", not bad and len(structs) > 0, f"{len(structs)} files, bad={bad}"))
    else:
        rep.add("[SKIP] tang: reduction counts: no structure directory configured", section="tang", check="reduction counts", ok="skipped")
    for name, ok, detail in checks:
        rep.add(f"[{_mark(ok)}] tang: {name}: {detail}", section="tang", check=name, ok=ok)
        if not ok:
            rep.fail()


def _close(z: complex, w: complex, tol: float) -> bool:
    return abs(z - w) <= tol * max(1.0, abs(w))


def section_inv(cfg: Config, rep: RunReport):
    tol = cfg.tolerance
    checks = []
    if cfg.mtc:
        mtcs = {m.name: m for m in (inv.parse_mtc(p.read_text(), name=p.stem) for p in cfg.mtc)}
        mans = {m.name: m for m in (inv.parse_manifold(p.read_text(), name=p.stem) for p in cfg.manifolds)}
        for m in mtcs.values():
            for w in mans.values():
                v = inv.crane_yetter(m, w, tol)
                rep.add(f"  CY({m.name}, {w.name}): {v}", section="inv", mtc=m.name, manifold=w.name,
                        re=f"{v.value.real:.12g}", im=f"{v.value.imag:.12g}", chi=v.chi, sigma=v.sigma)
            verdict = inv.is_modular(m, tol)
            rep.add(f"  {verdict}", section="inv", mtc=m.name, modular=verdict.modular, dim_T3=verdict.dim_torus3)
        if "trivial" in mtcs:
            ok = all(inv.crane_yetter(mtcs["trivial"], w).value == 1 for w in mans.values())
            checks.append(("trivial CY = 1", ok, f"{len(mans)} manifolds"))
        pins = [("toric_code", "S4", 4), ("semion", "CP2", 2 + 2j)]
        for mname, wname, expect in pins:
            if mname in mtcs and wname in mans:
                v = inv.crane_yetter(mtcs[mname], mans[wname]).value
                checks.append((f"CY({mname}, {wname})", _close(v, expect, tol), f"{v:.12g} vs {expect}"))
        if "E8" in mans:
            w = mans["E8"]
            checks.append(("E8 signature", (w.signature, w.p1) == (8, 24), f"sigma={w.signature} p1={w.p1}"))
        for mname, expect, dim in (("toric_code", True, 1), ("rep_z2", False, 2)):
            if mname in mtcs:
                v = inv.is_modular(mtcs[mname], tol)
                checks.append((f"modularity {mname}", v.modular == expect and v.dim_torus3 == dim, str(v)))
    else:
        rep.add("[SKIP] inv: Crane-Yetter: no MTC files configured", section="inv", check="crane-yetter", ok="skipped")
    lam = Fraction(3)
    bad = 0
    pairs = bord2.composable_pairs(cfg.pairs, cfg.seed)
    for b1, b2 in pairs:
        e1, e2 = inv.euler_theory(lam, b1), inv.euler_theory(lam, b2)
        bad += inv.euler_theory(lam, bord2.compose(b1, b2)) != e1 * e2
        bad += inv.euler_theory(lam, bord2.tensor(b1, b2)) != e1 * e2
    checks.append(("Euler functor laws", bad == 0, f"{len(pairs)} pairs, failures={bad}"))
    pants = inv.euler_theory(lam, bord2.pants())
    genus2 = inv.euler_theory(lam, bord2.closed_surface(2))
    checks.append(("Euler pinned values", (pants, genus2) == (Fraction(1, 3), Fraction(1, 9)), f"pants={pants} genus2={genus2}"))
    for name, ok, detail in checks:
        rep.add(f"[{_mark(ok)}] inv: {name}: {detail}", section="inv", check=name, ok=ok)
        if not ok:
            rep.fail()


SECTIONS = {
    "harness": section_harness,
    "frob": section_frob,
    "surgery": section_surgery,
    "tang": section_tang,
    "inv": section_inv,
}


def run_all(cfg: Config, rep: RunReport, sections=None):
    """Run the sections in order; an input error in one section does not stop the others."""
    for name in sections or SECTIONS:
        try:
            SECTIONS[name](cfg, rep)
        except tang.UnsupportedStructure as exc:
            rep.add(f"[UNSUPPORTED] {name}: {exc}", section=name, ok="unsupported")
            rep.merge_verdict("unsupported")
        except (ValueError, OSError) as exc:
            rep.add(f"[ERROR] {name}: {exc}", section=name, ok="error")
            rep.merge_verdict("error")

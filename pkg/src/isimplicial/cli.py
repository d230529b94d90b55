"""Command-line front end: run verification suites and emit canonical JSON.

    python -m isimplicial run --suite comma-terminal --level-cap 4
    python -m isimplicial run --suite sigma-free --input f0-cell.json
    python -m isimplicial emit --builtin nerve-z2 --dim-cap 3 --output z2.json
    python -m isimplicial phi --permcat z2-discrete --level-cap 2 --output phi.json

Exit status: 0 when every check passes, 1 on a failed check, 2 on bad input
or a cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from ._util import CapError, RegimeError
from . import fincat, idiag, injcat, operad, phicon, serialize
from . import sset as S

SUITES = ("comma-terminal", "day-convolution", "filtration-identity", "hocolim-compare",
          "operad-einfty", "phi-monoid", "sigma-free")


@dataclass
class RunConfig:
    level_cap: int | None = None
    dim_cap: int | None = None
    arity_cap: int | None = None
    inputs: list = field(default_factory=list)
    suites: list = field(default_factory=list)
    fmt: str = "text"
    focus: str | None = None
    timing: bool = False

    def __post_init__(self):
        for name in ("level_cap", "dim_cap", "arity_cap"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name.replace('_', '-')} must be >= 0")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)}")


def _cap(value, default):
    return default if value is None else value


def _jsonable(x):
    return json.loads(json.dumps(x, default=repr))


def _check(name, ok, witness=None, **info):
    out = {"name": name, "status": "pass" if ok else "fail"}
    if witness is not None and not ok:
        out["witness"] = _jsonable(witness)
    if info:
        out["info"] = _jsonable(info)
    return out


# -- inputs -----------------------------------------------------------------

def _cell(spec, d):
    if isinstance(spec, str):
        spec = {"standard": 0} if spec == "point" else {spec.split("-")[0]: int(spec.split("-")[1])}
    if "standard" in spec:
        return S.standard(spec["standard"], d)
    if "boundary" in spec:
        return S.boundary(spec["boundary"], d)
    if "horn" in spec:
        n, k = spec["horn"]
        return S.horn(n, k, d)
    raise serialize.FormatError(f"unknown cell {spec!r}")


def diagram_from_input(data, N, d, where):
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "free":
        X = idiag.free_diagram(data.get("level", 0), _cell(data.get("cell", "point"), d), N)
        X.name = data.get("name", f"F{data.get('level', 0)}")
        return X
    if kind == "sphere":
        return idiag.sphere_diagram(data.get("level", 1), data.get("dim", 1), N, d)
    if kind == "idiagram":
        return serialize.decode_idiagram(data, where)
    raise serialize.FormatError(f"{where}.kind: expected free, sphere or idiagram")


def _load_inputs(cfg, kinds):
    out = []
    for path in cfg.inputs:
        data = serialize.load(path)
        out.append((path, data))
    return [(p, d) for p, d in out if not kinds or (isinstance(d, dict) and d.get("kind") in kinds)]


# -- suites -------------------------------------------------------------------
# each suite yields (check name, thunk); thunks return a check dict

def suite_comma_terminal(cfg):
    N = _cap(cfg.level_cap, 4)
    for k in range(min(3, N) + 1):
        for m in range(N + 1):
            def run(k=k, m=m):
                C = injcat.comma_concat([k], m)
                comps = fincat.component_terminals(C)
                bad = [c for c, t in comps if not t]
                terms = [[C.objects[t][0], list(C.objects[t][1].values)] for _, ts in comps for t in ts[:1]]
                return _check(f"terminal k={k} m={m}", not bad,
                              {"component": [repr(C.objects[o]) for o in bad[0]]} if bad else None,
                              components=len(comps), terminal_objects=terms)
            yield f"terminal k={k} m={m}", run
    for i in (2, 3):
        for m in range(i, N + 1):
            def run(i=i, m=m):
                table, free = injcat.sigma_action_on_components(1, i, m)
                fixed = None
                if not free:
                    fixed = next((p, c) for p, img in table.items() if p != tuple(range(i))
                                 for c in range(len(img)) if img[c] == c)
                return _check(f"free components i={i} m={m}", free, fixed,
                              components=len(next(iter(table.values()))))
            yield f"free components i={i} m={m}", run


def suite_day_convolution(cfg):
    N, d = _cap(cfg.level_cap, 4), _cap(cfg.dim_cap, 3)
    cells = {"point": S.standard(0, d), "boundary-1": S.boundary(1, d), "standard-1": S.standard(1, d)}
    free = {}

    def F(n, c):
        if (n, c) not in free:
            free[(n, c)] = idiag.free_diagram(n, cells[c], N)
        return free[(n, c)]

    for k in range(min(2, N) + 1):
        for l in range(min(2, N - k) + 1):
            for a in cells:
                for b in cells:
                    name = f"F{k}({a}) box F{l}({b})"

                    def run(k=k, l=l, a=a, b=b, name=name):
                        B = idiag.box(F(k, a), F(l, b))
                        T = idiag.free_diagram(k + l, S.product(cells[a], cells[b]), N)
                        c = idiag.day_comparison(B, T)
                        problems = idiag.validate_imap(c)
                        bad = [m for m in range(N + 1) if not S.is_isomorphism(c.maps[m])]
                        return _check(name, not problems and not bad,
                                      {"naturality": problems[:1], "non_iso_levels": bad})
                    yield name, run


def _sigma_free_corpus(N, d):
    return [("F1(point)", idiag.free_diagram(1, S.point(d), N)),
            ("F2(point)", idiag.free_diagram(2, S.point(d), N)),
            ("F1(S^1)", idiag.sphere_diagram(1, 1, N, d))]


def suite_sigma_free(cfg):
    N, d = _cap(cfg.level_cap, 4), _cap(cfg.dim_cap, 2)
    inputs = _load_inputs(cfg, ("free", "sphere", "idiagram"))
    if inputs:
        diagrams = [(data.get("name", path), lambda data=data, path=path: diagram_from_input(data, N, d, path))
                    for path, data in inputs]
    else:
        diagrams = [(name, lambda X=X: X) for name, X in _sigma_free_corpus(N, d)]
    for name, make in diagrams:
        for n in (2, 3):
            def run(make=make, n=n, name=name):
                free, witness = idiag.sigma_free_on_levels(make(), n)
                return _check(f"{name}^{n}", free, witness)
            yield f"{name}^{n}", run


def suite_phi_monoid(cfg):
    N, d = _cap(cfg.level_cap, 3), _cap(cfg.dim_cap, 3)
    inputs = _load_inputs(cfg, ("permcat",))
    cats = ([(data.get("name", path), serialize.decode_permcat(data, path)) for path, data in inputs]
            if inputs else sorted(phicon.corpus().items())[:2])
    for name, A in cats:
        def axioms(A=A, name=name):
            p = phicon.validate_permcat(A)
            return _check(f"{name}: permutative axioms", not p, p[:1])

        def functorial(A=A, name=name):
            p = phicon.functoriality_problems(A, N)
            return _check(f"{name}: functoriality", not p, p[:1])

        def monoid(A=A, name=name):
            p = idiag.validate_comm_monoid(phicon.n_phi(A, N, d))
            return _check(f"{name}: commutative monoid", not p, p[:1])

        def equivalences(A=A, name=name):
            r = phicon.levelwise_equivalence_suite(A, N)
            bad = [k for k, v in r["positive_actions"].items() if not v]
            bad += [f"tensor {n}" for n, v in r["tensoring"].items() if not v]
            return _check(f"{name}: levelwise equivalences", r["all_equivalences"], bad[:1],
                          from_level_zero=r["from_level_zero"])

        def quasi(A=A, name=name):
            top = min(3, d)
            r = phicon.quasicategory_report(A, N, top)
            bad = {n: v for n, v in r.items() if v["unfilled"] or v["max_fillers"] not in (None, 1)}
            return _check(f"{name}: nerves are quasi-categories", not bad,
                          next(iter(bad.items()), None),
                          horns={n: v["horns"] for n, v in r.items()})

        for label, fn in (("permutative axioms", axioms), ("functoriality", functorial),
                          ("commutative monoid", monoid), ("levelwise equivalences", equivalences),
                          ("nerves are quasi-categories", quasi)):
            yield f"{name}: {label}", fn


def suite_operad_einfty(cfg):
    n_max, cap = _cap(cfg.arity_cap, 3), _cap(cfg.dim_cap, 4)
    through = max(cap - 2, 0)

    def be():
        O = operad.barratt_eccles(n_max, cap)
        r = operad.is_einfty_proxy(O, through)
        bad = [a for a in r["arities"] if not (a["connected"] and a["point_homology"])]
        return _check("Barratt-Eccles: E-infinity proxy", r["passes"], r["witness"] or bad[:1],
                      through=through)

    def be_axioms():
        p = operad.validate_operad(operad.barratt_eccles(n_max, min(cap, 2)), max_dim=1)
        return _check("Barratt-Eccles: operad axioms", not p, p[:1])

    def com():
        O = operad.commutativity_operad(n_max, cap)
        free, witness = operad.is_sigma_free(O)
        return _check("Com: not Sigma-free (control)", not free or n_max < 2, None,
                      fixed=witness)

    def swap():
        O = operad.swap_boundary_operad(max(cap, 2))
        r = operad.is_einfty_proxy(O, 1)
        return _check("swap-boundary: free but proxy fails (control)",
                      r["sigma_free"] and not r["passes"], r)

    for name, fn in (("Barratt-Eccles: E-infinity proxy", be),
                     ("Barratt-Eccles: operad axioms", be_axioms),
                     ("Com: not Sigma-free (control)", com),
                     ("swap-boundary: free but proxy fails (control)", swap)):
        yield name, fn


def suite_filtration_identity(cfg):
    N, d = _cap(cfg.level_cap, 3), _cap(cfg.dim_cap, 2)
    g = S.inclusion(S.boundary(1, d), S.standard(1, d))
    cases = [(2, 1), (2, 2), (3, 1), (3, 2)]
    for n, i in cases:
        for m in range(N + 1):
            name = f"Y=F1(point) k=1 n={n} i={i} m={m}"

            def run(n=n, i=i, m=m, name=name):
                Y = idiag.free_diagram(1, S.point(d), N)
                r = operad.filtration_identity_check(Y, 1, g, n, i, m)
                return _check(name, r["holds"], r["witness"] or {k: r[k] for k in (
                    "iso", "domains_match", "lhs_maps_injective", "equivariant")},
                    counts=r["lhs_counts"])
            yield name, run


def suite_hocolim_compare(cfg):
    N, d = _cap(cfg.level_cap, 3), _cap(cfg.dim_cap, 3)

    def cofibrant(make, name, regime=None):
        def run():
            r = idiag.comparison_is_homology_iso(make(), regime)
            return _check(name, r["is_iso"], {"cone_homology": r["cone_homology"]},
                          iso_through=r["iso_through"])
        return run

    def quotient():
        F1 = idiag.free_diagram(1, S.point(d), N)
        P, act = operad.power_action(F1, 2)
        Q, cert = operad.quotient_by_group(P, act)
        r = idiag.comparison_is_homology_iso(Q)
        return _check("F1(point)^2/Sigma_2: not an iso (control)", not r["is_iso"],
                      {"cone_homology": r["cone_homology"]},
                      hocolim_homology=r["hocolim_homology"], colim_homology=r["colim_homology"])

    def const():
        C = fincat.group_category([0, 1], lambda a, b: (a + b) % 2, 0)
        icat = injcat.ICat(N)
        X = idiag.nerve_diagram(idiag.constant_cat_diagram(C, icat), icat, d)
        r = idiag.comparison_is_homology_iso(X)
        H = S.nerve(C, d)
        agrees = r["hocolim_homology"] == [S.homology(H, k) for k in range(d)]
        return _check("constant nerve(Z/2): hocolim homology", agrees,
                      {"hocolim": r["hocolim_homology"]})

    yield "F1(point): homology iso", cofibrant(lambda: idiag.free_diagram(1, S.point(d), N),
                                                "F1(point): homology iso")
    yield "F2(point): homology iso", cofibrant(lambda: idiag.free_diagram(2, S.point(d), N),
                                                "F2(point): homology iso")
    yield "F1(S^1): homology iso", cofibrant(lambda: idiag.sphere_diagram(1, 1, N, d),
                                              "F1(S^1): homology iso", "bk")
    yield "constant nerve(Z/2): hocolim homology", const
    yield "F1(point)^2/Sigma_2: not an iso (control)", quotient


REGISTRY = {
    "comma-terminal": suite_comma_terminal,
    "day-convolution": suite_day_convolution,
    "filtration-identity": suite_filtration_identity,
    "hocolim-compare": suite_hocolim_compare,
    "operad-einfty": suite_operad_einfty,
    "phi-monoid": suite_phi_monoid,
    "sigma-free": suite_sigma_free,
}


def run(cfg: RunConfig) -> dict:
    """Execute the selected suites; the report is sorted by suite name."""
    suites = []
    for name in sorted(set(cfg.suites)):
        t0 = time.perf_counter()
        checks = []
        for check_name, thunk in REGISTRY[name](cfg):
            if cfg.focus and cfg.focus != check_name:
                continue
            checks.append(thunk())
        entry = {"suite": name, "checks": checks,
                 "passed": all(c["status"] == "pass" for c in checks)}
        if cfg.timing:
            entry["seconds"] = round(time.perf_counter() - t0, 3)
        suites.append(entry)
    return {"suites": suites, "passed": all(s["passed"] for s in suites),
            "checks": sum(len(s["checks"]) for s in suites)}


def format_text(report) -> str:
    lines = []
    for s in report["suites"]:
        lines.append(f"[{s['suite']}]" + (f" {s['seconds']}s" if "seconds" in s else ""))
        for c in s["checks"]:
            line = f"  {c['status'].upper():4} {c['name']}"
            if "witness" in c:
                line += f"  witness: {json.dumps(c['witness'], sort_keys=True)}"
            lines.append(line)
    lines.append(f"{report['checks']} checks, {'all passed' if report['passed'] else 'FAILURES'}")
    return "\n".join(lines) + "\n"


# -- emit -----------------------------------------------------------------------

def builtin_value(name, N, d, n_max):
    if name == "nerve-z2":
        return S.nerve(fincat.group_category([0, 1], lambda a, b: (a + b) % 2, 0), d)
    if name == "free1-point":
        return idiag.free_diagram(1, S.point(d), N)
    if name == "barratt-eccles":
        return operad.barratt_eccles(n_max, d)
    if name == "commutativity":
        return operad.commutativity_operad(n_max, d)
    if name in phicon.corpus():
        return phicon.corpus()[name]
    raise serialize.FormatError(f"unknown builtin {name!r}")


BUILTINS = ("barratt-eccles", "commutativity", "free1-point", "nerve-z2") + tuple(sorted(phicon.corpus()))


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _config_from(args) -> RunConfig:
    base = {}
    if getattr(args, "config", None):
        base = serialize.load(args.config)
        if not isinstance(base, dict):
            raise serialize.FormatError(f"{args.config}: expected an object")
    keys = {"level_cap": "level-cap", "dim_cap": "dim-cap", "arity_cap": "arity-cap",
            "inputs": "input", "suites": "suite", "fmt": "format", "focus": "focus"}
    merged = {}
    for attr, key in keys.items():
        flag = getattr(args, attr)
        merged[attr] = flag if flag not in (None, []) else base.get(key, base.get(attr))
    merged["inputs"] = merged["inputs"] or []
    merged["suites"] = merged["suites"] or []
    merged["fmt"] = merged["fmt"] or "text"
    if isinstance(merged["suites"], str):
        merged["suites"] = [merged["suites"]]
    if isinstance(merged["inputs"], str):
        merged["inputs"] = [merged["inputs"]]
    merged["timing"] = args.timing
    return RunConfig(**merged)


def build_parser():
    p = argparse.ArgumentParser(prog="isimplicial", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def caps(q):
        q.add_argument("--level-cap", dest="level_cap", type=int)
        q.add_argument("--dim-cap", dest="dim_cap", type=int)
        q.add_argument("--arity-cap", dest="arity_cap", type=int)
        q.add_argument("--output")
        q.add_argument("--format", dest="fmt", choices=("text", "json"))

    r = sub.add_parser("run", help="run verification suites")
    caps(r)
    r.add_argument("--suite", dest="suites", action="append", default=[],
                   help=f"one of: {', '.join(SUITES)}, or 'all'")
    r.add_argument("--input", dest="inputs", action="append", default=[])
    r.add_argument("--focus", help="run only the check with this name")
    r.add_argument("--config", help="JSON config file; flags override it")
    r.add_argument("--timing", action="store_true", help="add wall-clock times (not deterministic)")

    e = sub.add_parser("emit", help="write canonical JSON for a built-in value or an input file")
    caps(e)
    e.add_argument("--builtin", choices=BUILTINS)
    e.add_argument("--input")

    ph = sub.add_parser("phi", help="emit the nerve of the tuple construction as an IDiagram")
    caps(ph)
    ph.add_argument("--permcat", default="z2-discrete",
                    help="corpus name or path to a permcat JSON file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            if "all" in args.suites:
                args.suites = list(SUITES)
            cfg = _config_from(args)
            report = run(cfg)
            text = (serialize.dumps(report) if cfg.fmt == "json" else format_text(report))
            _write(text, args.output)
            return 0 if report["passed"] else 1
        N, d, n_max = _cap(args.level_cap, 2), _cap(args.dim_cap, 2), _cap(args.arity_cap, 2)
        if args.command == "emit":
            if args.input:
                value = serialize.decode(serialize.load(args.input), args.input)
            elif args.builtin:
                value = builtin_value(args.builtin, N, d, n_max)
            else:
                raise serialize.FormatError("emit needs --builtin or --input")
            data = serialize.encode(value)
        else:
            if args.permcat in phicon.corpus():
                A = phicon.corpus()[args.permcat]
            else:
                A = serialize.decode_permcat(serialize.load(args.permcat), args.permcat)
            data = serialize.encode_idiagram(phicon.n_phi(A, N, d).A)
        _write(serialize.dumps(data), args.output)
        return 0
    except (serialize.FormatError, CapError, RegimeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

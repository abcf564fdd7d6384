"""Command-line front end.

Exit codes: 0 the command produced its answer (whatever the verdict),
1 unexpected failure, 2 usage error, 3 unparseable input, 4 groupoid or
monoid axiom violation, 5 any other domain error or invalid argument.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import formats
from .algebra import contains_unit_indicator, convolve, ideal_generated_by, involute, is_simple_algebra
from .catalogue import graph_catalogue, groupoid_catalogue
from .check import is_effective, is_minimal, is_topologically_principal, lemma31_condition3, lemma31_condition4_universal, trivial_isotropy_group
from .errors import AxiomViolation, ParseError, SteinbergError
from .exel_vershik import deaconu_renault, is_ore, prop75_crosscheck, transformation_groupoid
from .graph import condition_L, graph_simplicity_verdict, involute_g, is_cofinal, multiply
from .rep import kernel_dimension, rep_augmentation, rep_free_module, rep_orbit, rep_regular

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_AXIOM = 4
EXIT_DOMAIN = 5

OUTPUT_DIR_ENV = "STEINBERG_OUTPUT_DIR"


class Output:
    """Collects human-readable lines and the machine-readable record."""

    def __init__(self, argv, floating=False):
        self.record = formats.ResultRecord(list(argv))
        self.lines: list[str] = []
        self.floating = floating

    def say(self, line: str = ""):
        self.lines.append(line)

    def verdict(self, key, value, witness=None):
        self.record.verdicts[key] = value
        if witness is not None:
            self.record.witnesses[key] = formats.jsonable(witness)

    def coeff(self, c) -> str:
        return c.format(self.floating)

    def element(self, f) -> str:
        G = f.groupoid
        parts = [f"{self.coeff(c)}*[{G.labels[g]}]" for g, c in enumerate(f.coeffs) if c]
        return " + ".join(parts) if parts else "0"

    def graph_element(self, x) -> str:
        parts = [f"{self.coeff(c)}*{t}" for c, t in x.terms]
        return " + ".join(parts) if parts else "0"

    def matrix(self, m) -> list[str]:
        return ["  [" + ", ".join(self.coeff(v) for v in row) + "]" for row in m]


def _groupoid(args):
    return formats.groupoid_from_json(formats.load_source(args.input))


def _index(G, label: str) -> int:
    if label not in G.labels:
        raise ParseError(f"no morphism labelled {label!r}")
    return G.index(label)


def _labels(G, gs):
    return [G.labels[g] for g in sorted(gs)]


def cmd_check(args, out: Output):
    G = _groupoid(args)
    prop = args.property
    out.say(f"groupoid {G.name or args.input}: {G.n} morphisms, {len(G.units)} units")
    if prop in ("effective", "all"):
        v = is_effective(G)
        out.verdict("effective", v.holds, None if v else G.labels[v.witness])
        out.say(f"effective: {v.holds}" + ("" if v else f" (isotropy witness {G.labels[v.witness]})"))
    if prop in ("principal", "all"):
        tp = is_topologically_principal(G)
        bad = next((u for u in G.units if len(trivial_isotropy_group(G, u)) > 1), None)
        out.verdict("topologically_principal", tp, None if bad is None else G.labels[bad])
        out.say(f"topologically principal: {tp}" + ("" if bad is None else f" (unit {G.labels[bad]} has isotropy)"))
    if prop in ("minimal", "all"):
        v = is_minimal(G)
        w = None if v else _labels(G, v.witness)
        out.verdict("minimal", v.holds, w)
        out.say(f"minimal: {v.holds}" + ("" if v else f" (invariant set {w})"))
    if prop in ("conditions", "all"):
        c3 = lemma31_condition3(G)
        c4 = lemma31_condition4_universal(G)
        out.verdict("no_isotropy_bisection", c3)
        w = None
        if not c4:
            K, U = c4.witness
            w = {"K": _labels(G, K), "U": _labels(G, U)}
        out.verdict("separating_sets", c4.holds, w)
        out.say(f"no bisection of pure isotropy off the units: {c3}")
        out.say(f"separating V inside U for all K and |U| <= 8: {c4.holds}" + ("" if c4 else f" (fails for {w})"))
    if prop in ("simple", "all"):
        r = is_simple_algebra(G)
        wit = {"center": [formats.element_to_json(c) for c in r.witnesses["center"]]}
        if "radical" in r.witnesses:
            wit["radical"] = formats.element_to_json(r.witnesses["radical"])
        out.verdict("simple", r.verdict, wit)
        out.say(f"algebra: {r.verdict} ({'; '.join(r.reasons)})")


def cmd_mul(args, out: Output):
    G = _groupoid(args)
    f = formats.element_from_json(G, formats.load_source(args.lhs))
    g = formats.element_from_json(G, formats.load_source(args.rhs))
    h = convolve(f, g)
    out.verdict("product", formats.element_to_json(h))
    out.say(out.element(h))


def cmd_star(args, out: Output):
    G = _groupoid(args)
    f = formats.element_from_json(G, formats.load_source(args.element))
    h = involute(f)
    out.verdict("star", formats.element_to_json(h))
    out.say(out.element(h))


def cmd_ideal(args, out: Output):
    G = _groupoid(args)
    gens = [formats.element_from_json(G, formats.load_source(s)) for s in args.generators]
    ideal = ideal_generated_by(gens, G)
    V = contains_unit_indicator(ideal)
    out.verdict("dimension", ideal.dimension)
    out.verdict("whole_algebra", ideal.is_whole())
    out.verdict("unit_indicator", V is not None, None if V is None else _labels(G, V))
    out.say(f"ideal dimension {ideal.dimension} of {G.n}" + (" (whole algebra)" if ideal.is_whole() else ""))
    out.say("contains 1_V for V = " + str(_labels(G, V)) if V else "contains no unit indicator")


def cmd_rep(args, out: Output):
    G = _groupoid(args)
    unit = _index(G, args.unit) if args.unit else G.units[0]
    if args.kind == "free":
        W = None if args.invariant is None else [_index(G, u) for u in args.invariant]
        rep = rep_free_module(G, W)
    elif args.kind == "orbit":
        rep = rep_orbit(G, unit)
    elif args.kind == "regular":
        rep = rep_regular(G, unit)
    else:
        rep = rep_augmentation(G)
    kd = kernel_dimension(rep)
    out.verdict("dimension", rep.dimension)
    out.verdict("kernel_dimension", kd)
    out.say(f"{rep.kind} representation on basis {list(rep.basis_labels)}; kernel dimension {kd}")
    if args.element:
        f = formats.element_from_json(G, formats.load_source(args.element))
        m = rep.image(f)
        out.verdict("image", [[formats.coeff_to_json(v) for v in row] for row in m])
        out.say("image of element:")
        out.lines.extend(out.matrix(m))
    else:
        mats = {}
        for g in range(G.n):
            m = rep.matrix(g)
            mats[G.labels[g]] = [[formats.coeff_to_json(v) for v in row] for row in m]
            out.say(f"delta[{G.labels[g]}]:")
            out.lines.extend(out.matrix(m))
        out.verdict("matrices", mats)


def cmd_graph(args, out: Output):
    E = formats.graph_from_json(formats.load_source(args.input))
    if args.action == "check":
        L, cof = condition_L(E), is_cofinal(E)
        out.verdict("condition_L", L.holds, L.witness)
        out.verdict("cofinal", cof.holds, cof.witness)
        out.say(f"condition (L): {L.holds}" + ("" if L else f" (exitless cycle {' '.join(L.witness)})"))
        out.say(f"cofinal: {cof.holds}" + ("" if cof else f" ({cof.witness[0]} cannot reach {cof.witness[1]})"))
    elif args.action == "verdict":
        r = graph_simplicity_verdict(E)
        out.verdict("simple", r.verdict, r.witnesses or None)
        out.say(r.verdict)
        for line in r.reasons:
            out.say(f"  {line}")
    elif args.action == "star":
        if not args.lhs:
            raise ParseError("graph star needs --lhs")
        x = formats.graph_element_from_json(E, formats.load_source(args.lhs))
        y = involute_g(x)
        out.verdict("star", formats.graph_element_to_json(y))
        out.say(out.graph_element(y))
    else:
        if not args.lhs or not args.rhs:
            raise ParseError("graph mul needs --lhs and --rhs")
        x = formats.graph_element_from_json(E, formats.load_source(args.lhs))
        y = formats.graph_element_from_json(E, formats.load_source(args.rhs))
        z = multiply(x, y)
        out.verdict("product", formats.graph_element_to_json(z))
        out.say(out.graph_element(z))


def cmd_ev(args, out: Output):
    S = formats.system_from_json(formats.load_source(args.input))
    if args.action == "ore":
        if S.is_shift:
            out.verdict("ore", True)
            out.say("ore: True (the naturals are commutative and cancellative)")
        else:
            v = is_ore(S.monoid)
            out.verdict("ore", v.holds, v.witness)
            out.say(f"ore: {v.holds}" + ("" if v else f" (witness {v.witness})"))
    elif args.action == "groupoid":
        if S.is_shift:
            handle = deaconu_renault(S.space)
            r = graph_simplicity_verdict(handle.space)
            out.verdict("simple", r.verdict, r.witnesses or None)
            out.say(f"boundary-path groupoid of {handle.name or 'graph'}: {r.verdict}")
            for line in r.reasons:
                out.say(f"  {line}")
        else:
            G = transformation_groupoid(S)
            out.verdict("groupoid", formats.groupoid_to_json(G))
            eff, mini = is_effective(G), is_minimal(G)
            out.verdict("effective", eff.holds)
            out.verdict("minimal", mini.holds)
            out.say(f"transformation groupoid: {G.n} morphisms, {len(G.units)} units")
            out.say(f"effective: {eff.holds}; minimal: {mini.holds}")
    else:
        rep = prop75_crosscheck(S, args.bound)
        out.verdict("topologically_free", rep.topologically_free)
        out.verdict("groupoid_side", rep.groupoid_side)
        out.verdict("agree", rep.agree, rep.details or None)
        side = "condition (L)" if rep.case == "shift" else "topologically principal"
        out.say(f"topologically free: {rep.topologically_free}; {side}: {rep.groupoid_side}")
        out.say("agree" if rep.agree else "DISAGREE")


def export_catalogue(directory: Path) -> list[Path]:
    written = []
    for sub in ("groupoids", "graphs", "systems"):
        (directory / sub).mkdir(parents=True, exist_ok=True)

    def dump(path: Path, data):
        path.write_text(formats.json.dumps(data, indent=2) + "\n")
        written.append(path)

    for e in groupoid_catalogue():
        dump(directory / "groupoids" / f"{e.name}.json", formats.groupoid_to_json(e.groupoid))
        if e.system is not None:
            dump(directory / "systems" / f"{e.name}.json", formats.system_to_json(e.system))
    for e in graph_catalogue():
        dump(directory / "graphs" / f"{e.name}.json", formats.graph_to_json(e.graph))
        dump(directory / "systems" / f"shift-{e.name}.json", formats.system_to_json(deaconu_renault(e.graph)))
    return written


def cmd_catalogue(args, out: Output):
    gs, es = groupoid_catalogue(), graph_catalogue()
    out.say(f"{'groupoid':22} {'family':8} {'effective':>9} {'minimal':>8} {'expected':>9}")
    for e in gs:
        verdict = "Simple" if e.simple else "NotSimple"
        out.say(f"{e.name:22} {e.family:8} {str(e.effective):>9} {str(e.minimal):>8} {verdict:>9}")
    out.say("")
    out.say(f"{'graph':22} {'(L)':>6} {'cofinal':>8} {'expected':>9}")
    for e in es:
        verdict = "Simple" if e.simple else "NotSimple"
        out.say(f"{e.name:22} {str(e.condition_L):>6} {str(e.cofinal):>8} {verdict:>9}")
    out.verdict("groupoids", {e.name: {"effective": e.effective, "minimal": e.minimal, "simple": e.simple} for e in gs})
    out.verdict("graphs", {e.name: {"condition_L": e.condition_L, "cofinal": e.cofinal, "simple": e.simple} for e in es})
    target = args.export or os.environ.get(OUTPUT_DIR_ENV)
    if target:
        files = export_catalogue(Path(target))
        out.verdict("exported", len(files))
        out.say(f"wrote {len(files)} files under {target}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the result record as JSON")
    common.add_argument("--float", action="store_true", help="render numbers as 12-digit decimals")

    parser = argparse.ArgumentParser(prog="steinberg", description="Steinberg algebras of finite and graph groupoids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="effective / minimal / principal / simple")
    p.add_argument("--input", required=True)
    p.add_argument("--property", default="all", choices=["effective", "minimal", "principal", "simple", "conditions", "all"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mul", parents=[common], help="convolution product")
    p.add_argument("--input", required=True)
    p.add_argument("--lhs", required=True, help="element JSON or file")
    p.add_argument("--rhs", required=True, help="element JSON or file")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("star", parents=[common], help="involution")
    p.add_argument("--input", required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("ideal", parents=[common], help="two-sided ideal generated by elements")
    p.add_argument("--input", required=True)
    p.add_argument("--generators", required=True, nargs="+")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("rep", parents=[common], help="matrix representations")
    p.add_argument("--input", required=True)
    p.add_argument("--kind", required=True, choices=["free", "orbit", "regular", "augmentation"])
    p.add_argument("--unit", help="unit label for orbit/regular (default: first unit)")
    p.add_argument("--invariant", nargs="+", help="invariant unit labels for the free module (default: all)")
    p.add_argument("--element", help="print the image of this element instead of every delta")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("graph", parents=[common], help="boundary-path groupoid of a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--action", required=True, choices=["check", "mul", "star", "verdict"])
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("ev", parents=[common], help="semigroup action systems")
    p.add_argument("--input", required=True)
    p.add_argument("--action", required=True, choices=["ore", "groupoid", "crosscheck"])
    p.add_argument("--bound", type=int, default=4, help="largest m in the (m, n) pairs for the shift case")
    p.set_defaults(func=cmd_ev)

    p = sub.add_parser("catalogue", parents=[common], help="list (and optionally export) the built-in examples")
    p.add_argument("--export", help=f"directory to write JSON files to (default: ${OUTPUT_DIR_ENV} if set)")
    p.set_defaults(func=cmd_catalogue)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(argv, floating=args.float)
    start = time.perf_counter()
    try:
        args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AxiomViolation as exc:
        print(f"axiom violation: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except (SteinbergError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # noqa: BLE001 - last-resort guard for the exit-code contract
        print(f"unexpected error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED
    out.record.timing = round(time.perf_counter() - start, 6)
    if args.json:
        print(out.record.to_json())
    else:
        print("\n".join(out.lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    weierloci semigroup info 6,7,8,9,10
    weierloci semigroup enumerate --genus 6 [--count-only]
    weierloci semigroup table
    weierloci lattice dp5 --lines --pencils --h0 2 --genus -2K
    weierloci ledger --case En --n 2
    weierloci ledger report --genus 6 --format markdown
    weierloci oracle vanishing --curve "x^5+y^5+z^5" --point "1,-1,0"
    weierloci oracle intersect --f "y - x^2" --g "y - x^3" --point "0,0"

Structured output goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import enumeration as en
from . import lattice as lat
from . import ledger as led
from . import semigroup as sg
from .linear_series import plane_curves as pc

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


def _dump(payload: dict) -> str:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    return json.dumps(_clean(payload), sort_keys=True, indent=2)


def _clean(o):
    if isinstance(o, float) and math.isinf(o):
        return "infinity"
    if isinstance(o, dict):
        return {k: _clean(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_clean(v) for v in o]
    return o


def _seq(xs) -> str:
    return ",".join(map(str, xs))


def _parse_gens(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"cannot parse generator list {text!r}; expected e.g. 6,7,8,9,10") from None


# -- semigroup ------------------------------------------------------------------

def _semigroup_table_line(H: sg.NumericalSemigroup, label: str | None = None) -> str:
    rec = sg.to_record(H)
    head = f"{label:8s} " if label else ""
    return (f"{head}{str(H):24s} genus={rec['genus']} frobenius={rec['frobenius']} "
            f"vanishing={_seq(rec['vanishing'])} ramification={_seq(rec['ramification'])} "
            f"weight={rec['weight']} symmetric={str(rec['symmetric']).lower()}")


def cmd_semigroup(args) -> str:
    if args.action == "info":
        if not args.generators:
            raise UsageError("semigroup info needs a generator list")
        H = sg.from_generators(_parse_gens(args.generators))
        verdict = en.classify(H)
        if args.format == "json":
            return _dump({"semigroup": sg.to_record(H), "classification": verdict.as_dict()})
        lines = [_semigroup_table_line(H, verdict.label),
                 f"gaps={_seq(H.gaps)} r={H.r} case={verdict.case.value}"]
        if H.genus >= 2:
            lines.append(f"expected_dimension={sg.expected_dimension(H)}")
        return "\n".join(lines)

    if args.action == "enumerate":
        if args.genus is None:
            raise UsageError("semigroup enumerate needs --genus")
        if args.count_only:
            count = en.count_by_genus(args.genus)[args.genus]
            if args.format == "json":
                return _dump({"genus": args.genus, "count": count})
            return str(count)
        semigroups = en.enumerate_genus(args.genus, workers=args.workers)
        if args.format == "json":
            return _dump({"genus": args.genus, "count": len(semigroups),
                          "semigroups": [sg.to_record(H) for H in semigroups]})
        return "\n".join(_semigroup_table_line(H) for H in semigroups)

    if args.action == "table":
        rows = en.paper_table()
        if args.format == "json":
            out = []
            for row in rows:
                rec = {"label": row.label, **sg.to_record(row.semigroup),
                       "classification": en.classify(row.semigroup).as_dict()}
                if row.printed_generators:
                    rec["printed_generators"] = list(row.printed_generators)
                out.append(rec)
            return _dump({"rows": out})
        return "\n".join(_semigroup_table_line(row.semigroup, row.label) for row in rows)

    raise UsageError(f"unknown semigroup action {args.action!r}")


# -- lattice --------------------------------------------------------------------

_CLASS_RE = re.compile(r"^([+-]?\d*)\s*([KH])$")


def _parse_class(text: str, cfg: lat.BlowupConfig) -> lat.DivisorClass:
    text = text.strip()
    m = _CLASS_RE.match(text)
    if m:
        mult = m.group(1)
        n = int(mult) if mult not in ("", "+", "-") else (-1 if mult == "-" else 1)
        base = lat.canonical_class(cfg) if m.group(2) == "K" else lat.DivisorClass.hyperplane(cfg.k)
        return n * base
    if ";" in text:
        d, _, rest = text.partition(";")
        try:
            coords = (int(d), *(int(t) for t in rest.split(",") if t.strip()))
        except ValueError:
            raise UsageError(f"cannot parse class {text!r}") from None
        D = lat.DivisorClass(coords)
        if len(coords) != cfg.rank:
            raise UsageError(f"class {text!r} has rank {len(coords)}, configuration has rank {cfg.rank}")
        return D
    raise UsageError(f"cannot parse class {text!r}; use e.g. -2K, 3H or 'd;m1,...,mk'")


def _class_record(D: lat.DivisorClass, cfg: lat.BlowupConfig) -> dict:
    proper = lat.to_proper_basis(D, cfg)
    return {
        "total": list(D.coords),
        "proper": list(proper),
        "total_text": D.format(cfg.basis_labels(proper=False)),
        "proper_text": lat.format_coeffs(proper, cfg.basis_labels(proper=True)),
    }


def cmd_lattice(args) -> str:
    if args.blowups is not None:
        if args.fixture:
            raise UsageError("give either a fixture name or --blowups, not both")
        cfg = lat.plane_points(args.blowups)
    else:
        cfg = lat.fixture(args.fixture or "dp5")
    K = lat.canonical_class(cfg)
    out: dict = {"configuration": {"name": cfg.name, "parents": list(cfg.parents), "k": cfg.k},
                 "K_squared": lat.intersection_pairing(K, K, cfg)}
    if args.canonical:
        out["canonical"] = _class_record(K, cfg)
    if args.lines or args.minus_two:
        ones, twos = lat.negative_curves(cfg)
        if args.lines:
            out["minus_one_classes"] = [_class_record(D, cfg) for D in ones]
        if args.minus_two:
            out["minus_two_classes"] = [_class_record(D, cfg) for D in twos]
    if args.pencils:
        quads = lat.blowdown_quadruples(cfg)
        out["blowdown_quadruples"] = [[D.format(cfg.basis_labels()) for D in q] for q in quads]
    if args.h0 is not None:
        out["h0"] = {"d": args.h0, "value": lat.anticanonical_h0(cfg, args.h0)}
    if args.genus is not None:
        D = _parse_class(args.genus, cfg)
        out["genus"] = {"class": _class_record(D, cfg), "value": lat.adjunction_genus(D, cfg)}
    if args.format == "json":
        return _dump(out)
    lines = [f"configuration {cfg.name} (k={cfg.k})  K^2 = {out['K_squared']}"]
    if "canonical" in out:
        c = out["canonical"]
        lines.append(f"K = {c['total_text']}   (proper basis: {c['proper_text']})")
    if "minus_one_classes" in out:
        lines.append(f"(-1)-classes: {len(out['minus_one_classes'])}")
        lines += [f"  {c['total_text']}" for c in out["minus_one_classes"]]
    if "minus_two_classes" in out:
        lines.append(f"(-2)-curves from infinitely near points: {len(out['minus_two_classes'])}")
        lines += [f"  {c['proper_text']}   = {c['total_text']}" for c in out["minus_two_classes"]]
    if "blowdown_quadruples" in out:
        lines.append(f"blowdown quadruples: {len(out['blowdown_quadruples'])}")
        lines += ["  {" + ", ".join(q) + "}" for q in out["blowdown_quadruples"]]
    if "h0" in out:
        lines.append(f"h0(-{args.h0}K) = {out['h0']['value']}")
    if "genus" in out:
        lines.append(f"genus({out['genus']['class']['total_text']}) = {out['genus']['value']}")
    return "\n".join(lines)


# -- ledger -----------------------------------------------------------------------

def _estimate_line(e: led.ComponentEstimate) -> str:
    s = (f"{e.name:28s} stratum={e.stratum_dim:2d} conditions={e.conditions:2d} "
         f"parameter={e.parameter_dim:2d} fiber={e.fiber_dim} component={e.component_dim:2d} "
         f"weight={e.weight}")
    if e.compared_to is None:
        s += f" proper={str(e.dimensionally_proper).lower()}"
    else:
        s += f" < {e.compared_to}: {str(e.strictly_smaller).lower()}"
    if e.bound_only:
        s += " [bound only]"
    return s + f"  ({e.anchor})"


def _entry_line(e: led.CountEntry) -> str:
    items = " ".join(f"{'+' if v >= 0 else '-'}{abs(v)}[{label}]" for label, v in e.contributions)
    return f"{e.name:28s} {items} = {e.total} {e.relation} {e.bound}: {str(e.holds).lower()}  ({e.anchor})"


def _report_markdown(rows: list[led.RowReport]) -> str:
    out = ["| label | semigroup | vanishing | w | case | expected dim | construction | component | "
           "competitors smaller | verdict | stable rationality |",
           "|---|---|---|---|---|---|---|---|---|---|---|"]
    for r in rows:
        comp = r.component.component_dim if r.component else "-"
        out.append(
            f"| {r.label} | <{_seq(r.generators)}> | {_seq(r.vanishing)} | {r.weight} | "
            f"{r.classification['generator_case']} | {r.expected_dim} | {r.construction or '-'} | {comp} | "
            f"{str(r.all_competitors_smaller).lower()} | {r.verdict} | {r.stable_rationality} |"
        )
    return "\n".join(out)


def cmd_ledger(args) -> str:
    if args.action == "report":
        rows = led.irreducibility_report(args.genus if args.genus is not None else 6)
        if args.format == "json":
            return _dump({"genus": args.genus or 6, "rows": [r.as_dict() for r in rows]})
        if args.format == "markdown":
            return _report_markdown(rows)
        lines = []
        for r in rows:
            comp = r.component.component_dim if r.component else "-"
            lines.append(f"{r.label:8s} <{_seq(r.generators)}> w={r.weight} expected={r.expected_dim} "
                         f"construction={r.construction or '-'} component={comp} "
                         f"competitors_smaller={str(r.all_competitors_smaller).lower()}")
            lines.append(f"         {r.verdict}; {r.stable_rationality}")
        return "\n".join(lines)

    if not args.case:
        raise UsageError("ledger needs --case (or the 'report' action)")
    case = args.case
    if case in ("En", "Dn"):
        if args.n is None:
            raise UsageError(f"--case {case} needs --n")
        result = led.ledger_main(case, args.n)
    elif case in led.SPECIAL_T_CASES:
        if args.n is None:
            raise UsageError(f"--case {case} needs --n")
        result = led.ledger_special_T(case, args.n, main=args.main)
    elif case == "weak_dp5":
        if args.n is None:
            raise UsageError("--case weak_dp5 needs --n")
        result = led.ledger_weak_dp5(args.main, args.n)
    else:
        result = led.ledger_excluded(case)
    if args.format == "json":
        return _dump({"entry": result.as_dict()})
    if isinstance(result, led.CountEntry):
        return _entry_line(result)
    return _estimate_line(result)


# -- oracle -----------------------------------------------------------------------

def cmd_oracle(args) -> str:
    if args.action == "vanishing":
        if not (args.curve and args.point):
            raise UsageError("oracle vanishing needs --curve and --point")
        C = pc.PlanePointedCurve.make(args.curve, args.point)
        res = pc.vanishing_data(C, check_smooth=not args.assume_smooth)
        H = sg.semigroup_from_vanishing(res.sequence.a)
        rec = sg.to_record(H)
        top = pc.poly_to_text(res.top_form)
        if args.format == "json":
            return _dump({"curve": pc.poly_to_text(C.f), "point": [str(c) for c in C.point],
                          "genus": C.genus, "vanishing": list(res.sequence.a), "semigroup": rec,
                          "weight": rec["weight"], "symmetric": rec["symmetric"],
                          "top_form": top, "precision": res.precision})
        return (f"vanishing={_seq(res.sequence.a)} semigroup={H} weight={rec['weight']} "
                f"symmetric={str(rec['symmetric']).lower()}\ntop-order form: {top}")

    if args.action == "intersect":
        if not (args.f and args.g and args.point):
            raise UsageError("oracle intersect needs --f, --g and --point")
        mult = pc.intersection_multiplicity(args.f, args.g, args.point)
        if args.format == "json":
            return _dump({"f": args.f, "g": args.g, "point": args.point, "multiplicity": mult})
        return "infinity" if math.isinf(mult) else str(mult)

    raise UsageError(f"unknown oracle action {args.action!r}")


# -- wiring -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table", "markdown"), default="table")

    p = argparse.ArgumentParser(prog="weierloci", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("semigroup", parents=[fmt], help="semigroup records, enumeration and the fixture table")
    s.add_argument("action", choices=("info", "enumerate", "table"))
    s.add_argument("generators", nargs="?")
    s.add_argument("--genus", type=int)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--workers", type=int, default=None,
                   help=f"processes for enumeration (default ${en.THREADS_ENV} or 1)")
    s.set_defaults(func=cmd_semigroup)

    la = sub.add_parser("lattice", parents=[fmt], help="Picard lattice of a blowup configuration")
    la.add_argument("fixture", nargs="?", help=f"one of {', '.join(lat.FIXTURES)}")
    la.add_argument("--blowups", type=int, help="blow up this many general plane points instead")
    la.add_argument("--lines", action="store_true", help="list (-1)-classes")
    la.add_argument("--minus-two", action="store_true", help="list (-2)-curves from infinitely near points")
    la.add_argument("--pencils", action="store_true", help="list sets of four disjoint (-1)-classes")
    la.add_argument("--canonical", action="store_true")
    la.add_argument("--h0", type=int, help="h0 of -dK")
    la.add_argument("--genus", help="adjunction genus of a class such as -2K")
    la.set_defaults(func=cmd_lattice)

    le = sub.add_parser("ledger", parents=[fmt], help="dimension counts")
    le.add_argument("action", nargs="?", choices=("case", "report"), default="case")
    le.add_argument("--case")
    le.add_argument("--n", type=int)
    le.add_argument("--main", choices=("En", "Dn"), default="En")
    le.add_argument("--genus", type=int)
    le.set_defaults(func=cmd_ledger)

    o = sub.add_parser("oracle", parents=[fmt], help="exact plane-curve computations")
    o.add_argument("action", choices=("vanishing", "intersect"))
    o.add_argument("--curve")
    o.add_argument("--point")
    o.add_argument("--f")
    o.add_argument("--g")
    o.add_argument("--assume-smooth", action="store_true", help="skip the global smoothness check")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    # "-2K" would otherwise be read as an option
    argv = list(sys.argv[1:] if argv is None else argv)
    for i, tok in enumerate(argv[:-1]):
        if tok == "--genus" and argv[i + 1].startswith("-") and not argv[i + 1][1:].isdigit():
            argv[i] = f"--genus={argv[i + 1]}"
            del argv[i + 1]
            break
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

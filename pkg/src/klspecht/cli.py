"""Command-line front end: ``enumerate``, ``kl`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import cob, heckemod, shapes, verify, weyl
from .heckemod import SIDES
from .shapes import Composition, composition_to_J

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def load_schema(command: str) -> dict:
    """The JSON schema for a command's report, shipped with the package."""
    path = resources.files("klspecht") / "schemas" / f"{command}.v{SCHEMA_VERSION}.json"
    return json.loads(path.read_text())


@dataclass
class RunConfig:
    command: str
    tag: str | None = None
    d: int | None = None
    max_d: int | None = None
    shape: Composition | None = None
    J: tuple[int, ...] | None = None
    side: str = "positive"
    map_variant: str = shapes.REFERENCE_VARIANT
    a_variant: str = "p_version"
    fmt: str = "json"
    output: Path | None = None
    seed: int = 0
    suites: list[str] = field(default_factory=list)
    what: list[str] = field(default_factory=list)


def parse_J(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise UsageError(f"--J expects comma-separated integers, got {text!r}") from None


def parse_shape(text: str, kind: str) -> Composition:
    try:
        parts = tuple(int(x) for x in text.split(","))
        return Composition(kind, parts)
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}: {exc}") from None


def parse_shape_b(text: str) -> Composition:
    """``"2:3"`` means positive half ``(2,)`` around middle part 3, i.e. ``(2,3,2)``."""
    half, sep, center = text.partition(":")
    if not sep:
        raise UsageError(f"--shape-b expects HALF:CENTER, got {text!r}")
    try:
        half_parts = tuple(int(x) for x in half.split(",")) if half.strip() else ()
        return Composition.from_half(int(center), half_parts)
    except ValueError as exc:
        raise UsageError(f"bad type B shape {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klspecht", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--type", dest="tag", choices=["A", "B"])
        p.add_argument("--d", type=int)
        p.add_argument("--format", dest="fmt", choices=["json", "csv", "pretty"], default="json")
        p.add_argument("--output", type=Path)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("enumerate", help="groups, coset representatives, compositions, tableaux")
    common(p)
    p.add_argument("--group", action="store_true", help="all group elements with lengths")
    p.add_argument("--reps", action="store_true", help="minimal coset representatives for --J")
    p.add_argument("--compositions", action="store_true")
    p.add_argument("--partitions", action="store_true")
    p.add_argument("--std", action="store_true", help="standard tableaux of --shape")
    p.add_argument("--rstd", action="store_true", help="row-standard tableaux of --shape")
    p.add_argument("--J", default=None)
    p.add_argument("--shape")
    p.add_argument("--shape-b", dest="shape_b")
    p.add_argument("--map-variant", choices=shapes.MAP_VARIANTS, default=shapes.REFERENCE_VARIANT)

    p = sub.add_parser("kl", help="KL m- and p-tables of a parabolic module")
    common(p)
    p.add_argument("--J", default=None)
    p.add_argument("--shape")
    p.add_argument("--shape-b", dest="shape_b")
    p.add_argument("--side", choices=SIDES, default="positive")
    p.add_argument("--map-variant", choices=shapes.MAP_VARIANTS, default=shapes.REFERENCE_VARIANT)
    p.add_argument("--a-variant", choices=cob.A_VARIANTS, default="p_version")

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", action="append", choices=list(verify.SUITES) + list(verify.SUITE_ALIASES) + ["all"], default=None)
    p.add_argument("--max-d", dest="max_d", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, tag=args.tag, d=args.d, fmt=args.fmt, output=args.output, seed=args.seed)
    if cfg.d is not None and cfg.d < 1:
        raise UsageError("--d must be positive")
    if args.command in ("enumerate", "kl"):
        if getattr(args, "shape_b", None):
            cfg.shape = parse_shape_b(args.shape_b)
        elif getattr(args, "shape", None):
            if not cfg.tag:
                raise UsageError("--shape needs --type")
            cfg.shape = parse_shape(args.shape, cfg.tag)
        if cfg.shape is not None:
            if cfg.tag and cfg.tag != cfg.shape.kind:
                raise UsageError("--type does not match the shape")
            if cfg.d is not None and cfg.d != cfg.shape.d:
                raise UsageError(f"--d {cfg.d} does not match shape of size {cfg.shape.d}")
            cfg.tag, cfg.d = cfg.shape.kind, cfg.shape.d
        if cfg.tag is None or cfg.d is None:
            raise UsageError("--type and --d (or a shape) are required")
        if args.J is not None:
            cfg.J = parse_J(args.J)
            bad = [j for j in cfg.J if j not in weyl.WeylType(cfg.tag, cfg.d).generators]
            if bad:
                raise UsageError(f"generator indices {bad} invalid for {cfg.tag}{cfg.d}")
    if args.command == "enumerate":
        cfg.map_variant = args.map_variant
        cfg.what = [k for k in ("group", "reps", "compositions", "partitions", "std", "rstd") if getattr(args, k)]
        if not cfg.what:
            raise UsageError("choose at least one of --group --reps --compositions --partitions --std --rstd")
        if ("std" in cfg.what or "rstd" in cfg.what) and cfg.shape is None:
            raise UsageError("--std/--rstd need --shape or --shape-b")
        if "reps" in cfg.what and cfg.J is None and cfg.shape is None:
            raise UsageError("--reps needs --J or a shape")
    elif args.command == "kl":
        cfg.side = args.side
        cfg.map_variant = args.map_variant
        cfg.a_variant = args.a_variant
        if cfg.J is None:
            if cfg.shape is None:
                raise UsageError("kl needs --J or a shape")
            cfg.J = composition_to_J(cfg.shape)
    else:
        cfg.max_d = args.max_d
        suites = args.suite or ["all"]
        suites = [verify.SUITE_ALIASES.get(s, s) for s in suites]
        cfg.suites = list(verify.SUITES) if "all" in suites else list(dict.fromkeys(suites))
    return cfg


# -- commands ---------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig) -> tuple[int, dict]:
    t = weyl.WeylType(cfg.tag, cfg.d)
    report: dict = {"schema_version": SCHEMA_VERSION, "command": "enumerate", "type": t.tag, "d": t.d}
    if "group" in cfg.what:
        group = weyl.weyl_group(t)
        report["group"] = {
            "order": len(group),
            "elements": [{"window": w.to_json(), "length": group.length(w)} for w in group.elements],
        }
    if "reps" in cfg.what:
        J = cfg.J if cfg.J is not None else composition_to_J(cfg.shape)
        reps = weyl.minimal_coset_reps(t, J)
        report["reps"] = {"J": list(J), "count": len(reps), "windows": [w.to_json() for w in reps]}
    for key, fn in (("compositions", shapes.all_compositions), ("partitions", shapes.partitions)):
        if key in cfg.what:
            rows = [
                {"parts": list(c.parts), "J": list(composition_to_J(c)), "young": shapes.young_subgroup_label(c)}
                for c in fn(t.tag, t.d)
            ]
            report[key] = {"count": len(rows), "rows": rows}
    for key, fn in (("std", shapes.enumerate_standard), ("rstd", shapes.enumerate_row_standard)):
        if key in cfg.what:
            tabs = fn(cfg.shape)
            ok, image = shapes.check_bijection(cfg.shape, cfg.map_variant)
            items = []
            for T in tabs:
                entry = T.to_json()
                if T in image and ok:
                    entry["coset_rep"] = image[T].to_json()
                items.append(entry)
            report[key] = {"shape": list(cfg.shape.parts), "count": len(tabs), "tableaux": items}
    return EXIT_OK, report


def cmd_kl(cfg: RunConfig) -> tuple[int, dict]:
    t = weyl.WeylType(cfg.tag, cfg.d)
    table = heckemod.kl_table(t, cfg.J, cfg.side)
    report = {"schema_version": SCHEMA_VERSION, "command": "kl", **table.to_json()}
    if cfg.shape is not None and composition_to_J(cfg.shape) == table.ctx.J:
        profile = cob.ConventionProfile(cfg.side, cfg.map_variant, cfg.a_variant)
        if not shapes.check_bijection(cfg.shape, cfg.map_variant)[0]:
            raise UsageError(f"{cfg.map_variant} is not a bijection onto D_J for {cfg.shape}")
        A = cob.a_matrix(cfg.shape, profile)
        report["a_matrix"] = {
            "shape": list(cfg.shape.parts),
            "map_variant": cfg.map_variant,
            "a_variant": cfg.a_variant,
            "cols": [shapes.tableau_to_coset_rep(T, cfg.map_variant).to_json() for T in A.cols],
            "entries": A.entries,
        }
    return EXIT_OK, report


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    results = []
    for name in cfg.suites:
        fn = verify.SUITES[name]
        params = inspect.signature(fn).parameters
        kwargs: dict = {}
        if "tag" in params:
            # the specht suite defaults to type A, where ranks are asserted
            kwargs["tag"] = cfg.tag if cfg.tag or name != "specht" else "A"
            kwargs["max_d"] = cfg.max_d or cfg.d
        if "seed" in params:
            kwargs["seed"] = cfg.seed
        results.append(fn(**kwargs).to_json())
    passed = all(r["passed"] for r in results)
    report = {"schema_version": SCHEMA_VERSION, "command": "verify", "passed": passed, "suites": results}
    return (EXIT_OK if passed else EXIT_FAIL), report


COMMANDS = {"enumerate": cmd_enumerate, "kl": cmd_kl, "verify": cmd_verify}


# -- output -----------------------------------------------------------------


def _poly_str(obj: dict) -> str:
    from .laurent import LaurentPoly

    return str(LaurentPoly.from_json(obj))


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cmd = report["command"]
    if cmd == "kl":
        reps = report["reps"]
        writer.writerow(["x", "w", "m", "p"])
        for x, row in enumerate(report["m"]):
            for w, m in enumerate(row):
                p = report["p"][x][w]
                if m or p:
                    writer.writerow([_window(reps[x]), _window(reps[w]), _poly_str(m), _poly_str(p)])
    elif cmd == "verify":
        writer.writerow(["suite", "passed", "checks", "failures"])
        for s in report["suites"]:
            writer.writerow([s["name"], s["passed"], s["checks"], len(s["failures"])])
    else:
        writer.writerow(["section", "item", "value"])
        for key in ("group", "reps", "compositions", "partitions", "std", "rstd"):
            if key not in report:
                continue
            sec = report[key]
            if key == "group":
                for e in sec["elements"]:
                    writer.writerow([key, _window(e["window"]), e["length"]])
            elif key == "reps":
                for w in sec["windows"]:
                    writer.writerow([key, _window(w), ""])
            elif key in ("compositions", "partitions"):
                for r in sec["rows"]:
                    writer.writerow([key, ",".join(map(str, r["parts"])), ",".join(map(str, r["J"]))])
            else:
                for T in sec["tableaux"]:
                    writer.writerow([key, json.dumps(T["rows"]), _window(T["coset_rep"]) if "coset_rep" in T else ""])
    return buf.getvalue()


def _window(w: list[int]) -> str:
    return "|" + ",".join(map(str, w)) + "|"


def render_pretty(report: dict) -> str:
    cmd = report["command"]
    lines = []
    if cmd == "kl":
        reps = [_window(w) for w in report["reps"]]
        lines.append(f"type {report['type']}{report['d']}  J={report['J']}  side={report['side']}  |D_J|={len(reps)}")
        for name in ("m", "p"):
            lines.append(f"{name}[x][w]:")
            width = max(len(r) for r in reps)
            for x, row in enumerate(report[name]):
                cells = [_poly_str(f) for f in row]
                lines.append(reps[x].ljust(width) + "  " + "  ".join(c.rjust(8) for c in cells))
        if "a_matrix" in report:
            a = report["a_matrix"]
            lines.append(f"a[x][T] ({a['a_variant']}, {a['map_variant']}), columns T by w_T:")
            lines.append(" " * width + "  " + "  ".join(_window(c).rjust(8) for c in a["cols"]))
            for x, row in enumerate(a["entries"]):
                lines.append(reps[x].ljust(width) + "  " + "  ".join(str(v).rjust(8) for v in row))
    elif cmd == "verify":
        for s in report["suites"]:
            mark = "PASS" if s["passed"] else "FAIL"
            lines.append(f"[{mark}] {s['name']}: {s['checks']} checks, {len(s['failures'])} failures")
            for f in s["failures"][:10]:
                lines.append(f"    {json.dumps(f)}")
            if s["name"] == "unitriangular":
                lines.append(f"    surviving profiles: {len(s['details']['surviving'])}")
                for label in s["details"]["surviving"]:
                    lines.append(f"      {label}")
            if s["name"] == "orientation":
                for v, info in s["details"]["variants"].items():
                    lines.append(f"    {v}: certified={info['certified']} violations={info['violations']}")
        lines.append("PASSED" if report["passed"] else "FAILED")
    else:
        lines.append(f"type {report['type']}{report['d']}")
        if "group" in report:
            lines.append(f"group order: {report['group']['order']}")
            for e in report["group"]["elements"]:
                lines.append(f"  {_window(e['window'])}  length {e['length']}")
        if "reps" in report:
            lines.append(f"minimal coset representatives for J={report['reps']['J']}: {report['reps']['count']}")
            lines.extend(f"  {_window(w)}" for w in report["reps"]["windows"])
        for key in ("compositions", "partitions"):
            if key in report:
                lines.append(f"{key}: {report[key]['count']}")
                for r in report[key]["rows"]:
                    lines.append(f"  ({','.join(map(str, r['parts']))})  J={{{','.join(map(str, r['J']))}}}  {r['young']}")
        for key in ("std", "rstd"):
            if key in report:
                sec = report[key]
                lines.append(f"{key} tableaux of shape {tuple(sec['shape'])}: {sec['count']}")
                for T in sec["tableaux"]:
                    rows = "/".join(",".join(map(str, r)) for r in T["rows"])
                    rep = f"  -> {_window(T['coset_rep'])}" if "coset_rep" in T else ""
                    lines.append(f"  {rows}{rep}")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(report)
    if fmt == "pretty":
        return render_pretty(report)
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(args)
        code, report = COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except weyl.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = render(report, cfg.fmt)
    if cfg.output is not None:
        cfg.output.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

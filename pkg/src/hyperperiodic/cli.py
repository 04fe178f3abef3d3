"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports a failing generator,
2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .action import MODEL_NAMES, element_table, standard_model
from .errors import HyperperiodicError
from .polygon import RotationAction, build, multiple_orbits, pairs_of, standard_family, tv_from_polygon
from .twists import verify_family
from .valency import (
    FAMILIES,
    FamilyTag,
    TotalValency,
    all_tags,
    classify_hyperelliptic,
    closed_form_tv,
    parse_tv,
    tv_power,
)
from .words import load_rule_tables

_FAMILY_ALIASES = {"1": "F1", "2": "F2", "3": "F3", "I3": "IF3", "i3": "IF3"}


def _family(text: str) -> str:
    family = _FAMILY_ALIASES.get(text, text.upper())
    if family not in FAMILIES:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}")
    return family


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _read_tv(text: str) -> TotalValency:
    text = text.strip()
    if text.startswith("{"):
        return TotalValency.from_dict(json.loads(text))
    return parse_tv(text)


def _tv_argument(args) -> TotalValency:
    text = args.tv if args.tv is not None else args.json
    if text is None:
        raise HyperperiodicError("a total valency is required (positional or --json)")
    return _read_tv(text)


def _emit_tv(tv: TotalValency, fmt: str) -> str:
    return _dumps(tv.to_dict()) if fmt == "json" else str(tv)


def cmd_tv(args, out):
    if args.source == "polygon":
        if args.family == "IF3":
            raise HyperperiodicError("the I*f3 family has no polygon rotation model")
        surface, rot = standard_family(args.family, args.genus)
        tv = tv_from_polygon(surface, RotationAction(rot.step * args.k))
    else:
        tv = closed_form_tv(FamilyTag(args.family, args.k), args.genus)
    print(_emit_tv(tv, args.format), file=out)
    return 0


def cmd_power(args, out):
    print(_emit_tv(tv_power(_tv_argument(args), args.k), args.format), file=out)
    return 0


def cmd_classify(args, out):
    tag = classify_hyperelliptic(_tv_argument(args))
    if args.format == "json":
        print(_dumps(None if tag is None else tag.to_dict()), file=out)
    else:
        print("none" if tag is None else str(tag), file=out)
    return 0


def cmd_enumerate(args, out):
    model = standard_model(MODEL_NAMES[int(args.family[1]) - 1], args.genus)
    group = model.group
    for x, tv in element_table(model):
        if args.format == "json":
            print(_dumps({"element": group.format(x), "order": tv.order, "tv": tv.to_dict()}), file=out)
        else:
            print(f"{group.format(x)}\t{tv}", file=out)
    return 0


def cmd_polygon(args, out):
    if args.pairing is not None:
        if args.m is None:
            raise HyperperiodicError("--m is required with --pairing")
        if args.pairing == "-":
            pairs = json.load(sys.stdin)
        else:
            with open(args.pairing, encoding="utf-8") as fh:
                pairs = json.load(fh)
        surface = build(args.m, pairs)
        rot = RotationAction(args.step)
    elif args.family is not None and args.genus is not None:
        surface, rot = standard_family(args.family, args.genus)
        if args.step is not None:
            rot = RotationAction(args.step)
    else:
        raise HyperperiodicError("give either --m/--pairing or --family/--genus")
    orbits = multiple_orbits(surface, rot)
    tv = tv_from_polygon(surface, rot)
    if args.format == "json":
        print(
            _dumps(
                {
                    "m": surface.m,
                    "genus": surface.genus,
                    "step": rot.step,
                    "pairing": [list(p) for p in pairs_of(surface)],
                    "orbits": [
                        {"size": o.size, "lambda": o.isotropy, "nu": o.rotation,
                         "theta": o.valency.theta}
                        for o in orbits
                    ],
                    "tv": tv.to_dict(),
                }
            ),
            file=out,
        )
    else:
        print(f"{surface.m}-gon, genus {surface.genus}, rotation by {rot.step}", file=out)
        for o in orbits:
            print(f"  orbit size {o.size}  isotropy {o.isotropy}  nu {o.rotation}  valency {o.valency}", file=out)
        print(tv, file=out)
    return 0


def cmd_verify(args, out):
    extensions = load_rule_tables(args.extensions) if args.extensions else None
    report = verify_family(args.family, args.genus, extensions)
    print(_dumps(report.to_dict()) if args.format == "json" else report.to_text(), file=out)
    if report.needs_extended_rules and args.format != "json":
        print("warning: some generators need rules beyond the built-in tables", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_table(args, out):
    for tag in all_tags(args.genus):
        tv = closed_form_tv(tag, args.genus)
        canonical = classify_hyperelliptic(tv)
        if args.format == "json":
            print(_dumps({"tag": tag.to_dict(), "tv": tv.to_dict(), "canonical": canonical.to_dict()}), file=out)
        else:
            print(f"{str(tag):<10} {str(tv):<50} {canonical}", file=out)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperperiodic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, helptext, fmt="json"):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--format", choices=("json", "text"), default=fmt)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = command("tv", "total valency of a family member")
    p.add_argument("--family", type=_family, required=True, help="1, 2, 3 or I3")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--k", type=int, default=1, help="exponent (default 1)")
    p.add_argument("--source", choices=("closed-form", "polygon"), default="closed-form")
    p.set_defaults(func=cmd_tv)

    for name, func, helptext in (
        ("power", cmd_power, "total valency of the k-th power"),
        ("classify", cmd_classify, "hyperelliptic family tag of a total valency"),
    ):
        p = command(name, helptext)
        p.add_argument("tv", nargs="?", help="'[g,n; t/l + ...]' literal or JSON object")
        p.add_argument("--json", help="same as the positional argument")
        if name == "power":
            p.add_argument("--k", type=int, required=True)
        p.set_defaults(func=func)

    p = command("enumerate", "element -> total valency table of G1, G2 or G3")
    p.add_argument("--family", type=_family, required=True, help="1, 2 or 3")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = command("polygon", "rotation of a glued polygon")
    p.add_argument("--m", type=int)
    p.add_argument("--pairing", help="JSON file with a list of edge pairs ('-' for stdin)")
    p.add_argument("--step", type=int)
    p.add_argument("--family", type=_family)
    p.add_argument("--genus", type=int)
    p.set_defaults(func=cmd_polygon)

    p = command("verify", "check a twist product against the rotation", fmt="text")
    p.add_argument("--family", type=_family, required=True, help="1, 2 or 3")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--extensions", help="JSON rule-table file with extra twist entries")
    p.set_defaults(func=cmd_verify)

    p = command("table", "every family member at a genus", fmt="text")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return parser


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    genus = getattr(args, "genus", None)
    if genus is not None and genus < 2:
        parser.error("genus must be at least 2")
    if args.command in ("enumerate", "verify") and args.family == "IF3":
        parser.error("--family must be 1, 2 or 3 here")
    if args.command == "polygon" and args.pairing is not None and args.step is None:
        parser.error("--step is required with --pairing")
    try:
        with _sink(args.output) as out:
            return args.func(args, out)
    except (HyperperiodicError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``scrollsmith <subcommand> ...``.

Exit codes: 0 Established (or plain success), 1 Inconclusive, 3 Refuted or
refuted by a cited argument, 2 usage, parse or domain error.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .atlas import AppendStatus, Catalog, default_catalog_path, enumerate_candidates, scroll_invariants
from .bundles import ExtensionBundle, ey_family
from .cohomology import cohomology
from .criteria import (
    ConditionReport,
    check_brosius,
    check_prop_cinque,
    check_prop_due,
    check_prop_uno_b,
    check_restriction_props,
    check_valma,
    check_valmae,
    finalno_obstruction,
    reider_exceptions,
    search_valma_witness,
    search_valmae_witness,
    teoy_verdict,
)
from .divisors import AnyClass, BlownPlaneClass, DivisorClass, PlaneClass, RuledBase, euler_characteristic
from .schema import SpecError, load_bundle_spec, load_search_box
from .verdict import DomainError, Verdict

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_USAGE = 2
EXIT_REFUTED = 3

# flags whose values may legitimately start with '-'
_VALUE_FLAGS = {"--class", "--A", "--D", "--mults", "--degree", "--genus"}


class UsageError(Exception):
    pass


def exit_code(verdict: Verdict) -> int:
    if verdict is Verdict.ESTABLISHED:
        return EXIT_OK
    if verdict.is_refutation:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def parse_surface(text: str) -> RuledBase:
    """P2, F<e> or F_<e>, elliptic:<e>[:indec], genus:<g>:<e>."""
    t = text.strip()
    if t.upper() == "P2":
        return RuledBase.plane()
    m = re.fullmatch(r"[Ff]_?(\d+)", t)
    if m:
        return RuledBase.hirzebruch(int(m.group(1)))
    m = re.fullmatch(r"elliptic:(-?\d+)(?::(dec|indec))?", t)
    if m:
        e = int(m.group(1))
        dec = m.group(2) == "dec" if m.group(2) else e >= 0
        return RuledBase.elliptic(e, dec)
    m = re.fullmatch(r"genus:(\d+):(-?\d+)", t)
    if m:
        return RuledBase.genus(int(m.group(1)), int(m.group(2)))
    raise UsageError(f"--surface: cannot parse {text!r} (use P2, F<e>, elliptic:<e>[:indec], genus:<g>:<e>)")


def parse_class(text: str, base: RuledBase, flag: str = "--class") -> AnyClass:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected integers, got {text!r}") from None
    if base.is_plane:
        if len(parts) != 1:
            raise UsageError(f"{flag}: a class on P2 is one integer")
        return PlaneClass(parts[0])
    if len(parts) != 2:
        raise UsageError(f"{flag}: a class on a ruled surface is 'a,b'")
    return DivisorClass(*parts)


def parse_mults(text: str) -> tuple[int, ...]:
    """Comma list of multiplicities; ``2x9`` repeats 2 nine times."""
    out: list[int] = []
    for chunk in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*(?:x\s*(\d+))?\s*", chunk)
        if not m:
            raise UsageError(f"--mults: cannot parse {chunk!r}")
        out += [int(m.group(1))] * int(m.group(2) or 1)
    return tuple(out)


def parse_bounds(text: Optional[str], flag: str) -> Optional[tuple[Optional[int], Optional[int]]]:
    if text is None:
        return None
    m = re.fullmatch(r"(-?\d+)?(:)?(-?\d+)?", text.strip())
    if not m or (m.group(1) is None and m.group(3) is None):
        raise UsageError(f"{flag}: expected N, LO:HI, LO: or :HI, got {text!r}")
    lo = int(m.group(1)) if m.group(1) else None
    hi = int(m.group(3)) if m.group(3) else None
    if not m.group(2):
        hi = lo
    return lo, hi


def _report_payload(report: ConditionReport, **extra) -> dict:
    out = report.to_json()
    out.update(extra)
    return out


def cmd_cohomology(args) -> int:
    base = parse_surface(args.surface)
    D = parse_class(args.cls, base)
    c = cohomology(D, base)
    h0, h1, h2 = c.values
    _emit({
        "surface": base.label,
        "class": D.to_json(),
        "h0": h0,
        "h1": h1,
        "h2": h2,
        "chi": euler_characteristic(D, base),
    })
    return EXIT_OK


def _need_spec(args) -> ExtensionBundle:
    if not args.spec:
        raise UsageError(f"--spec is required for criterion {args.criterion}")
    return load_bundle_spec(args.spec)


def cmd_check(args) -> int:
    crit = args.criterion
    if crit == "brosius":
        if None in (args.e, args.t, args.k):
            raise UsageError("brosius needs --e, --t and --k")
        report = check_brosius(args.e, args.t, args.k)
        _emit(_report_payload(report))
        return exit_code(report.verdict)

    if crit == "cinque":
        base = parse_surface(args.surface) if args.surface else _need_spec(args).base
        if args.D is None or args.A is None:
            raise UsageError("cinque needs --D and --A")
        report = check_prop_cinque(base, parse_class(args.D, base, "--D"), parse_class(args.A, base, "--A"), args.z or 1)
        _emit(_report_payload(report))
        return exit_code(report.verdict)

    E = _need_spec(args)
    if crit in ("due", "uno-b"):
        if args.A is None:
            raise UsageError(f"{crit} needs --A")
        A = parse_class(args.A, E.base, "--A")
        if crit == "due":
            report = check_prop_due(E, A, args.search_bound)
        else:
            report = check_prop_uno_b(E, A, args.eps)
        _emit(_report_payload(report))
        return exit_code(report.verdict)

    check = check_valma if crit == "valma" else check_valmae
    search = search_valma_witness if crit == "valma" else search_valmae_witness
    if args.scan:
        report = search(E, args.x_max, args.z_max)
        if report is None:
            _emit({"criterion": crit, "verdict": Verdict.INCONCLUSIVE.value, "witness": None,
                   "detail": "no witness within the scan bounds"})
            return EXIT_INCONCLUSIVE
    else:
        if args.x is None or args.z is None:
            raise UsageError(f"{crit} needs --x and --z, or --scan")
        report = check(E, args.x, args.z)
    _emit(_report_payload(report))
    return exit_code(report.verdict)


def cmd_ey(args) -> int:
    if args.invariants:
        inv = scroll_invariants(ey_family(args.y, args.h))
        _emit({"y": args.y, "h": args.h, "invariants": inv.to_json()})
        return EXIT_OK
    if args.restriction_props:
        report = check_restriction_props(args.y, args.h)
    else:
        report = teoy_verdict(args.y, args.h)
    _emit(_report_payload(report))
    return exit_code(report.verdict)


def cmd_reider(args) -> int:
    report = reider_exceptions(BlownPlaneClass(args.d, parse_mults(args.mults)))
    _emit(_report_payload(report))
    return exit_code(report.verdict)


def cmd_finalno(args) -> int:
    report = finalno_obstruction(args.x, args.points, args.h0)
    _emit(_report_payload(report))
    return exit_code(report.verdict)


def cmd_search(args) -> int:
    box = load_search_box(args.box)
    updates = {}
    if args.x_max is not None:
        updates["x_max"] = args.x_max
    if args.z_max is not None:
        updates["z_max"] = args.z_max
    if updates:
        box = box.model_copy(update=updates)
    catalog = Catalog(args.out or default_catalog_path())
    appended, duplicates, rows = 0, 0, []
    for entry in enumerate_candidates(box, jobs=args.jobs, deterministic=args.deterministic):
        status = catalog.append(entry)
        if status is AppendStatus.APPENDED:
            appended += 1
        else:
            duplicates += 1
        rows.append({
            "label": entry.spec.get("label", ""),
            "witness": list(entry.witness) if entry.witness else None,
            "degree": entry.invariants.degree,
            "sectional_genus": entry.invariants.sectional_genus,
            "status": status.value,
        })
    _emit({"catalog": str(catalog.path), "tuples": box.size, "appended": appended,
           "duplicates": duplicates, "entries": rows})
    return EXIT_OK


def cmd_catalog_query(args) -> int:
    catalog = Catalog(args.catalog or default_catalog_path())
    result = catalog.query(
        degree=parse_bounds(args.degree, "--degree"),
        genus=parse_bounds(args.genus, "--genus"),
        base_kind=args.base_kind,
    )
    _emit({"catalog": str(catalog.path), "skipped": result.skipped,
           "entries": [e.to_json() for e in result.entries]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scrollsmith", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    p.add_argument("--deterministic", action="store_true", help="omit timestamps from catalog entries")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="exact h0, h1, h2 and chi of a line bundle")
    c.add_argument("--surface", required=True, help="P2 or F<e>")
    c.add_argument("--class", dest="cls", required=True, help="'a,b' on F_e or 'd' on P2")
    c.set_defaults(func=cmd_cohomology)

    k = sub.add_parser("check", help="run one criterion on a bundle spec")
    k.add_argument("--criterion", required=True,
                   choices=["valma", "valmae", "cinque", "brosius", "due", "uno-b"])
    k.add_argument("--spec", help="bundle spec JSON file")
    k.add_argument("--x", type=int)
    k.add_argument("--z", type=int)
    k.add_argument("--scan", action="store_true", help="search for the first witness (x, z)")
    k.add_argument("--x-max", type=int)
    k.add_argument("--z-max", type=int, default=12)
    k.add_argument("--A", help="class A for due, uno-b and cinque")
    k.add_argument("--D", help="class D for cinque")
    k.add_argument("--surface", help="base for cinque when no spec is given")
    k.add_argument("--eps", type=int, default=1, choices=[0, 1])
    k.add_argument("--search-bound", type=int, default=64)
    k.add_argument("--e", type=int)
    k.add_argument("--t", type=int)
    k.add_argument("--k", type=int)
    k.set_defaults(func=cmd_check)

    y = sub.add_parser("ey", help="the E_y family on F_1")
    y.add_argument("--y", type=int, required=True)
    y.add_argument("--h", type=int, required=True)
    mode = y.add_mutually_exclusive_group()
    mode.add_argument("--verdict", action="store_true", help="tabulated verdict (default)")
    mode.add_argument("--restriction-props", action="store_true")
    mode.add_argument("--invariants", action="store_true")
    y.set_defaults(func=cmd_ey)

    r = sub.add_parser("reider", help="adjoint-system candidates on a blown-up plane")
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--mults", required=True, help="e.g. 2x9 or 2,2,1x3")
    r.set_defaults(func=cmd_reider)

    f = sub.add_parser("finalno", help="h0 lower bound against a claimed h0(T)")
    f.add_argument("--x", type=int, required=True)
    f.add_argument("--points", type=int, required=True)
    f.add_argument("--h0", type=int, required=True)
    f.set_defaults(func=cmd_finalno)

    s = sub.add_parser("search", help="sweep a parameter box and append certified entries")
    s.add_argument("--box", required=True)
    s.add_argument("--out", help="catalog path (default: $SCROLLSMITH_CATALOG)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS,
                   help="omit timestamps from catalog entries")
    s.add_argument("--x-max", type=int)
    s.add_argument("--z-max", type=int)
    s.set_defaults(func=cmd_search)

    cat = sub.add_parser("catalog", help="read the catalog")
    catsub = cat.add_subparsers(dest="catalog_command", required=True)
    q = catsub.add_parser("query")
    q.add_argument("--catalog", help="catalog path (default: $SCROLLSMITH_CATALOG)")
    q.add_argument("--degree", help="N or LO:HI")
    q.add_argument("--genus", help="N or LO:HI")
    q.add_argument("--base-kind", choices=["rational", "elliptic"])
    q.set_defaults(func=cmd_catalog_query)
    return p


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(range(len(argv)))
    skip = False
    for i in it:
        if skip:
            skip = False
            continue
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            skip = True
        else:
            out.append(a)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, SpecError, DomainError) as exc:
        sys.stderr.write(f"scrollsmith: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

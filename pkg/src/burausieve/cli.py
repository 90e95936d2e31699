"""Command-line front end.

Subcommands: factors (irreducible factors of phi_N(-t) mod p), skeleton
(universal-subgroup enumeration), sieve (candidate extraction plus genus
filter over a sweep range), table (golden-data verification), addendum
(pairwise exclusion and conjugacy).  Exit codes: 0 ok, 1 verification
failure, 2 bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .exactalg import cyclotomic, factor_over_prime, parse_poly, substitute_neg
from .golden import GOLDEN_ROWS, self_check
from .intersect import conjugate_to_e2, verify_addendum_pairwise
from .sieve import SWEEP_RANGE, full_sweep
from .skeleton import DEFAULT_STATE_CAP, EnumerationCapExceeded, Skeleton, \
    UniversalGroupSpec, enumerate_universal, genus
from .typesys import TYPE_TAGS, admissible_types, root_spec

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def default_cache_dir():
    env = os.environ.get("BURAU_SIEVE_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "burau-sieve")


@dataclass
class RunConfig:
    """Sweep and cache settings, optionally loaded from a JSON file."""

    n_range: tuple = SWEEP_RANGE
    informative_sets: dict = field(default_factory=dict)
    state_cap: int = DEFAULT_STATE_CAP
    cache_dir: str = field(default_factory=default_cache_dir)
    fmt: str = "text"

    @staticmethod
    def load(path):
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        cfg = RunConfig()
        if "informative_sets" in raw:
            cfg.informative_sets = {int(k): v
                                    for k, v in raw["informative_sets"].items()}
        if "state_cap" in raw:
            cfg.state_cap = int(raw["state_cap"])
        if "cache_dir" in raw:
            cfg.cache_dir = raw["cache_dir"]
        return cfg


def _dump(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


# -- skeleton cache ----------------------------------------------------------


def _cache_key(p, min_poly_text, tag, ambient):
    poly = min_poly_text.replace("^", "").replace("+", "_").replace("-", "m")
    tag = tag.replace("+", "p").replace("-", "m")
    return f"p{p}-{poly}-{tag}-{ambient}.json"


def cached_enumerate(root, tag, ambient, state_cap, cache_dir):
    """enumerate_universal with a transparent on-disk cache."""
    key = _cache_key(root.p, str(root.min_poly), tag, ambient)
    path = os.path.join(cache_dir, key) if cache_dir else None
    if path and os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("schemaVersion") == SCHEMA_VERSION:
            return Skeleton(tuple(data["blackPerm"]), tuple(data["whitePerm"]))
    sk = enumerate_universal(UniversalGroupSpec(root, tag, ambient), state_cap)
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "blackPerm": list(sk.black),
            "whitePerm": list(sk.white),
        }
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload))
        os.replace(tmp, path)
    return sk


# -- subcommands ---------------------------------------------------------------


def cmd_factors(args, cfg, out):
    poly = substitute_neg(cyclotomic(args.n))
    try:
        factors = factor_over_prime(poly, args.p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    texts = [str(f) for f in factors]
    if args.json:
        out(_dump({"schemaVersion": SCHEMA_VERSION, "N": args.n, "p": args.p,
                   "factors": texts}))
    else:
        out(f"phi_{args.n}(-t) mod {args.p}: " + ", ".join(texts))
    return EXIT_OK


def cmd_skeleton(args, cfg, out):
    try:
        root = root_spec(args.p, parse_poly(args.min_poly))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.type not in admissible_types(root):
        print(f"error: type {args.type} not admissible for {root}",
              file=sys.stderr)
        return EXIT_INPUT
    try:
        sk = cached_enumerate(root, args.type, args.ambient, cfg.state_cap,
                              cfg.cache_dir if not args.no_cache else None)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    payload = {"schemaVersion": SCHEMA_VERSION, "p": args.p,
               "minPoly": str(root.min_poly), "N": root.N, "M": root.M,
               "type": args.type, "ambient": args.ambient}
    payload.update(sk.to_json_dict())
    if args.json:
        out(_dump(payload))
    else:
        out(f"{payload['signature']}  genus={payload['genus']}")
    return EXIT_OK


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"bad range {text!r}")
    if lo < SWEEP_RANGE[0] or hi > SWEEP_RANGE[1] or lo > hi:
        raise ValueError(f"range must lie within {SWEEP_RANGE[0]}..{SWEEP_RANGE[1]}")
    return lo, hi


def cmd_sieve(args, cfg, out):
    try:
        n_range = _parse_range(args.n_range)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sweep_cfg = {"informative_sets": cfg.informative_sets or None,
                 "state_cap": cfg.state_cap}
    try:
        results = full_sweep(n_range, sweep_cfg)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    payload = {"schemaVersion": SCHEMA_VERSION, "results": []}
    for N in sorted(results):
        entry = results[N]
        branches = {}
        for tr in entry["candidates"]:
            br = "p=2" if tr.p == 2 else ("p=3" if tr.p == 3 else "p odd")
            branches.setdefault(br, []).append(
                {"p": tr.p, "minPoly": str(tr.min_poly), "type": tr.type_tag})
        payload["results"].append({
            "N": N,
            "sets": entry["sets"],
            "branches": [{"N": N, "branch": br,
                          "triples": sorted(trs, key=lambda d: (d["p"], d["minPoly"], d["type"]))}
                         for br, trs in sorted(branches.items())],
            "survivors": entry["survivors"] if not args.raw else None,
        })
    if args.json:
        out(_dump(payload))
    else:
        for entry in payload["results"]:
            n_cand = sum(len(b["triples"]) for b in entry["branches"])
            out(f"N={entry['N']}: {n_cand} candidate triples")
            if entry["survivors"] is not None:
                for s in entry["survivors"]:
                    out(f"  survivor p={s['p']} minPoly={s['minPoly']} "
                        f"types={','.join(s['types'])}")
    return EXIT_OK


def cmd_table(args, cfg, out):
    rows = None
    if args.row is not None:
        if not 1 <= args.row <= len(GOLDEN_ROWS):
            print(f"error: row must be 1..{len(GOLDEN_ROWS)}", file=sys.stderr)
            return EXIT_INPUT
        rows = [args.row]
    if not args.verify:
        for row in GOLDEN_ROWS if rows is None else \
                [r for r in GOLDEN_ROWS if r.index in rows]:
            star = "*" if row.starred else " "
            out(f"{star} {row.index:2d} p={row.p:<3d} N={row.N:<3d} "
                f"{', '.join(row.factors)}")
        return EXIT_OK
    from .skeleton import table_verify
    try:
        report = table_verify(state_cap=cfg.state_cap, rows=rows)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        out(_dump({"schemaVersion": SCHEMA_VERSION, **report}))
    else:
        for row in report["rows"]:
            status = "pass" if row["ok"] else "FAIL"
            out(f"row {row['row']:2d} p={row['p']:<3d} N={row['N']:<3d} "
                f"{row['expected']:28s} {status}")
        n_ok = sum(1 for r in report["rows"] if r["ok"])
        out(f"{n_ok}/{len(report['rows'])} rows pass")
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def cmd_addendum(args, cfg, out):
    cache = cfg.cache_dir if not args.no_cache else None
    reps = []
    if args.all_groups:
        for row in GOLDEN_ROWS:
            for grp in row.factor_groups:
                root = root_spec(row.p, grp[0])
                reps.append((f"{row.label} {grp[0]}",
                             cached_enumerate(root, "I", "bu3", cfg.state_cap, cache)))
    else:
        for row in GOLDEN_ROWS:
            root = root_spec(row.p, row.factors[0])
            reps.append((row.label,
                         cached_enumerate(root, "I", "bu3", cfg.state_cap, cache)))
    pair_report = verify_addendum_pairwise(reps)

    conj = []
    conj_ok = True
    for row in GOLDEN_ROWS:
        root = root_spec(row.p, row.factors[0])
        realized = []
        for tag in sorted(admissible_types(root)):
            sk = cached_enumerate(root, tag, "bu3", cfg.state_cap, cache)
            if genus(sk) == 0:
                realized.append(tag)
        checks = {tag: conjugate_to_e2(UniversalGroupSpec(root, tag, "bu3"))
                  for tag in realized}
        ok = all(checks.values())
        conj_ok = conj_ok and ok
        conj.append({"row": row.label, "minPoly": row.factors[0],
                     "types": realized, "ok": ok})
    overall = pair_report["ok"] and conj_ok
    if args.json:
        out(_dump({"schemaVersion": SCHEMA_VERSION, "pairs": pair_report["pairs"],
                   "conjugacy": conj, "ok": overall}))
    else:
        n = len(pair_report["pairs"])
        n_ok = sum(1 for p in pair_report["pairs"] if p["minGenus"] >= 1)
        out(f"{n_ok}/{n} pairwise products have all components of genus >= 1")
        for c in conj:
            out(f"conjugate-to-e2 {c['row']:12s} types={','.join(c['types'])} "
                f"{'pass' if c['ok'] else 'FAIL'}")
    return EXIT_OK if overall else EXIT_VERIFY


def build_parser():
    ap = argparse.ArgumentParser(
        prog="burau-sieve",
        description="Exact re-execution of the exceptional-root classification: "
                    "resultant sieve, universal-subgroup skeletons, genus filter, "
                    "and pairwise exclusion.")
    ap.add_argument("--config", help="JSON config file")
    ap.add_argument("--cache-dir", help="skeleton cache directory "
                    "(default: BURAU_SIEVE_CACHE or ~/.cache/burau-sieve)")
    ap.add_argument("--state-cap", type=int, help="coset enumeration state cap")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factors", help="factor phi_N(-t) over F_p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("skeleton", help="enumerate one universal subgroup")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--min-poly", required=True)
    p.add_argument("--type", default="I", choices=list(TYPE_TAGS))
    p.add_argument("--ambient", default="bu3", choices=["bu3", "b3"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("sieve", help="run the resultant sieve over a range of N")
    p.add_argument("--n-range", default=f"{SWEEP_RANGE[0]}..{SWEEP_RANGE[1]}")
    p.add_argument("--raw", action="store_true",
                   help="report candidates only, skip the genus filter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("table", help="print or verify the embedded table")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--row", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("addendum", help="pairwise exclusion and conjugacy checks")
    p.add_argument("--all-groups", action="store_true",
                   help="one representative per skeleton iso-class instead of per row")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_addendum)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code) if exc.code else EXIT_OK
    self_check()
    cfg = RunConfig.load(args.config) if args.config else RunConfig()
    if args.cache_dir:
        cfg.cache_dir = args.cache_dir
    if args.state_cap:
        cfg.state_cap = args.state_cap
    lines = []
    code = args.func(args, cfg, lines.append)
    if lines:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())

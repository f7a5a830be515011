"""Command-line front end.

One binary, four subcommands:

    khs group {KS,KZ,TCS,TCZ,S,j,c,CPbar} N [--prime P]
    khs table [--max-n N] [--format ascii|markdown|latex|json]
    khs scan-irregular --max-p P [--jobs J] [--format text|json]
    khs report-cp --prime P

Configuration precedence is flags > environment (KHS_CACHE, KHS_KV_BOUND,
KHS_CP_MODE) > --config file > defaults.  Machine formats emit nothing
but the document on stdout; all diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import assemble, cpbar, kzeta, stems, tcsplit
from .abgroups import GroupValue, HomotopyGroup, group_value_to_json
from .config import CALIBRATED, LITERAL, Config, load_config
from .errors import KhsError
from .numtheory import scan_irregular, set_bernoulli_cache_path

SPECTRA = ("KS", "KZ", "TCS", "TCZ", "S", "j", "c", "CPbar")


def _homotopy_group(spectrum: str, n: int, p: int, cfg: Config) -> HomotopyGroup:
    mode = cfg.default_cp_mode
    bound = cfg.verified_kv_bound
    if spectrum == "KS":
        return HomotopyGroup(n, assemble.ks_free_rank(n), assemble.ks_torsion_at_p(p, n, mode))
    if spectrum == "KZ":
        free = 1 if n == 0 or (n % 4 == 1 and n > 1) else 0
        return HomotopyGroup(n, free, kzeta.kz_torsion(p, n, bound))
    if spectrum == "TCS":
        return HomotopyGroup(n, tcsplit.tc_s_free_rank(n), tcsplit.tc_s_torsion(p, n, mode))
    if spectrum == "TCZ":
        return tcsplit.tc_z_homotopy(p, n)
    if spectrum == "S":
        return HomotopyGroup(n, 1 if n == 0 else 0, stems.sphere_torsion(p, n))
    if spectrum == "j":
        return HomotopyGroup(n, 1 if n == 0 else 0, stems.image_of_j_torsion(p, n))
    if spectrum == "c":
        return HomotopyGroup(n, 0, stems.coker_j_torsion(p, n))
    # CPbar: the suspended reduced stunted projective summand; only its
    # torsion is known, the free rank is not computed here
    return HomotopyGroup(n, None, cpbar.cp_torsion(p, n, mode))


def _cmd_group(args, cfg: Config) -> int:
    n = args.n
    if args.prime is None:
        if args.spectrum != "KS":
            print(
                f"error: assembled (all-primes) output exists only for KS; "
                f"pass --prime for {args.spectrum}",
                file=sys.stderr,
            )
            return 1
        row = assemble.ks_group(n, cfg.default_cp_mode)
        if args.format == "json":
            print(json.dumps(row.to_json(), indent=1))
        else:
            print(f"pi_{n} K(S) = {assemble.render_row_ascii(row)}")
        return 0
    if args.prime == 2 or args.prime < 2:
        print("error: only odd primes are supported (2-primary data is static)", file=sys.stderr)
        return 1
    hg = _homotopy_group(args.spectrum, n, args.prime, cfg)
    if args.format == "json":
        out = {
            "spectrum": args.spectrum,
            "degree": hg.degree,
            "prime": args.prime,
            "free_rank": hg.free_rank,
            "torsion": group_value_to_json(hg.torsion),
        }
        print(json.dumps(out, indent=1))
    else:
        label = {"KS": "K(S)", "KZ": "K(Z)", "TCS": "TC(S)", "TCZ": "TC(Z)"}.get(
            args.spectrum, args.spectrum
        )
        rank = "not computed" if hg.free_rank is None else hg.free_rank
        from .abgroups import render

        print(
            f"pi_{n} {label} (p={args.prime}): free rank {rank}, "
            f"torsion {render(hg.torsion)}"
        )
    return 0


def _cmd_table(args, cfg: Config) -> int:
    fmt = args.format or cfg.output_format
    sys.stdout.write(assemble.table_generate(args.max_n, fmt, cfg.default_cp_mode))
    return 0


def _cmd_scan(args, cfg: Config) -> int:
    reports = scan_irregular(args.max_p, jobs=args.jobs)
    for r in reports:
        if args.format == "json":
            print(json.dumps({"p": r.p, "irregular": not r.is_regular, "indices": list(r.indices)}))
        else:
            kind = "regular" if r.is_regular else "irregular"
            idx = " " + ",".join(map(str, r.indices)) if r.indices else ""
            print(f"{r.p}\t{kind}{idx}")
    return 0


def _cmd_report_cp(args, cfg: Config) -> int:
    report = cpbar.cp_discrepancy_report(args.prime)
    if report.no_calibration:
        print(f"p={args.prime}: no calibration data; literal and calibrated modes coincide")
        return 0
    print(
        f"p={args.prime}: literal vs calibrated order of the suspended "
        f"stunted-projective torsion, even degrees <= {cpbar.cp_range(args.prime).even_order_max}"
    )
    for degree, literal, calibrated in report.entries:
        print(f"degree {degree}: literal order {literal}, calibrated order {calibrated}")
    if not report.entries:
        print("no disagreements")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khs",
        description="Exact p-primary homotopy of K(S), K(Z), TC(S), TC(Z) in the computable range",
    )
    parser.add_argument("--config", help="optional JSON config file")
    parser.add_argument("--cache", help="Bernoulli memo cache path (overrides KHS_CACHE)")
    parser.add_argument("--kv-bound", type=int, help="verified class-number-condition bound")
    parser.add_argument(
        "--cp-mode",
        choices=(CALIBRATED, LITERAL),
        help="correction-term mode for the stunted-projective order formula",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="one homotopy group, per-prime or assembled (KS only)")
    g.add_argument("spectrum", choices=SPECTRA)
    g.add_argument("n", type=int)
    g.add_argument("--prime", type=int)
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=_cmd_group)

    t = sub.add_parser("table", help="the pi_n K(S) table for n <= 22")
    t.add_argument("--max-n", type=int, default=stems.MAX_TABLE_DEGREE)
    t.add_argument("--format", choices=assemble.TABLE_FORMATS)
    t.set_defaults(func=_cmd_table)

    s = sub.add_parser("scan-irregular", help="irregular-prime scan via the mod-p kernel")
    s.add_argument("--max-p", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=_cmd_scan)

    r = sub.add_parser("report-cp", help="literal vs calibrated correction-term disagreements")
    r.add_argument("--prime", type=int, required=True)
    r.set_defaults(func=_cmd_report_cp)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(
            args.config,
            bernoulli_cache_path=args.cache,
            verified_kv_bound=args.kv_bound,
            default_cp_mode=args.cp_mode,
        )
        set_bernoulli_cache_path(cfg.bernoulli_cache_path)
        return args.func(args, cfg)
    except KhsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

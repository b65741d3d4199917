import sys
import logging
import argparse
from pathlib import Path

from dotenv import load_dotenv
from pydantic import ValidationError

from src.chains import (
    augment_ranks,
    duality_rank_check,
    hi_from_pair,
    hi_via_cone,
    relative_homology_ranks,
)
from src.config import load_settings
from src.documents import ChainReportDocument, ErrorDocument, ReportDocument, dump, load_chain, load_profile
from src.errors import ComputationError, InputError
from src.reproduce import CHAIN_EXAMPLES, PROFILE_EXAMPLES, reproduce
from src.stability import analyze


logger = logging.getLogger("singularity_hi")


def configure_logging(level: str):
    # stdout carries the JSON documents, so logs go to stderr
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _print_betti(label: str, ranks):
    print(f"{label:<28} {tuple(ranks)}")


def cmd_analyze(args) -> int:
    settings = load_settings()
    document = load_profile(args.profile)
    profile = document.to_profile(rho=args.rho, assume_trivial_monodromy=args.assume_trivial_monodromy)
    report = analyze(profile, limit=settings.mora_limit)
    output = ReportDocument.from_report(report, verbose=args.verbose)
    if args.json:
        print(dump(output))
        return 0

    _print_betti("b(V_s)", output.smooth)
    _print_betti("b(IV)", output.intersection_space)
    if output.singular is not None:
        _print_betti(f"b(V)  [rho={output.rho}, {output.provenance['rho']}]", output.singular)
    print(f"{'mu total':<28} {output.mu_total} ({output.provenance['mu_total']})")
    print(f"{'rk(T-1) total':<28} {output.rank_T_minus_1_total} ({output.provenance['rank_T_minus_1_total']})")
    print(f"{'trivial monodromy':<28} {output.trivial_monodromy}")
    print(f"{'stable':<28} {output.stable}")
    unstable = [degree for degree, flag in output.stability_flags.items() if not flag]
    print(f"{'unstable degrees':<28} {', '.join(unstable) or 'none'}")
    bounds = output.middle_bounds
    upper = "" if bounds.upper is None else f" <= {bounds.upper}"
    print(f"{'middle bounds':<28} {bounds.lower} <= {output.intersection_space[output.n]}{upper}")
    if output.euler_identity is not None:
        euler = output.euler_identity
        print(f"{'euler identity':<28} {euler.lhs} = {euler.rhs}: {'holds' if euler.holds else 'FAILS'}")
    if args.verbose:
        print()
        for line in output.trace or []:
            print(f"  {line}")
    return 0


def cmd_chain(args) -> int:
    pair = load_chain(args.pair).to_pair(cutoff=args.cutoff)
    reduced = hi_from_pair(pair)
    via_cone = hi_via_cone(pair)
    output = ChainReportDocument(
        manifold_dim=pair.manifold_dim,
        cutoff=pair.cutoff,
        hi_from_pair=augment_ranks(reduced).ranks,
        hi_via_cone=augment_ranks(via_cone).ranks,
        reduced=reduced.ranks,
        routes_agree=reduced.ranks == via_cone.ranks,
        relative_homology=relative_homology_ranks(pair).ranks,
        duality=duality_rank_check(pair) if args.check_duality else None,
        provenance={
            "manifold_dim": "user",
            "cutoff": "user",
            "hi_from_pair": "t-diagram",
            "hi_via_cone": "mapping-cone",
            "reduced": "t-diagram",
            "relative_homology": "mapping-cone",
        },
    )
    if not output.routes_agree:
        logger.warning("Closed formulas and mapping cone disagree: %s vs %s", reduced, via_cone)
    if args.json:
        print(dump(output))
        return 0
    _print_betti("HI (closed formulas)", output.hi_from_pair)
    _print_betti("HI (mapping cone)", output.hi_via_cone)
    _print_betti("H(M, L)", output.relative_homology)
    print(f"{'routes agree':<28} {output.routes_agree}")
    if output.duality is not None:
        print(f"{'duality':<28} {output.duality}")
    return 0


def cmd_reproduce(args) -> int:
    frame, passed = reproduce(args.example)
    if args.json:
        print(frame.to_json(orient="records", indent=2))
    else:
        print(frame.to_string(index=False))
        print()
        print("ALL PASS" if passed else "FAILURES PRESENT")
    return 0 if passed else 3


def cmd_list(args) -> int:
    for example_id in PROFILE_EXAMPLES:
        print(f"{example_id:<24} profile")
    for example_id in CHAIN_EXAMPLES:
        print(f"{example_id:<24} chain pair")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Betti numbers of intersection spaces of projective hypersurfaces with isolated singularities."
    )
    parser.add_argument(
        "--env-file",
        default=".env",
        help="Path to the .env file with SINGULARITY_* settings (default: .env).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze_parser = subparsers.add_parser("analyze", help="Run the stability pipeline on a profile JSON file.")
    analyze_parser.add_argument("profile", type=Path)
    analyze_parser.add_argument("--json", action="store_true", help="Print the report document as JSON.")
    analyze_parser.add_argument("--verbose", action="store_true", help="Debug logging plus the derivation trace.")
    analyze_parser.add_argument("--rho", type=int, help="Rank of H_n(L) -> H_n(M), overriding the profile.")
    analyze_parser.add_argument(
        "--assume-trivial-monodromy",
        action="store_true",
        help="Set rk(T-1) = 0 wherever no engine can compute it.",
    )
    analyze_parser.set_defaults(handler=cmd_analyze)

    chain_parser = subparsers.add_parser("chain", help="Compute HI from a chain-complex pair JSON file.")
    chain_parser.add_argument("pair", type=Path)
    chain_parser.add_argument("--cutoff", type=int, help="Truncation degree k, overriding the file.")
    chain_parser.add_argument("--check-duality", action="store_true", help="Compare cutoffs k and m - k.")
    chain_parser.add_argument("--json", action="store_true")
    chain_parser.set_defaults(handler=cmd_chain)

    reproduce_parser = subparsers.add_parser("reproduce", help="Check the bundled worked examples.")
    reproduce_parser.add_argument("example", help="Example id or 'all'.")
    reproduce_parser.add_argument("--json", action="store_true")
    reproduce_parser.set_defaults(handler=cmd_reproduce)

    list_parser = subparsers.add_parser("list", help="List bundled example ids.")
    list_parser.set_defaults(handler=cmd_list)
    return parser


def _fail(exc: Exception, exit_code: int) -> int:
    error = ErrorDocument(error=type(exc).__name__, message=str(exc), exit_code=exit_code)
    print(error.model_dump_json(), file=sys.stderr)
    return exit_code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    load_dotenv(args.env_file)
    settings = load_settings()
    verbose = getattr(args, "verbose", False)
    configure_logging("DEBUG" if verbose else settings.log_level)

    try:
        return args.handler(args)
    except InputError as exc:
        logger.error("Input error: %s", exc)
        return _fail(exc, exc.exit_code)
    except ValidationError as exc:
        logger.error("Validation error: %s", exc)
        return _fail(exc, InputError.exit_code)
    except ComputationError as exc:
        logger.error("Computation error: %s", exc)
        return _fail(exc, exc.exit_code)
    except Exception as exc:
        logger.error("Unexpected failure: %s", exc, exc_info=True)
        return _fail(exc, ComputationError.exit_code)


if __name__ == "__main__":
    sys.exit(main())

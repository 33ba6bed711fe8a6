"""Command-line front end.

Subcommands: family, matrix, certify, selftest.  Exit codes: 0 success,
1 Inconclusive certification, 2 input or usage error.  Text output is one
invariant per line with stable prefixes so scripts can grep it; --format
json emits the schemas used by the library types.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import PrimenessCertificate, primeness_certificate
from .errors import KnotCertError
from .seifert import AlexanderResult, FamilySpec, alexander, build_family, load_matrix
from .selfcheck import run_checks

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INPUT_ERROR = 2


def _family_label(kind: str, n: int, m: int) -> str:
    # m is a label only: the Seifert pairing does not depend on it.
    return f"K_{{{n},{m}}}" if kind == "C" else f"K'_{{{n},{m}}}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _print_alexander(result: AlexanderResult, label: str, fmt: str, out) -> None:
    if fmt == "json":
        doc = result.to_dict()
        doc["label"] = label
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write(f"knot: {label}\n")
        out.write(f"raw: {result.raw}\n")
        out.write(f"delta: {result.symmetric}\n")
        out.write(f"unit: {result.unit}\n")
        out.write(f"d: {result.d}\n")
        out.write(f"genus_upper: {result.genus_upper}\n")


def _print_certificate(cert: PrimenessCertificate, label: str, fmt: str, out) -> None:
    if fmt == "json":
        doc = cert.to_dict()
        doc["label"] = label
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write(f"knot: {label}\n")
        out.write(f"delta: {cert.delta}\n")
        out.write(f"d: {cert.d}\n")
        out.write(f"genus: {cert.genus if cert.genus is not None else 'undetermined'}\n")
        out.write(f"genus_argument: {cert.genus_argument}\n")
        if cert.factorization is not None:
            for poly, witness in cert.factorization.factors:
                w = witness.to_dict()
                out.write(
                    f"factor: {poly} [{w['method']}"
                    f"{', prime ' + str(w['eisenstein_prime']) if w['eisenstein_prime'] else ''}"
                    f"{', reversed' if w['on_reciprocal'] else ''}]\n"
                )
        for split in cert.rejected_splits:
            out.write(
                f"rejected_split: {split.left} | {split.right} "
                f"(admissible: {split.left_verdict.admissible}, "
                f"{split.right_verdict.admissible})\n"
            )
        out.write(f"verdict: {cert.verdict}\n")
        if cert.reason:
            out.write(f"reason: {cert.reason}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcert",
        description="Alexander polynomials from Seifert matrices, with primeness certificates.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    family = sub.add_parser("family", help="invariants of a built-in family member")
    family.add_argument("--kind", choices=("C", "E"), required=True)
    family.add_argument("--n", type=_positive_int, required=True)
    family.add_argument("--m", type=int, default=0, help="label only; invariants are m-independent")
    family.add_argument("--format", choices=("text", "json"), default="text")

    matrix = sub.add_parser("matrix", help="invariants of a Seifert matrix file")
    matrix.add_argument("--path", required=True)
    matrix.add_argument("--format", choices=("text", "json"), default="text")

    certify = sub.add_parser("certify", help="primeness certificate")
    certify.add_argument("--kind", choices=("C", "E"))
    certify.add_argument("--n", type=_positive_int)
    certify.add_argument("--m", type=int, default=0)
    certify.add_argument("--path", help="Seifert matrix file (alternative to --kind/--n)")
    certify.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("selftest", help="run the built-in cross-check suite")
    return parser


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching our contract
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK

    try:
        if args.subcommand == "family":
            result = alexander(build_family(FamilySpec(args.kind, args.n)))
            _print_alexander(result, _family_label(args.kind, args.n, args.m), args.format, out)
            return EXIT_OK

        if args.subcommand == "matrix":
            result = alexander(load_matrix(args.path))
            _print_alexander(result, args.path, args.format, out)
            return EXIT_OK

        if args.subcommand == "certify":
            if args.path is not None:
                source = load_matrix(args.path)
                label = args.path
            elif args.kind is not None and args.n is not None:
                source = FamilySpec(args.kind, args.n)
                label = _family_label(args.kind, args.n, args.m)
            else:
                err.write("certify needs either --path or both --kind and --n\n")
                return EXIT_INPUT_ERROR
            cert = primeness_certificate(source)
            _print_certificate(cert, label, args.format, out)
            return EXIT_OK if cert.verdict == "Prime" else EXIT_INCONCLUSIVE

        if args.subcommand == "selftest":
            results = run_checks()
            failed = [name for name, ok in results if not ok]
            for name, ok in results:
                out.write(f"{'PASS' if ok else 'FAIL'}: {name}\n")
            out.write(f"passed: {len(results) - len(failed)}\nfailed: {len(failed)}\n")
            return EXIT_OK if not failed else EXIT_INCONCLUSIVE

    except KnotCertError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR

    return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

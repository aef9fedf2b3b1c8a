"""Command-line front end: analyze, verify, snf, fermat.

Exit codes: 0 success, 1 failure or error, 2 input not separated,
3 oracle guard violation.  JSON output has a fixed key order, escapes
non-ASCII characters, and serializes unbounded integers and rationals as
decimal strings, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .autassembly import (
    NotAnAutomorphismError,
    aut_group,
    certify_pipeline_generators,
    fermat_form,
)
from .intlat import parse_matrix_text, smith_normal_form
from .permgroup import (
    TooManyVariablesError,
    brute_force_perm_order,
    cycle_notation,
    permutation_group,
)
from .polyio import NotSeparatedError, PolynomialError, parse_separated
from .quasitorus import (
    EnumerationTooLargeError,
    character_matrix,
    count_torsion_points_mod,
    torsion_count_formula,
)
from .rigidity import rigidity_certificate
from .torusgeom import torus_generators, weight_cone

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_SEPARATED = 2
EXIT_GUARD = 3

_ASCII_FALLBACK = {"⋉": "x|", "×": "x"}


def _printable(s: str) -> str:
    # mirror the symbolic notation, falling back to ASCII on narrow terminals
    enc = getattr(sys.stdout, "encoding", None) or "utf-8"
    try:
        s.encode(enc)
        return s
    except UnicodeEncodeError:
        for ch, rep in _ASCII_FALLBACK.items():
            s = s.replace(ch, rep)
        return s


def _read_input(arg: str) -> str:
    path = Path(arg)
    try:
        if path.is_file():
            return path.read_text().strip()
    except OSError:
        pass
    return arg


def _ints(vec) -> list[str]:
    return [str(int(x)) for x in vec]


def _frac(x) -> str | None:
    return None if x is None else str(x)


def run_verification(cf) -> list[dict]:
    """All applicable oracles, in a fixed order; guards become 'skipped'."""
    checks = []
    try:
        results = certify_pipeline_generators(cf)
        checks.append(
            {
                "oracle": "generators",
                "status": "pass",
                "detail": f"{len(results)} generators certified",
            }
        )
    except NotAnAutomorphismError as exc:
        checks.append({"oracle": "generators", "status": "fail", "detail": str(exc)})

    try:
        brute = brute_force_perm_order(cf)
        order = permutation_group(cf).order
        ok = brute == order
        checks.append(
            {
                "oracle": "perms",
                "status": "pass" if ok else "fail",
                "detail": f"brute force {brute}, closed formula {order}",
            }
        )
    except TooManyVariablesError as exc:
        checks.append({"oracle": "perms", "status": "skipped", "detail": str(exc)})

    cd = character_matrix(cf)
    quasi_torsion = sorted(set(d for d in _torsion_divisors(cd))) or [2]
    for modulus in quasi_torsion:
        name = f"torsion mod {modulus}"
        try:
            counted = count_torsion_points_mod(cd, modulus)
            expected = torsion_count_formula(cd, modulus)
            ok = counted == expected
            checks.append(
                {
                    "oracle": name,
                    "status": "pass" if ok else "fail",
                    "detail": f"enumerated {counted}, divisor formula {expected}",
                }
            )
        except EnumerationTooLargeError as exc:
            checks.append({"oracle": name, "status": "skipped", "detail": str(exc)})
    return checks


def _torsion_divisors(cd) -> list[int]:
    return [d for d in smith_normal_form(cd.difference_matrix).divisors if d > 1]


def build_report(input_text: str, cf, verify: bool = False) -> dict:
    """Ordered, JSON-ready report of the full analysis."""
    aut = aut_group(cf)
    cert = rigidity_certificate(cf)
    cone = weight_cone(cf)
    gens = torus_generators(cf)
    names = cf.var_order
    return {
        "input": input_text,
        "canonical_form": {
            "rendered": cf.to_text(),
            "variables": list(names),
            "mixed_blocks": [
                {"variables": list(b.variables), "exponents": list(b.exponents)}
                for b in cf.mixed_blocks
            ],
            "pure_blocks": [
                {"exponent": b.exponent, "variables": list(b.variables)}
                for b in cf.pure_blocks
            ],
            "variable_count": cf.variable_count,
            "monomial_count": cf.monomial_count,
            "scaling_absorbed": cf.scaling_note,
        },
        "rigidity": {
            "reciprocal_sum": str(cert.reciprocal_sum),
            "threshold": _frac(cert.threshold),
            "verdict": cert.verdict,
            "equality": cert.equality,
            "block_count_threshold": _frac(cert.block_count_threshold),
            "note": cert.note,
        },
        "quasitorus": {
            "torus_rank": aut.quasitorus.torus_rank,
            "torsion": [str(d) for d in aut.quasitorus.torsion],
            "cocharacter_basis": [_ints(v) for v in aut.quasitorus.cocharacter_basis],
            "torsion_generators": [
                {"order": str(t.order), "exponents": _ints(t.exponents)}
                for t in aut.quasitorus.torsion_generators
            ],
        },
        "permutation_group": {
            "order": str(aut.perm.order),
            "structure": aut.perm.structure,
            "pure_factors": [
                {"exponent": p.exponent, "variables": list(p.variables)}
                for p in aut.perm.pure_factors
            ],
            "mixed_classes": [
                {
                    "blocks": list(c.block_indices),
                    "exponents": list(c.exponents),
                    "inner_multiplicities": list(c.inner_multiplicities),
                }
                for c in aut.perm.mixed_classes
            ],
            "generators": [cycle_notation(g, names) for g in aut.perm.generators],
        },
        "aut": {
            "structure": aut.structure_string,
            "conditional_on_rigidity": aut.conditional,
            "action": [list(g) for g in aut.action],
        },
        "cone": {
            "basis": [_ints(v) for v in cone.basis],
            "weights": [_ints(v) for v in cone.weights],
            "pointed": cone.pointed,
            "witness": _ints(cone.witness) if cone.witness is not None else None,
            "homogeneity_cocharacter": _ints(gens.homogeneity),
            "pair_cocharacters": [
                {"block": p.block, "position": p.position, "vector": _ints(p.vector)}
                for p in gens.pair_cocharacters
            ],
        },
        "irreducible": aut.irreducible,
        "verification": {
            "requested": bool(verify),
            "checks": run_verification(cf) if verify else [],
        },
    }


def render_text(report: dict) -> str:
    lines = []
    cf_sec = report["canonical_form"]
    lines.append(f"input: {report['input']}")
    lines.append(f"canonical form: {cf_sec['rendered']}")
    lines.append(
        f"  variables ({cf_sec['variable_count']}): "
        + " ".join(cf_sec["variables"])
        + f"   monomials: {cf_sec['monomial_count']}"
    )
    if cf_sec["scaling_absorbed"]:
        lines.append("  non-unit coefficients absorbed by a diagonal rescaling")

    rig = report["rigidity"]
    threshold = rig["threshold"] if rig["threshold"] is not None else "n/a"
    suffix = " (equality)" if rig["equality"] else ""
    lines.append(
        f"rigidity: sum(1/e_v) = {rig['reciprocal_sum']}, "
        f"threshold = {threshold} -> {rig['verdict']}{suffix}"
    )
    lines.append(f"  note: {rig['note']}")

    quasi = report["quasitorus"]
    torsion = ", ".join(f"Z/{d}" for d in quasi["torsion"]) or "none"
    lines.append(
        f"diagonal symmetries H: torus rank {quasi['torus_rank']}, torsion {torsion}"
    )
    basis = "; ".join("(" + ", ".join(v) + ")" for v in quasi["cocharacter_basis"])
    lines.append(f"  cocharacter basis: {basis}")
    for t in quasi["torsion_generators"]:
        lines.append(
            f"  torsion generator: order {t['order']}, "
            "exponents (" + ", ".join(t["exponents"]) + ")"
        )

    perm = report["permutation_group"]
    lines.append(
        f"permutation group P(F): order {perm['order']}, structure {perm['structure']}"
    )
    if perm["generators"]:
        lines.append("  generators: " + ", ".join(perm["generators"]))

    lines.append(f"automorphism group: {report['aut']['structure']}")
    if report["aut"]["conditional_on_rigidity"]:
        lines.append(
            "  conditional on rigidity: the product is always a subgroup of "
            "Aut; maximality needs a rigid input"
        )

    cone = report["cone"]
    witness = "(" + ", ".join(cone["witness"]) + ")" if cone["witness"] else "none"
    lines.append(
        f"weight cone: pointed = {'yes' if cone['pointed'] else 'no'}, witness u = {witness}"
    )
    lines.append(f"irreducibility: {report['irreducible']}")

    ver = report["verification"]
    if ver["requested"]:
        for c in ver["checks"]:
            lines.append(f"verify {c['oracle']}: {c['status']} ({c['detail']})")
    return "\n".join(lines)


def _emit(report: dict, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report, indent=2, ensure_ascii=True))
    else:
        print(_printable(render_text(report)))
    checks = report["verification"]["checks"]
    if any(c["status"] == "fail" for c in checks):
        return EXIT_ERROR
    return EXIT_OK


def cmd_analyze(args) -> int:
    text = _read_input(args.input)
    cf = parse_separated(text)
    return _emit(build_report(text, cf, verify=args.verify), args.json)


def cmd_fermat(args) -> int:
    cf = fermat_form(args.n, args.alpha)
    return _emit(build_report(cf.to_text(), cf, verify=args.verify), args.json)


def cmd_verify(args) -> int:
    text = _read_input(args.input)
    cf = parse_separated(text)
    if args.oracle == "perms":
        try:
            brute = brute_force_perm_order(cf)
        except TooManyVariablesError as exc:
            print(f"guard violation: {exc}", file=sys.stderr)
            return EXIT_GUARD
        order = permutation_group(cf).order
        ok = brute == order
        rel = "==" if ok else "!="
        print(f"perms: brute force {brute} {rel} {order} (closed formula) -> "
              f"{'pass' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_ERROR
    if args.oracle == "torsion":
        if args.mod is None:
            print("error: the torsion oracle needs --mod N", file=sys.stderr)
            return EXIT_ERROR
        cd = character_matrix(cf)
        try:
            counted = count_torsion_points_mod(cd, args.mod)
        except EnumerationTooLargeError as exc:
            print(f"guard violation: {exc}", file=sys.stderr)
            return EXIT_GUARD
        expected = torsion_count_formula(cd, args.mod)
        ok = counted == expected
        rel = "==" if ok else "!="
        print(f"torsion mod {args.mod}: enumerated {counted} {rel} {expected} "
              f"(divisor formula) -> {'pass' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_ERROR
    # generators
    try:
        results = certify_pipeline_generators(cf)
    except NotAnAutomorphismError as exc:
        print(f"generators: FAIL ({exc})")
        return EXIT_ERROR
    print(f"generators: {len(results)} certified -> pass")
    return EXIT_OK


def cmd_snf(args) -> int:
    if args.matrix == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.matrix).read_text()
    matrix = parse_matrix_text(text)
    result = smith_normal_form(matrix)
    if args.json:
        out = {
            "rows": matrix.rows,
            "cols": matrix.cols,
            "rank": result.rank,
            "divisors": [str(d) for d in result.divisors],
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"rows={matrix.rows} cols={matrix.cols} rank={result.rank}")
        divisors = " ".join(str(d) for d in result.divisors)
        print(f"divisors: {divisors}" if divisors else "divisors: (none)")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepaut",
        description=(
            "Structure of the automorphism group of a hypersurface cut out "
            "by a polynomial with separated variables"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of a separated polynomial")
    p.add_argument("input", help="an expression, or a path to a file holding one")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--verify", action="store_true", help="also run the oracles")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a single verification oracle")
    p.add_argument("input", help="an expression, or a path to a file holding one")
    p.add_argument(
        "--oracle", required=True, choices=["perms", "torsion", "generators"]
    )
    p.add_argument("--mod", type=int, default=None, help="modulus for 'torsion'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument(
        "matrix", help="matrix file: first line 'rows cols', then entries; - for stdin"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("fermat", help="analyze Y1^alpha + ... + Yn^alpha")
    p.add_argument("n", type=int)
    p.add_argument("alpha", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_fermat)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotSeparatedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SEPARATED
    except (PolynomialError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())

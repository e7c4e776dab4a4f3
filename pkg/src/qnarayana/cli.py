"""Command-line front end: family tables, identity suites, Hankel and
continued-fraction reports, and the brute-force path oracles.

Exit codes: 0 when every executed check passes, 1 on any mismatch or
internal error, 2 on usage errors.  Output goes to stdout, diagnostics to
stderr, and identical invocations produce byte-identical output, so
`qnarayana verify --all` slots into CI as a regression gate.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import partial

from . import dyckoracle, fixtures, gfun, hankel, narayana, qcomb
from .exactalg import Polynomial, RationalFunction

DEFAULT_ORDER = 20
DEFAULT_HANKEL_MAX_N = 7
DEFAULT_CFRAC_DEPTH = 9
DEFAULT_QT_MAX_N = 8
DEFAULT_SYM_MAX_N = 12
ROUTE_MAX_N = 20

# total number of registered checks behind `verify --all`
REGISTRY_SIZE = 31


@dataclass(frozen=True)
class Command:
    verb: str
    options: dict


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check_first_terms_small_c() -> CheckResult:
    name = "first_terms/c"
    stored = fixtures.FIRST_TERMS_SMALL_C
    for n, want in enumerate(stored):
        got = str(narayana.c_poly(n))
        if got != want:
            return CheckResult(name, False, f"n={n}: computed {got}, stored {want}")
    return CheckResult(name, True, f"n<={len(stored) - 1}")


def _check_first_terms_narayana() -> CheckResult:
    name = "first_terms/C"
    stored = fixtures.FIRST_TERMS_NARAYANA
    for n, want in enumerate(stored):
        got = str(narayana.narayana_poly(n))
        if got != want:
            return CheckResult(name, False, f"n={n}: computed {got}, stored {want}")
    return CheckResult(name, True, f"n<={len(stored) - 1}")


def _check_routes() -> CheckResult:
    name = "routes/c_three_ways"
    for n in range(ROUTE_MAX_N + 1):
        closed = narayana.c_poly(n)
        recursive = narayana.c_poly_recursive(n)
        if recursive != closed:
            return CheckResult(name, False, f"n={n}: recursion gives {recursive}, closed form {closed}")
        if n >= 1:
            row = qcomb.specialize_row(n, -1)
            if closed.coeffs != row:
                return CheckResult(name, False, f"n={n}: q-specialization gives {row}")
    return CheckResult(name, True, f"n<={ROUTE_MAX_N}")


def _check_odd_closed() -> CheckResult:
    name = "routes/odd_closed_form"
    for m in range(11):
        if narayana.c_odd_closed(m) != narayana.c_poly(2 * m + 1):
            return CheckResult(name, False, f"index {2 * m + 1}")
    return CheckResult(name, True, "odd indices <= 21")


def _check_at_one() -> CheckResult:
    name = "eval/at_one"
    for n in range(ROUTE_MAX_N + 1):
        want = narayana.binomial(n, n // 2)
        got = narayana.c_poly(n)(1)
        if got != want:
            return CheckResult(name, False, f"n={n}: value {got}, expected {want}")
    return CheckResult(name, True, f"n<={ROUTE_MAX_N}")


def _check_at_minus_one() -> CheckResult:
    name = "eval/at_minus_one"
    for m in range(1, 11):
        got = narayana.c_poly(2 * m)(-1)
        if got != 0:
            return CheckResult(name, False, f"even index {2 * m}: value {got}, expected 0")
    for m in range(11):
        want = narayana.catalan_number(m)
        got = narayana.c_poly(2 * m + 1)(-1)
        if got != want:
            return CheckResult(name, False, f"odd index {2 * m + 1}: value {got}, expected {want}")
    return CheckResult(name, True, "indices <= 21")


def _check_q_catalan_sum() -> CheckResult:
    name = "eval/q_catalan_sum"
    for n in range(11):
        total = Polynomial.zero(qcomb.QVAR)
        for entry in qcomb.q_narayana_row(n).entries:
            total = total + entry
        if total != qcomb.q_catalan(n):
            return CheckResult(name, False, f"n={n}")
    return CheckResult(name, True, "n<=10")


def _check_identity(identity: str, order: int) -> CheckResult:
    name = f"identity/{identity}"
    report = gfun.verify_identity(identity, order)
    if report.passed:
        return CheckResult(name, True, f"order={order}")
    return CheckResult(name, False, f"power={report.power}: {report.lhs} vs {report.rhs}")


def _check_hankel(family: str, shift: int, max_n: int) -> CheckResult:
    name = f"hankel/{family}/shift{shift}"
    for row in hankel.hankel_table(family, shift, max_n):
        if not row.match:
            return CheckResult(name, False, f"n={row.n}: det {row.determinant}, expected {row.expected}")
    return CheckResult(name, True, f"n<={max_n}")


def _check_cfrac_closed(tag: str, depth: int) -> CheckResult:
    name = f"cfrac/{tag}/closed_forms"
    series = hankel.ratfun_series(tag, 2 * depth + 2)
    jf = hankel.jfraction_extract(series, depth)
    if jf.depth != depth:
        return CheckResult(name, False, f"extraction stopped at depth {jf.depth}")
    for k, got in enumerate(jf.s):
        want = RationalFunction(fixtures.expected_jfraction_s(tag, k))
        if got != want:
            return CheckResult(name, False, f"s_{k}: extracted {got}, stored {want}")
    for k, got in enumerate(jf.t_coeffs):
        want = RationalFunction(fixtures.expected_jfraction_t(tag, k))
        if got != want:
            return CheckResult(name, False, f"t_{k}: extracted {got}, stored {want}")
    return CheckResult(name, True, f"levels<={depth}")


def _check_cfrac_product(tag: str, max_n: int) -> CheckResult:
    name = f"cfrac/{tag}/product_formula"
    depth = max_n - 1
    series = hankel.ratfun_series(tag, 2 * depth + 2)
    jf = hankel.jfraction_extract(series, depth)
    shift = 1 if tag == "smallg" else 0
    seq = narayana.poly_sequence("small_c", 2 * max_n - 1 + shift)
    for n in range(1, max_n + 1):
        det = hankel.det_bareiss(hankel.hankel_matrix(seq, n, shift))
        product = hankel.hankel_product_formula(jf.t_coeffs, n)
        if product != RationalFunction(det):
            return CheckResult(name, False, f"n={n}: product {product}, determinant {det}")
    return CheckResult(name, True, f"n<={max_n}")


def _check_cfrac_roundtrip(depth: int) -> CheckResult:
    name = "cfrac/roundtrip"
    for tag in ("smallc", "smallg"):
        series = hankel.ratfun_series(tag, 2 * depth + 2)
        jf = hankel.jfraction_extract(series, depth)
        rebuilt = hankel.jfraction_to_series(jf, 2 * depth + 1)
        if rebuilt != series.truncate(2 * depth + 1):
            return CheckResult(name, False, f"{tag} does not round-trip at depth {depth}")
    return CheckResult(name, True, f"depth={depth}")


def _check_oracle_qt(max_n: int) -> CheckResult:
    name = "oracle/valley_major"
    for n in range(max_n + 1):
        table = dyckoracle.qt_distribution(n)
        row = qcomb.q_narayana_row(n).entries
        if len(table) != len(row):
            return CheckResult(name, False, f"n={n}: {len(table)} valley classes, expected {len(row)}")
        for k, poly in table.items():
            if poly != row[k]:
                return CheckResult(name, False, f"n={n}, k={k}: enumerated {poly}, algebraic {row[k]}")
    return CheckResult(name, True, f"n<={max_n}")


def _check_oracle_symmetric(max_n: int) -> CheckResult:
    name = "oracle/symmetric_valleys"
    for n in range(max_n + 1):
        table = dyckoracle.symmetric_valley_distribution(n)
        for k, count in table.items():
            want = 1 if n == 0 else narayana.v_coeff(n, k)
            if count != want:
                return CheckResult(name, False, f"n={n}, k={k}: enumerated {count}, closed form {want}")
    return CheckResult(name, True, f"n<={max_n}")


def _check_oracle_counts() -> CheckResult:
    name = "oracle/counts"
    for n in range(11):
        count = sum(1 for _ in dyckoracle.enumerate_dyck(n))
        if count != narayana.catalan_number(n):
            return CheckResult(name, False, f"n={n}: {count} paths, expected Catalan")
    for n in range(13):
        count = sum(1 for _ in dyckoracle.enumerate_symmetric(n))
        if count != narayana.binomial(n, n // 2):
            return CheckResult(name, False, f"n={n}: {count} symmetric paths, expected central binomial")
    return CheckResult(name, True, "path<=10, symmetric<=12")


def build_registry(order: int = DEFAULT_ORDER):
    """Every registered check behind `verify --all`, in report order."""
    checks = [
        ("first_terms/c", _check_first_terms_small_c),
        ("first_terms/C", _check_first_terms_narayana),
        ("routes/c_three_ways", _check_routes),
        ("routes/odd_closed_form", _check_odd_closed),
        ("eval/at_one", _check_at_one),
        ("eval/at_minus_one", _check_at_minus_one),
        ("eval/q_catalan_sum", _check_q_catalan_sum),
    ]
    for identity in gfun.ALL_IDENTITIES:
        checks.append((f"identity/{identity}", partial(_check_identity, identity, order)))
    for family in ("narayana_poly", "small_c"):
        for shift in (0, 1):
            checks.append((f"hankel/{family}/shift{shift}",
                           partial(_check_hankel, family, shift, DEFAULT_HANKEL_MAX_N)))
    for tag in ("smallg", "smallc"):
        checks.append((f"cfrac/{tag}/closed_forms", partial(_check_cfrac_closed, tag, DEFAULT_CFRAC_DEPTH)))
    for tag in ("smallg", "smallc"):
        checks.append((f"cfrac/{tag}/product_formula", partial(_check_cfrac_product, tag, 6)))
    checks.append(("cfrac/roundtrip", partial(_check_cfrac_roundtrip, 8)))
    checks.append(("oracle/valley_major", partial(_check_oracle_qt, DEFAULT_QT_MAX_N)))
    checks.append(("oracle/symmetric_valleys", partial(_check_oracle_symmetric, DEFAULT_SYM_MAX_N)))
    checks.append(("oracle/counts", _check_oracle_counts))
    assert len(checks) == REGISTRY_SIZE, "registry size drifted; update REGISTRY_SIZE and the tests"
    return tuple(checks)


def _run_checks(named_checks, as_json: bool) -> int:
    results = []
    for name, fn in named_checks:
        try:
            results.append(fn())
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(name, False, f"error: {exc}"))
    all_passed = all(r.passed for r in results)
    if as_json:
        payload = {
            "status": "pass" if all_passed else "fail",
            "checks": [
                {"name": r.name, "status": "pass" if r.passed else "fail", "detail": r.detail}
                for r in results
            ],
        }
        print(json.dumps(payload))
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
            if r.detail:
                line += f" ({r.detail})"
            print(line)
        passed = sum(1 for r in results if r.passed)
        print(f"{passed}/{len(results)} checks passed")
    return 0 if all_passed else 1


_POLY_FAMILIES = {
    "c": narayana.c_poly,
    "C": narayana.narayana_poly,
    "B": narayana.narayana_b_poly,
    "catalan": lambda n: Polynomial.constant(narayana.TVAR, narayana.catalan_number(n)),
}

_HANKEL_FAMILIES = {"c": "small_c", "C": "narayana_poly"}

_CFRAC_FAMILIES = {"c": "smallc", "g": "smallg"}


def _run_poly(opts) -> int:
    poly = _POLY_FAMILIES[opts["family"]](opts["n"])
    if opts["json"]:
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def _run_hankel(opts) -> int:
    family = _HANKEL_FAMILIES[opts["family"]]
    shift = opts["shift"]
    rows = hankel.hankel_table(family, shift, opts["max_n"])
    if opts["json"]:
        payload = {
            "family": family,
            "shift": shift,
            "rows": [
                {"n": r.n, "determinant": str(r.determinant), "expected": str(r.expected), "match": r.match}
                for r in rows
            ],
        }
        print(json.dumps(payload))
    elif opts["csv"]:
        sys.stdout.write(hankel.hankel_table_csv(family, shift, rows))
    else:
        for r in rows:
            flag = "match" if r.match else "MISMATCH"
            print(f"n={r.n} det={r.determinant} expected={r.expected} {flag}")
    return 0 if all(r.match for r in rows) else 1


def _run_cfrac(opts) -> int:
    tag = _CFRAC_FAMILIES[opts["family"]]
    depth = opts["depth"]
    series = hankel.ratfun_series(tag, 2 * depth + 2)
    jf = hankel.jfraction_extract(series, depth)
    levels = []
    ok = jf.depth == depth
    for k, got in enumerate(jf.s):
        want = RationalFunction(fixtures.expected_jfraction_s(tag, k))
        levels.append(("s", k, got, want, got == want))
    for k, got in enumerate(jf.t_coeffs):
        want = RationalFunction(fixtures.expected_jfraction_t(tag, k))
        levels.append(("t", k, got, want, got == want))
    ok = ok and all(match for *_, match in levels)
    if opts["json"]:
        payload = {
            "family": tag,
            "depth": jf.depth,
            "status": "pass" if ok else "fail",
            "coefficients": [
                {"kind": kind, "level": k, "extracted": str(got), "expected": str(want),
                 "status": "pass" if match else "fail"}
                for kind, k, got, want, match in levels
            ],
        }
        print(json.dumps(payload))
    else:
        for kind, k, got, want, match in levels:
            flag = "match" if match else "MISMATCH"
            print(f"{kind}_{k} extracted={got} expected={want} {flag}")
    return 0 if ok else 1


def _run_verify(opts) -> int:
    order = opts["order"]
    if opts["all"]:
        selected = build_registry(order)
    elif opts["identity"]:
        if opts["json"]:
            # identity-only JSON inherits the IdentityReport serialization
            reports = [gfun.verify_identity(i, order).to_json() for i in opts["identity"]]
            status = "pass" if all(r["status"] == "pass" for r in reports) else "fail"
            print(json.dumps({"status": status, "reports": reports}))
            return 0 if status == "pass" else 1
        selected = tuple((f"identity/{i}", partial(_check_identity, i, order)) for i in opts["identity"])
    else:
        registry = build_registry(order)
        selected = tuple(entry for entry in registry
                         if entry[0].split("/")[0] in ("first_terms", "routes", "eval", "identity"))
    return _run_checks(selected, opts["json"])


def _run_oracle(opts) -> int:
    checks = (
        ("oracle/valley_major", partial(_check_oracle_qt, opts["q_max_n"])),
        ("oracle/symmetric_valleys", partial(_check_oracle_symmetric, opts["sym_max_n"])),
        ("oracle/counts", _check_oracle_counts),
    )
    return _run_checks(checks, opts["json"])


_EXECUTORS = {
    "poly": _run_poly,
    "hankel": _run_hankel,
    "cfrac": _run_cfrac,
    "verify": _run_verify,
    "oracle": _run_oracle,
}


def parse_args(argv) -> Command:
    """Validate argv into a Command; argparse exits with code 2 on usage errors."""
    parser = argparse.ArgumentParser(
        prog="qnarayana",
        description="Exact computation and verification of Narayana-type polynomial identities.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_poly = sub.add_parser("poly", help="print one member of a polynomial family")
    p_poly.add_argument("--family", required=True, choices=sorted(_POLY_FAMILIES),
                        help="c (signed specialization), C (Narayana), B (type B), catalan")
    p_poly.add_argument("--n", required=True, type=int, help="index within the family")
    p_poly.add_argument("--json", action="store_true")

    p_hankel = sub.add_parser("hankel", help="Hankel determinant table against predictions")
    p_hankel.add_argument("--family", required=True, choices=sorted(_HANKEL_FAMILIES))
    p_hankel.add_argument("--shift", type=int, choices=(0, 1), default=0)
    p_hankel.add_argument("--max-n", dest="max_n", type=int, default=DEFAULT_HANKEL_MAX_N)
    fmt = p_hankel.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")

    p_cfrac = sub.add_parser("cfrac", help="extracted continued-fraction coefficients beside their closed forms")
    p_cfrac.add_argument("--family", required=True, choices=sorted(_CFRAC_FAMILIES))
    p_cfrac.add_argument("--depth", type=int, default=DEFAULT_CFRAC_DEPTH)
    p_cfrac.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run identity checks (--all for the full registry)")
    p_verify.add_argument("--all", action="store_true", help="run every registered check")
    p_verify.add_argument("--identity", action="append", choices=gfun.ALL_IDENTITIES,
                          help="check one identity (repeatable)")
    p_verify.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_verify.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser("oracle", help="brute-force path enumerations against the formulas")
    p_oracle.add_argument("--q-max-n", dest="q_max_n", type=int, default=DEFAULT_QT_MAX_N)
    p_oracle.add_argument("--sym-max-n", dest="sym_max_n", type=int, default=DEFAULT_SYM_MAX_N)
    p_oracle.add_argument("--json", action="store_true")

    ns = parser.parse_args(argv)

    if ns.verb == "poly" and ns.n < 0:
        p_poly.error("--n must be >= 0")
    if ns.verb == "hankel" and ns.max_n < 1:
        p_hankel.error("--max-n must be >= 1")
    if ns.verb == "cfrac" and ns.depth < 0:
        p_cfrac.error("--depth must be >= 0")
    if ns.verb == "verify":
        if ns.order < 2:
            p_verify.error("--order must be >= 2")
        if ns.all and ns.identity:
            p_verify.error("--all and --identity are mutually exclusive")
    if ns.verb == "oracle":
        if not 0 <= ns.q_max_n <= dyckoracle.MAX_QT:
            p_oracle.error(f"--q-max-n must be between 0 and {dyckoracle.MAX_QT}")
        if not 0 <= ns.sym_max_n <= dyckoracle.MAX_SYMMETRIC:
            p_oracle.error(f"--sym-max-n must be between 0 and {dyckoracle.MAX_SYMMETRIC}")

    options = vars(ns)
    verb = options.pop("verb")
    return Command(verb, options)


def execute(cmd: Command) -> int:
    """Dispatch a validated command; returns the process exit code."""
    return _EXECUTORS[cmd.verb](cmd.options)


def main(argv=None) -> int:
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else list(argv))
    except SystemExit as exc:  # argparse has already written the diagnostic
        return int(exc.code or 0)
    try:
        return execute(cmd)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: coefficient tables, polynomials, characters, and
the verification suites, with text, JSON, or CSV output.

Exit codes: 0 on success, 1 when a verification suite reports a failing
case, 2 on usage errors.  Large integers are emitted as decimal strings in
JSON so nothing is lost to floating point.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .klnumbers import (
    KLTable,
    c_closed,
    c_recursion,
    check_epw2,
    check_logconcave,
    d_bruteforce,
    d_cayley,
    kl_poly,
)
from .series import USeries, check_functional_equation, g_series, phi_from_table
from .symreps import Partition, hook_dimension, ih_rep, lemma_key_check, lemma_key_expected, verify_main2


@dataclass
class CaseRecord:
    """One verified statement: the inputs, both sides, and the verdict."""

    inputs: str
    expected: str
    actual: str
    passed: bool


@dataclass
class VerificationReport:
    """Per-case records for one suite, with summary counts derived from
    the records so the two can never disagree."""

    suite: str
    cases: list = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, inputs, expected, actual):
        self.cases.append(
            CaseRecord(str(inputs), str(expected), str(actual), expected == actual)
        )

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def n_failed(self) -> int:
        return len(self.cases) - self.n_passed

    @property
    def ok(self) -> bool:
        return self.n_failed == 0

    def to_json(self):
        return {
            "suite": self.suite,
            "cases": [
                {
                    "inputs": c.inputs,
                    "expected": c.expected,
                    "actual": c.actual,
                    "passed": c.passed,
                }
                for c in self.cases
            ],
            "passed": self.n_passed,
            "failed": self.n_failed,
            "wall_time_s": round(self.wall_time, 3),
            "ok": self.ok,
        }


def suite_closed_vs_recursion(n_max: int = 25) -> VerificationReport:
    """Closed form against the double-sum recursion, including indices past
    the vanishing threshold."""
    report = VerificationReport("closed-vs-recursion")
    table = KLTable(n_max)
    for n in range(2, n_max + 1):
        for i in range((n - 2) // 2 + 3):
            report.add("n=%d i=%d" % (n, i), c_closed(n, i), c_recursion(n, i, table))
    return report


def suite_chords(m_max: int = 12) -> VerificationReport:
    """Dissection closed form against brute-force enumeration, and the
    coefficient identity c(n, i) = d(n-i+1, i)."""
    report = VerificationReport("chords")
    for m in range(3, m_max + 1):
        for k in range(m - 1):
            report.add("m=%d k=%d" % (m, k), d_cayley(m, k), d_bruteforce(m, k, cap=m_max))
    for n in range(2, m_max + 1):
        for i in range(1, n - 1):
            report.add(
                "c(%d,%d) = d(%d,%d)" % (n, i, n - i + 1, i),
                c_closed(n, i),
                d_bruteforce(n - i + 1, i, cap=m_max),
            )
    return report


def suite_epw2(n_max: int = 20) -> VerificationReport:
    """Degree-reversal identity: the residual must be the zero polynomial."""
    report = VerificationReport("epw2")
    for n in range(2, n_max + 1):
        _, residual = check_epw2(n)
        report.add("n=%d" % n, "0", str(residual))
    return report


def suite_functional_eq(order: int = 12) -> VerificationReport:
    """Substitution identity residual, and the dissection series against the
    table series, both at the given truncation order."""
    report = VerificationReport("functional-eq")
    zero = USeries.zero(order)
    report.add("residual at order %d" % order, zero, check_functional_equation(order))
    g = g_series(order)
    report.add("g = phi at order %d" % order, phi_from_table(order), g)
    report.add(
        "residual with phi := g at order %d" % order,
        zero,
        check_functional_equation(order, phi=g),
    )
    return report


def suite_logconcave(n_max: int = 60) -> VerificationReport:
    """Strict log-concavity of every coefficient row up to n_max."""
    report = VerificationReport("logconcave")
    for n in range(2, n_max + 1):
        for t in check_logconcave(n):
            report.add(
                "n=%d i=%d: %d^2 vs %d*%d (margin %d)"
                % (t.n, t.i, t.middle, t.lower, t.upper, t.margin),
                True,
                t.strict,
            )
    return report


def suite_main2(n_max: int = 14) -> VerificationReport:
    """Each cohomology character is the single irreducible [n-2i, 2^i], and
    both its virtual dimension and the hook-length dimension of the target
    shape agree with the closed form."""
    report = VerificationReport("main2")
    for n in range(2, n_max + 1):
        for i in range((n - 2) // 2 + 1):
            target = Partition((n - 2 * i,) + (2,) * i)
            expected = c_closed(n, i)
            report.add("ih(%d,%d) irreducible" % (n, i), True, verify_main2(n, i))
            report.add("dim ih(%d,%d)" % (n, i), expected, ih_rep(n, i).dimension())
            report.add(
                "hook dim %s" % (tuple(target),), expected, hook_dimension(target)
            )
    return report


def suite_lemma_key(n_max: int = 12) -> VerificationReport:
    """The two-coefficient pattern over every admissible (n, i, p, q)."""
    report = VerificationReport("lemma-key")
    for n in range(2, n_max + 1):
        for i in range((n - 2) // 2 + 1):
            for p in range(1, min(2 * i, n - 1) + 1):
                for q in range(min(i, 2 * i - p) + 1):
                    report.add(
                        "n=%d i=%d p=%d q=%d" % (n, i, p, q),
                        lemma_key_expected(n, i, p, q),
                        lemma_key_check(n, i, p, q),
                    )
    return report


_SUITES = {
    "closed-vs-recursion": (suite_closed_vs_recursion, "n_max"),
    "chords": (suite_chords, "m_max"),
    "epw2": (suite_epw2, "n_max"),
    "functional-eq": (suite_functional_eq, "order"),
    "logconcave": (suite_logconcave, "n_max"),
    "main2": (suite_main2, "n_max"),
    "lemma-key": (suite_lemma_key, "n_max"),
}


def run_suite(name: str, n_max=None, m_max=None, order=None) -> VerificationReport:
    """Run one named suite, honoring whichever bound option it uses."""
    func, param = _SUITES[name]
    value = {"n_max": n_max, "m_max": m_max, "order": order}[param]
    start = time.perf_counter()
    report = func() if value is None else func(value)
    report.wall_time = time.perf_counter() - start
    return report


def _table_rows(n_max: int):
    return [
        (n, [c_closed(n, i) for i in range((n - 2) // 2 + 1)])
        for n in range(2, n_max + 1)
    ]


def _usage_error(message: str) -> int:
    print("error: %s" % message, file=sys.stderr)
    return 2


def cmd_table(args) -> int:
    if args.n_max < 2:
        return _usage_error("--n-max must be at least 2")
    rows = _table_rows(args.n_max)
    if args.format == "json":
        payload = [{"n": n, "coeffs": [str(c) for c in row]} for n, row in rows]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        for n, row in rows:
            print(",".join([str(n)] + [str(c) for c in row]))
    else:
        for n, row in rows:
            print("n=%d: %s" % (n, " ".join(str(c) for c in row)))
    return 0


def cmd_poly(args) -> int:
    if args.n < 2:
        return _usage_error("--n must be at least 2")
    poly = kl_poly(args.n)
    if args.format == "json":
        payload = {"n": args.n, "coeffs": [str(c) for c in poly.coeffs]}
        print(json.dumps(payload, indent=2))
    else:
        print(poly)
    return 0


def cmd_reps(args) -> int:
    if args.n < 2:
        return _usage_error("--n must be at least 2")
    if args.i < 0:
        return _usage_error("--i must be nonnegative")
    rep = ih_rep(args.n, args.i)
    if args.format == "json":
        payload = {
            "n": args.n,
            "i": args.i,
            "terms": [
                {"partition": list(lam), "mult": str(rep.terms[lam])}
                for lam in sorted(rep.terms, reverse=True)
            ],
            "dimension": str(rep.dimension()),
        }
        print(json.dumps(payload, indent=2))
    elif not rep:
        print("0")
    else:
        print("%s (dim %d)" % (rep, rep.dimension()))
    return 0


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, args.n_max, args.m_max, args.order) for name in names]
    all_ok = all(r.ok for r in reports)
    if args.format == "json":
        payload = {"suites": [r.to_json() for r in reports], "ok": all_ok}
        print(json.dumps(payload, indent=2))
    else:
        for report in reports:
            print(
                "%s: %d cases, %d passed, %d failed (%.2fs)"
                % (
                    report.suite,
                    len(report.cases),
                    report.n_passed,
                    report.n_failed,
                    report.wall_time,
                )
            )
            for case in report.cases:
                if not case.passed:
                    print(
                        "  FAIL %s: expected %s, got %s"
                        % (case.inputs, case.expected, case.actual)
                    )
        if len(reports) > 1:
            print("overall: %s" % ("all suites passed" if all_ok else "FAILURES"))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniform-kl",
        description="Exact Kazhdan-Lusztig coefficients of uniform matroids, "
        "with cross-checked computation routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="coefficient table for 2 <= n <= N")
    p.add_argument("--n-max", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("poly", help="one Kazhdan-Lusztig polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("reps", help="cohomology character for one (n, i)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(_SUITES) + ("all",))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

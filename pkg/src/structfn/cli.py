"""Command line front end.

Reads a JSON system document (component count plus exactly one of paths,
cuts, table, or simple_form), realizes the truth table, and reports the
requested view of the system. Output is deterministic: families, terms, and
JSON keys are always emitted in canonical order.

Exit codes: 0 success, 1 input error, 2 capacity exceeded, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import oracle
from .core import (
    CapacityError,
    MultilinearForm,
    N_MAX,
    NotSemicoherentError,
    SetFamily,
    SignatureVector,
    SubsetMask,
    TruthTable,
    mobius_transform,
    validate_semicoherent,
    zeta_transform,
)
from .reliability import diagonal_coefficients, evaluate_reliability
from .signature import (
    dual_signature,
    signature_boland,
    signature_from_diagonal,
    small_counts_from_coefficients,
)
from .transform import (
    R_MAX,
    dual_simple_form_from_cuts,
    dualize_table,
    minimal_cut_sets,
    minimal_path_sets,
    simple_form_from_paths,
    table_from_cuts,
    table_from_paths,
)

__all__ = ["SystemDoc", "Options", "Report", "parse_document", "run_command", "main"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3

COMMANDS = (
    "analyze",
    "dual",
    "paths",
    "cuts",
    "simple-form",
    "signature",
    "counts",
    "reliability",
    "verify",
)

# Brute-force verification is only pleasant at desk scale.
VERIFY_N_MAX = 10
_VERIFY_FORMATION_R_MAX = 10

# Tables are echoed back in JSON output only while they stay readable.
_TABLE_ECHO_N_MAX = 12


@dataclass(frozen=True)
class SystemDoc:
    """A parsed system document: component count plus exactly one representation."""

    n: int
    kind: str
    paths: "SetFamily | None" = None
    cuts: "SetFamily | None" = None
    table: "TruthTable | None" = None
    simple_form: "MultilinearForm | None" = None


@dataclass(frozen=True)
class Options:
    """Resolved command options; caps can only tighten the library defaults."""

    fmt: str = "text"
    p: "tuple | None" = None
    exact: bool = False
    max_r: "int | None" = None
    max_n: "int | None" = None


@dataclass(frozen=True)
class Report:
    text: str
    exit_code: int = EXIT_OK


def _parse_family(value: Any, field: str, n: int) -> SetFamily:
    if not isinstance(value, list):
        raise ValueError(f"{field}: expected a list of component lists")
    if not value:
        noun = "path" if field == "paths" else "cut"
        raise ValueError(f"at least one {noun} set required")
    for i, member in enumerate(value):
        if not isinstance(member, list):
            raise ValueError(f"{field}[{i}]: expected a list of components")
        for c in member:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"{field}[{i}]: component {c!r} is not an integer")
    try:
        return SetFamily.from_sets(value, n=n)
    except ValueError as exc:
        raise ValueError(f"{field}: {exc}") from exc


def _parse_table(value: Any, n: int) -> TruthTable:
    if not isinstance(value, str):
        raise ValueError("table: expected a string of '0'/'1' characters")
    if len(value) != 1 << n:
        raise ValueError(f"table: expected {1 << n} characters for n={n}, got {len(value)}")
    try:
        return TruthTable.from_values(value, n=n)
    except ValueError as exc:
        raise ValueError(f"table: {exc}") from exc


def _parse_form(value: Any, n: int) -> MultilinearForm:
    if not isinstance(value, list):
        raise ValueError("simple_form: expected a list of {subset, coeff} objects")
    terms = []
    for i, entry in enumerate(value):
        if not isinstance(entry, dict):
            raise ValueError(f"simple_form[{i}]: expected an object")
        unknown = set(entry) - {"subset", "coeff"}
        if unknown:
            raise ValueError(f"simple_form[{i}]: unknown field {sorted(unknown)[0]!r}")
        if "subset" not in entry or "coeff" not in entry:
            raise ValueError(f"simple_form[{i}]: fields 'subset' and 'coeff' are required")
        subset, coeff = entry["subset"], entry["coeff"]
        if not isinstance(subset, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in subset
        ):
            raise ValueError(f"simple_form[{i}]: 'subset' must be a list of integers")
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise ValueError(f"simple_form[{i}]: 'coeff' must be an integer")
        terms.append((subset, coeff))
    try:
        return MultilinearForm.from_terms(terms, n=n)
    except ValueError as exc:
        raise ValueError(f"simple_form: {exc}") from exc


def parse_document(text: str) -> SystemDoc:
    """Parse a JSON system document, naming the offending line or field on error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    known = {"n", "paths", "cuts", "table", "simple_form"}
    for key in doc:
        if key not in known:
            raise ValueError(f"unknown field {key!r}")
    if "n" not in doc:
        raise ValueError("field 'n' is required")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("field 'n' must be an integer")
    if n < 1:
        raise ValueError(f"field 'n' must be at least 1, got {n}")
    if n > N_MAX:
        raise CapacityError(f"n={n} exceeds the component cap {N_MAX}")
    given = [k for k in ("paths", "cuts", "table", "simple_form") if k in doc]
    if len(given) != 1:
        listed = ", ".join(given) if given else "none"
        raise ValueError(f"exactly one of paths/cuts/table/simple_form required, got {listed}")
    kind = given[0]
    if kind == "paths":
        return SystemDoc(n=n, kind=kind, paths=_parse_family(doc[kind], "paths", n))
    if kind == "cuts":
        return SystemDoc(n=n, kind=kind, cuts=_parse_family(doc[kind], "cuts", n))
    if kind == "table":
        return SystemDoc(n=n, kind=kind, table=_parse_table(doc[kind], n))
    return SystemDoc(n=n, kind=kind, simple_form=_parse_form(doc[kind], n))


def _realize_table(system: SystemDoc, max_n: "int | None") -> TruthTable:
    limit = N_MAX if max_n is None else max_n
    if system.n > limit:
        raise CapacityError(f"n={system.n} exceeds max_n={limit}")
    if system.kind == "paths":
        return table_from_paths(system.paths, max_n=max_n)
    if system.kind == "cuts":
        return table_from_cuts(system.cuts, max_n=max_n)
    if system.kind == "table":
        return system.table
    return zeta_transform(system.simple_form, max_n=max_n)


@dataclass(frozen=True)
class _Analysis:
    table: TruthTable
    paths: SetFamily
    cuts: SetFamily
    form: MultilinearForm
    dual_form: MultilinearForm
    diagonal: tuple[int, ...]
    dual_diagonal: tuple[int, ...]
    sig: SignatureVector
    small: tuple[int, int, int, int]


def _analyze(system: SystemDoc, options: Options) -> _Analysis:
    table = _realize_table(system, options.max_n)
    report = validate_semicoherent(table)
    if not report.ok:
        raise NotSemicoherentError("; ".join(report.violations))
    paths = minimal_path_sets(table)
    cuts = minimal_cut_sets(table)
    form = simple_form_from_paths(paths, max_r=options.max_r, max_n=options.max_n)
    dual_form = dual_simple_form_from_cuts(cuts, max_r=options.max_r, max_n=options.max_n)
    diag = diagonal_coefficients(form)
    dual_diag = diagonal_coefficients(dual_form)
    sig = signature_from_diagonal(diag)
    d2 = diag.d[1] if table.n >= 2 else 0
    dual_d2 = dual_diag.d[1] if table.n >= 2 else 0
    small = small_counts_from_coefficients(diag.d[0], d2, dual_diag.d[0], dual_d2)
    return _Analysis(
        table=table,
        paths=paths,
        cuts=cuts,
        form=form,
        dual_form=dual_form,
        diagonal=diag.d,
        dual_diagonal=dual_diag.d,
        sig=sig,
        small=small,
    )


def _monomial_text(mask: SubsetMask) -> str:
    return "*".join(f"x{c}" for c in mask.components())


def _form_text(form: MultilinearForm) -> str:
    parts: list[str] = []
    for mask, coeff in form.terms():
        magnitude = abs(coeff)
        if mask.bits == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = _monomial_text(mask)
        else:
            body = f"{magnitude}*{_monomial_text(mask)}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _diagonal_text(d: tuple[int, ...]) -> str:
    parts: list[str] = []
    for k, coeff in enumerate(d, start=1):
        if not coeff:
            continue
        var = "x" if k == 1 else f"x^{k}"
        magnitude = abs(coeff)
        body = var if magnitude == 1 else f"{magnitude}{var}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _tuple_text(values: Sequence) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _small_text(small: tuple[int, int, int, int]) -> str:
    return f"alpha1={small[0]} alpha2={small[1]} beta1={small[2]} beta2={small[3]}"


def _family_json(family: SetFamily) -> list[list[int]]:
    return [list(m.components()) for m in family.members]


def _form_json(form: MultilinearForm) -> list[dict]:
    return [{"subset": list(m.components()), "coeff": c} for m, c in form.terms()]


def _sig_json(sig: SignatureVector) -> list[str]:
    return [str(v) for v in sig.s]


def _small_json(small: tuple[int, int, int, int]) -> dict:
    return {"alpha1": small[0], "alpha2": small[1], "beta1": small[2], "beta2": small[3]}


def _render(lines: list[str], payload: dict, options: Options) -> Report:
    if options.fmt == "json":
        return Report(text=json.dumps(payload, indent=2, sort_keys=True))
    return Report(text="\n".join(lines))


def _run_analyze(system: SystemDoc, options: Options) -> Report:
    a = _analyze(system, options)
    dual_sig = dual_signature(a.sig)
    lines = [
        f"n: {system.n}",
        f"representation: {system.kind}",
        "semicoherent: yes",
        f"minimal path sets: {a.paths}",
        f"minimal cut sets: {a.cuts}",
        f"simple form: {_form_text(a.form)}",
        f"dual simple form: {_form_text(a.dual_form)}",
        f"diagonal: {_diagonal_text(a.diagonal)}",
        f"dual diagonal: {_diagonal_text(a.dual_diagonal)}",
        f"signature: {a.sig}",
        f"dual signature: {dual_sig}",
        f"alpha: {_tuple_text(a.paths.size_census())}",
        f"beta: {_tuple_text(a.cuts.size_census())}",
        f"small counts: {_small_text(a.small)}",
    ]
    payload = {
        "n": system.n,
        "representation": system.kind,
        "semicoherent": True,
        "minimal_path_sets": _family_json(a.paths),
        "minimal_cut_sets": _family_json(a.cuts),
        "simple_form": _form_json(a.form),
        "dual_simple_form": _form_json(a.dual_form),
        "diagonal": list(a.diagonal),
        "dual_diagonal": list(a.dual_diagonal),
        "signature": _sig_json(a.sig),
        "dual_signature": _sig_json(dual_sig),
        "alpha": list(a.paths.size_census()),
        "beta": list(a.cuts.size_census()),
        "small_counts": _small_json(a.small),
    }
    if system.n <= _TABLE_ECHO_N_MAX:
        payload["table"] = a.table.values_string()
    return _render(lines, payload, options)


def _run_dual(system: SystemDoc, options: Options) -> Report:
    a = _analyze(system, options)
    dual_sig = dual_signature(a.sig)
    lines = [
        f"n: {system.n}",
        f"dual minimal path sets: {a.cuts}",
        f"dual simple form: {_form_text(a.dual_form)}",
        f"dual diagonal: {_diagonal_text(a.dual_diagonal)}",
        f"dual signature: {dual_sig}",
    ]
    payload = {
        "n": system.n,
        "dual_minimal_path_sets": _family_json(a.cuts),
        "dual_simple_form": _form_json(a.dual_form),
        "dual_diagonal": list(a.dual_diagonal),
        "dual_signature": _sig_json(dual_sig),
    }
    return _render(lines, payload, options)


def _run_reliability(system: SystemDoc, options: Options) -> Report:
    if options.p is None:
        raise ValueError("reliability requires --p")
    p = options.p
    if len(p) == 1:
        p = p * system.n
    a = _analyze(system, options)
    value = evaluate_reliability(a.form, p)
    rendered = str(value)
    lines = [f"n: {system.n}", f"reliability: {rendered}"]
    payload = {
        "n": system.n,
        "p": [str(v) if isinstance(v, Fraction) else v for v in p],
        "reliability": rendered if isinstance(value, Fraction) else value,
    }
    return _render(lines, payload, options)


def _run_verify(system: SystemDoc, options: Options) -> Report:
    table = _realize_table(system, options.max_n)
    report = validate_semicoherent(table)
    if not report.ok:
        raise NotSemicoherentError("; ".join(report.violations))
    if table.n > VERIFY_N_MAX:
        raise CapacityError(
            f"verify runs brute-force oracles and is limited to n <= {VERIFY_N_MAX}, got n={table.n}"
        )
    form = mobius_transform(table)
    paths = minimal_path_sets(table)
    cuts = minimal_cut_sets(table)

    def verdict(ok: bool) -> str:
        return "ok" if ok else "MISMATCH"

    checks: list[tuple[str, str]] = []
    checks.append(("zeta of mobius reproduces table", verdict(zeta_transform(form) == table)))
    checks.append(
        ("mobius matches direct polynomial expansion", verdict(form == oracle.oracle_simple_form(table)))
    )
    checks.append(
        ("minimal path sets match definition", verdict(paths == oracle.oracle_minimal_path_sets(table)))
    )
    checks.append(
        ("minimal cut sets match definition", verdict(cuts == oracle.oracle_minimal_cut_sets(table)))
    )
    checks.append(
        ("dual table matches definition", verdict(dualize_table(table) == oracle.oracle_dual_table(table)))
    )
    if paths.r <= _VERIFY_FORMATION_R_MAX:
        from .transform import formation_balance

        candidates = sorted(
            set(form.coeffs) | {m for m in range(1 << table.n) if m.bit_count() <= 2}
        )
        formations_ok = True
        for mask in candidates:
            odd, even = oracle.oracle_formations(paths, mask)
            balance = formation_balance(paths, mask)
            if odd - even != balance or balance != form.coefficient(mask):
                formations_ok = False
                break
        checks.append(("formation census matches simple form", verdict(formations_ok)))
    else:
        checks.append(
            (
                "formation census matches simple form",
                f"skipped ({paths.r} path sets exceeds oracle cap {_VERIFY_FORMATION_R_MAX})",
            )
        )
    checks.append(
        (
            "signature routes agree",
            verdict(signature_boland(table) == signature_from_diagonal(diagonal_coefficients(form))),
        )
    )
    vertices_ok = all(
        evaluate_reliability(form, [m >> i & 1 for i in range(table.n)]) == table.phi(m)
        for m in range(1 << table.n)
    )
    checks.append(("reliability at vertices matches table", verdict(vertices_ok)))

    passed = sum(1 for _, result in checks if result != "MISMATCH")
    verified = passed == len(checks)
    summary = f"verification: {'PASS' if verified else 'FAIL'} ({passed}/{len(checks)} checks)"
    lines = [f"check {name}: {result}" for name, result in checks] + [summary]
    payload = {
        "n": system.n,
        "checks": [{"name": name, "result": result} for name, result in checks],
        "verified": verified,
    }
    rendered = _render(lines, payload, options)
    return Report(text=rendered.text, exit_code=EXIT_OK if verified else EXIT_MISMATCH)


def run_command(system: SystemDoc, command: str, options: "Options | None" = None) -> Report:
    """Execute one CLI command against a parsed document and return its report."""
    options = options or Options()
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    if command == "analyze":
        return _run_analyze(system, options)
    if command == "dual":
        return _run_dual(system, options)
    if command == "reliability":
        return _run_reliability(system, options)
    if command == "verify":
        return _run_verify(system, options)
    a = _analyze(system, options)
    if command == "paths":
        lines = [f"n: {system.n}", f"minimal path sets: {a.paths}"]
        payload = {"n": system.n, "minimal_path_sets": _family_json(a.paths)}
    elif command == "cuts":
        lines = [f"n: {system.n}", f"minimal cut sets: {a.cuts}"]
        payload = {"n": system.n, "minimal_cut_sets": _family_json(a.cuts)}
    elif command == "simple-form":
        lines = [f"n: {system.n}", f"simple form: {_form_text(a.form)}"]
        payload = {"n": system.n, "simple_form": _form_json(a.form)}
    elif command == "signature":
        lines = [f"s = {a.sig}"]
        payload = {"n": system.n, "signature": _sig_json(a.sig)}
    else:  # counts
        lines = [
            f"alpha: {_tuple_text(a.paths.size_census())}",
            f"beta: {_tuple_text(a.cuts.size_census())}",
            f"small counts: {_small_text(a.small)}",
        ]
        payload = {
            "n": system.n,
            "alpha": list(a.paths.size_census()),
            "beta": list(a.cuts.size_census()),
            "small_counts": _small_json(a.small),
        }
    return _render(lines, payload, options)


def _parse_p(raw: str, exact: bool) -> tuple:
    values = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            raise ValueError("--p: empty entry")
        try:
            values.append(Fraction(token) if exact else float(token))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"--p: cannot parse {token!r}") from exc
    return tuple(values)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems are input errors, not exit code 2
        raise ValueError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="structfn",
        description="Analyze semicoherent system structure functions.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("document", help="path to a JSON system document, or '-' for stdin")
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt", help="output format"
    )
    parser.add_argument(
        "--p",
        help="component working probabilities: one common value or n comma-separated values",
    )
    parser.add_argument(
        "--exact",
        action="store_true",
        help="use rational arithmetic; --p then accepts fractions such as 1/2",
    )
    parser.add_argument(
        "--max-r", type=int, default=None, help=f"family-size cap for expansions (at most {R_MAX})"
    )
    parser.add_argument(
        "--max-n", type=int, default=None, help=f"component-count cap (at most {N_MAX})"
    )
    return parser


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.max_r is not None and not 1 <= args.max_r <= R_MAX:
            raise ValueError(f"--max-r must be in 1..{R_MAX}")
        if args.max_n is not None and not 1 <= args.max_n <= N_MAX:
            raise ValueError(f"--max-n must be in 1..{N_MAX}")
        p = _parse_p(args.p, args.exact) if args.p is not None else None
        options = Options(fmt=args.fmt, p=p, exact=args.exact, max_r=args.max_r, max_n=args.max_n)
        if args.document == "-":
            text = sys.stdin.read()
        else:
            text = Path(args.document).read_text(encoding="utf-8")
        system = parse_document(text)
        report = run_command(system, args.command, options)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(report.text)
    return report.exit_code

"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path
from typing import Any, Callable, Sequence

from . import formats
from .catalog import ACTIONS, CatalogEntry, algebra_entry, automorphism_by_name
from .hopf_core import AXIOMS, verify_hopf_axioms
from .indicators import IndicatorInconsistencyError, regular_twisted_indicator, twisted_module_indicator
from .integrals import NotSemisimpleError
from .powers import coprime_power_experiment, exponent, twisted_exponent
from .representations import Representation
from .smash import HopfAction, action_from_generator, duality_check, smash_coproduct

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    inputs: list[dict[str, str]] = dc_field(default_factory=list)
    results: dict[str, Any] = dc_field(default_factory=dict)
    checks: list[dict[str, Any]] = dc_field(default_factory=list)
    warnings: list[str] = dc_field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def check(self, name: str, passed: bool, **extra: Any) -> None:
        self.checks.append({"name": name, "passed": bool(passed), **extra})

    def to_json(self) -> str:
        data = asdict(self)
        data["passed"] = self.passed
        return json.dumps(data, ensure_ascii=False, indent=1)


# -- input resolution ----------------------------------------------------------------


CATALOG = "catalog:"


def _resolve_algebra(spec: str, report: RunReport) -> CatalogEntry:
    if spec.startswith(CATALOG):
        name = spec[len(CATALOG):]
        try:
            entry = algebra_entry(name)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
        report.inputs.append({"name": spec, "sha256": formats.content_hash(formats.dumps_algebra(entry.algebra))})
        return entry
    data, digest = _read(spec)
    report.inputs.append({"name": spec, "sha256": digest})
    H = formats.algebra_from_dict(data)
    return CatalogEntry(H.name, H)


def _read(path: str) -> tuple[Any, str]:
    try:
        return formats.read_json(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _resolve_aut(entry: CatalogEntry, spec: str | None, report: RunReport):
    if spec is None:
        return None
    if Path(spec).is_file():
        data, digest = _read(spec)
        report.inputs.append({"name": spec, "sha256": digest})
        return formats.automorphism_from_dict(data, entry.algebra)
    try:
        return automorphism_by_name(entry, spec)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc


def _resolve_rep(entry: CatalogEntry, spec: str, report: RunReport) -> Representation:
    if Path(spec).is_file():
        data, digest = _read(spec)
        report.inputs.append({"name": spec, "sha256": digest})
        return formats.representation_from_dict(data, entry.algebra)
    if spec in entry.representations:
        return entry.representations[spec]
    raise InputError(f"unknown representation {spec!r} for {entry.name}; "
                     f"known: {', '.join(sorted(entry.representations)) or 'none'}")


def _resolve_action(entry: CatalogEntry, spec: str, report: RunReport) -> HopfAction:
    key = f"{entry.name}:{spec}"
    if key in ACTIONS and entry.name in ("h8", "nichols8", "kC3"):
        return ACTIONS[key]()
    if Path(spec).is_file():
        data, digest = _read(spec)
        report.inputs.append({"name": spec, "sha256": digest})
        if "group" in data:
            return formats.action_from_dict(data, entry.algebra)
        return action_from_generator(entry.algebra, formats.automorphism_from_dict(data, entry.algebra))
    aut = _resolve_aut(entry, spec, report)
    return action_from_generator(entry.algebra, aut)


# -- commands -------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, report: RunReport) -> list[str]:
    entry = _resolve_algebra(args.algebra, report)
    res = verify_hopf_axioms(entry.algebra)
    lines = [f"{entry.algebra.name}: dimension {entry.algebra.dim} over {entry.algebra.field}"]
    for name in AXIOMS:
        ok = res.results[name]
        report.check(name, ok, detail=res.failures.get(name, ""))
        lines.append(f"  {name:<34} {'pass' if ok else 'FAIL'}  {res.failures.get(name, '')}".rstrip())
    report.results["s_squared_identity"] = res.s_squared_identity
    if not res.s_squared_identity:
        report.warnings.append("S^2 != id")
    return lines


def cmd_exponent(args: argparse.Namespace, report: RunReport) -> list[str]:
    entry = _resolve_algebra(args.algebra, report)
    aut = _resolve_aut(entry, args.aut, report)
    H = entry.algebra
    res = exponent(H, args.bound) if aut is None else twisted_exponent(H, aut, args.bound)
    report.results["exponent"] = str(res)
    lines = [f"{'exp' if aut is None else 'exp_' + aut.name}({H.name}) = {res}"]
    if res.s2_warning:
        report.warnings.append("S^2 != id: the exponent is only a bounded search of Hopf powers")
    return lines


def cmd_indicator(args: argparse.Namespace, report: RunReport) -> list[str]:
    entry = _resolve_algebra(args.algebra, report)
    aut = _resolve_aut(entry, args.aut, report)
    H = entry.algebra
    if args.rep is None:
        val = regular_twisted_indicator(H, args.m, aut)
        report.results["indicator"] = str(val.value)
        report.results["methods"] = {k: str(v) for k, v in val.methods.items()}
        return [f"nu_{args.m}{',' + aut.name if aut else ''}({H.name}) = {val.value}"] + \
            [f"  {k:<14} {v}" for k, v in val.methods.items()]
    rep = _resolve_rep(entry, args.rep, report)
    try:
        val = twisted_module_indicator(H, rep, args.m, aut)
    except NotSemisimpleError as exc:
        raise InputError(str(exc)) from exc
    report.results["indicator"] = str(val.value)
    return [f"nu_{args.m}{',' + aut.name if aut else ''}({rep.name}) = {val.value}"]


def cmd_smash(args: argparse.Namespace, report: RunReport) -> list[str]:
    entry = _resolve_algebra(args.algebra, report)
    action = _resolve_action(entry, args.action, report)
    sc = smash_coproduct(action, verify=False)
    res = verify_hopf_axioms(sc.K)
    lines = [f"{sc.K.name}: dimension {sc.K.dim}"]
    for name in AXIOMS:
        report.check(name, res.results[name])
        lines.append(f"  {name:<34} {'pass' if res.results[name] else 'FAIL'}")
    dual_ok = duality_check(action, sc).equal if res.ok else False
    report.check("duality", dual_ok)
    lines.append(f"  {'dual equals smash product':<34} {'pass' if dual_ok else 'FAIL'}")
    report.results["dimension"] = sc.K.dim
    if args.emit:
        text = formats.dumps_algebra(sc.K)
        formats.write_text(args.emit, text)
        again = formats.dumps_algebra(formats.loads_algebra(text))
        report.check("emit_round_trip", again == text)
        lines.append(f"  wrote {args.emit}")
    return lines


def cmd_suite(args: argparse.Namespace, report: RunReport) -> list[str]:
    from .suite import run_suite

    results = run_suite(mutate=args.mutate)
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        report.check(r.name, r.passed, statement=r.statement, expected=r.expected, actual=r.actual)
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.actual:>6}  {r.statement}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return lines


def cmd_coprime_experiment(args: argparse.Namespace, report: RunReport) -> list[str]:
    entry = _resolve_algebra(args.algebra, report)
    aut = _resolve_aut(entry, args.aut, report)
    if aut is None:
        raise InputError("--aut is required")
    exp = coprime_power_experiment(entry.algebra, aut, args.bound)
    report.results["order"] = exp.order
    report.results["bound"] = exp.bound
    report.results["rows"] = {str(m): str(r) for m, r in exp.rows}
    verdict = {True: "agree", False: "DISAGREE", None: "inconclusive"}[exp.agree]
    report.results["verdict"] = verdict
    lines = [f"order {exp.order}, bound {exp.bound}", f"  {'m':>4}  exp_(tau^m)"]
    lines += [f"  {m:>4}  {r}" for m, r in exp.rows]
    lines.append(f"verdict: {verdict}")
    if exp.disagreements:
        msg = f"POTENTIAL COUNTEREXAMPLE: exponents differ for m in {exp.disagreements}"
        report.warnings.append(msg)
        lines.append(msg)
    return lines


# -- parser -------------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfsmash", description="Exact computations with finite-dimensional Hopf algebras.")
    p.add_argument("--json", action="store_true", help="emit a machine-readable run report")
    sub = p.add_subparsers(dest="command", required=True)
    alg_help = "catalog:NAME (h8, nichols8, kC<n>, kS3, k^C<n>, k^S3) or a Hopf algebra JSON file"

    s = sub.add_parser("verify", help="check every Hopf algebra axiom")
    s.add_argument("algebra", help=alg_help)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("exponent", help="(twisted) exponent by bounded search")
    s.add_argument("algebra", help=alg_help)
    s.add_argument("--aut", help="automorphism file or name (inversion, power:k, tau4, gl2:a,b,c,d)")
    s.add_argument("--bound", type=_positive)
    s.set_defaults(func=cmd_exponent)

    s = sub.add_parser("indicator", help="regular twisted or module indicator")
    s.add_argument("algebra", help=alg_help)
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--aut")
    s.add_argument("--rep", help="representation file or catalog name (e.g. N)")
    s.set_defaults(func=cmd_indicator)

    s = sub.add_parser("smash", help="build A # k^G and check it")
    s.add_argument("algebra", help=alg_help)
    s.add_argument("action", help="action file, automorphism file, or automorphism name generating a cyclic group")
    s.add_argument("--emit", help="write the smash coproduct to this file")
    s.set_defaults(func=cmd_smash)

    s = sub.add_parser("suite", help="reproduce every published value and identity")
    s.add_argument("--mutate", action="store_true", help="corrupt one structure constant (self-test)")
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("coprime-experiment", help="compare exp_(tau^m) with exp_tau for m coprime to the order")
    s.add_argument("algebra", help=alg_help)
    s.add_argument("--aut", required=True)
    s.add_argument("--bound", type=_positive)
    s.set_defaults(func=cmd_coprime_experiment)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(command=argv)
    func: Callable[[argparse.Namespace, RunReport], list[str]] = args.func
    start = time.perf_counter()
    try:
        lines = func(args, report)
    except (InputError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else repr(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except IndicatorInconsistencyError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    report.wall_time = round(time.perf_counter() - start, 6)
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(lines))
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())

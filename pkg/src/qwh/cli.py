"""Command-line driver: run named check suites, normalize expressions,
apply derivatives, and solve the one-form ansatz.

Exit codes: 0 when every report is PASS, 1 when any report is FAIL, and 2
on errors (unknown suite, parse errors, bad parameters).
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

import click

from . import scalar as sc
from .coaction import ansatz_check, comodule_check, constraint_span_check
from .coaction import ansatz_solve
from .diffcalc import apply_derivative, twisted_leibniz_check, wz_confluence
from .exprparse import ParseError, parse_poly_text
from .linalg import (
    eigenspace_identification,
    generic_q_not_eigenspace,
    involution_check,
    rhat_builtin,
    ybe_check,
)
from .presentations import (
    BUILTIN_NAMES,
    builtin,
    parse_presentation,
)
from .quantumgroup import (
    det_commutation_derive,
    hopf_check,
    intertwiner_check,
    inverse_check,
    rtt7_span_check,
    rtt9_completion_check,
    subalgebra_check,
)
from .report import ERROR, FAIL, PASS, CheckItem, CheckReport
from .rewrite import build_rules


# ---------------------------------------------------------------------------
# suite registry
# ---------------------------------------------------------------------------

def _rhat(bindings):
    R = rhat_builtin()
    return R.substitute(bindings) if bindings else R


def _suite_ybe(bindings, generic_q):
    return ybe_check(_rhat(bindings))


def _suite_involution(bindings, generic_q):
    return involution_check(_rhat(bindings))


def _suite_eigen(bindings, generic_q):
    if generic_q:
        return generic_q_not_eigenspace(bindings=bindings)
    return eigenspace_identification(bindings=bindings)


def _suite_constraints(bindings, generic_q):
    return constraint_span_check(bindings=bindings)


def _comodule(space_name, suite, bindings):
    space = builtin(space_name)
    group = builtin("TT7")
    if bindings:
        space = space.substitute(bindings)
        group = group.substitute(bindings)
    return comodule_check(space, group, suite=suite)


def _suite_comodule_x(bindings, generic_q):
    return _comodule("xspace", "comodule-x", bindings)


def _suite_comodule_xi(bindings, generic_q):
    return _comodule("xispace", "comodule-xi", bindings)


def _suite_ansatz(bindings, generic_q):
    return ansatz_check(bindings=bindings)


def _suite_rtt7(bindings, generic_q):
    return rtt7_span_check(bindings=bindings, generic_q=generic_q)


def _suite_rtt9(bindings, generic_q):
    return rtt9_completion_check(bindings=bindings)


def _suite_intertwiner(bindings, generic_q):
    return intertwiner_check(bindings=bindings)


def _suite_det_comm(bindings, generic_q):
    items = []
    for which in ("H8", "H10"):
        rep = det_commutation_derive(which, bindings=bindings)
        items.extend(
            CheckItem(f"{which}: {i.label}", i.passed, i.residual) for i in rep.items
        )
    return CheckReport.from_items("det-comm", items)


def _suite_diffcalc(bindings, generic_q):
    return wz_confluence(generic_q=generic_q, bindings=bindings)


def _suite_twisted_leibniz(bindings, generic_q):
    return twisted_leibniz_check(bindings=bindings)


_SUITES: Dict[str, Tuple[Callable, bool]] = {
    # name -> (runner(bindings, generic_q) -> CheckReport, supports --generic-q)
    "ybe": (_suite_ybe, False),
    "involution": (_suite_involution, False),
    "eigen": (_suite_eigen, True),
    "constraints": (_suite_constraints, False),
    "comodule-x": (_suite_comodule_x, False),
    "comodule-xi": (_suite_comodule_xi, False),
    "ansatz": (_suite_ansatz, False),
    "rtt-7": (_suite_rtt7, True),
    "rtt-9": (_suite_rtt9, False),
    "intertwiner": (_suite_intertwiner, False),
    "inverse-h8": (lambda b, g: inverse_check("H8", bindings=b), False),
    "inverse-h10": (lambda b, g: inverse_check("H10", bindings=b), False),
    "det-comm": (_suite_det_comm, False),
    "hopf-h8": (lambda b, g: hopf_check("H8", bindings=b), False),
    "hopf-h10": (lambda b, g: hopf_check("H10", bindings=b), False),
    "subalgebra": (lambda b, g: subalgebra_check(bindings=b), False),
    "diffcalc": (_suite_diffcalc, True),
    "twisted-leibniz": (_suite_twisted_leibniz, False),
}


def suite_names():
    return list(_SUITES) + ["all"]


class CLIError(Exception):
    pass


def _parse_params(text: Optional[str]) -> Dict[str, Fraction]:
    if not text:
        return {}
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        key, sep, val = piece.partition("=")
        key, val = key.strip(), val.strip()
        if not sep or not key or not val:
            raise CLIError(f"malformed parameter binding {piece!r} (expected k=v)")
        if key not in sc.PARAM_NAMES:
            raise CLIError(
                f"unknown parameter {key!r}; known: {', '.join(sorted(sc.PARAM_NAMES))}"
            )
        try:
            out[key] = Fraction(val)
        except (ValueError, ZeroDivisionError) as exc:
            raise CLIError(f"bad rational value {val!r} for {key}: {exc}") from None
    return out


def _load_presentation(name_or_path: str, bindings):
    if name_or_path in BUILTIN_NAMES:
        pres = builtin(name_or_path)
    else:
        try:
            with open(name_or_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CLIError(
                f"{name_or_path!r} is neither a builtin presentation "
                f"({', '.join(BUILTIN_NAMES)}) nor a readable file: {exc}"
            ) from None
        pres = parse_presentation(text, file=name_or_path)
    if bindings:
        pres = pres.substitute(bindings)
    return pres


def _emit(report_dicts, texts, fmt, out):
    if fmt == "json":
        import json

        payload = report_dicts[0] if len(report_dicts) == 1 else report_dicts
        blob = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        if out:
            with open(out, "w") as fh:
                fh.write(blob)
        else:
            click.echo(blob, nl=False)
    else:
        body = "\n".join(texts) + "\n"
        if out:
            with open(out, "w") as fh:
                fh.write(body)
        else:
            click.echo(body, nl=False)


def _status_exit(statuses) -> int:
    if any(s == ERROR for s in statuses):
        return 2
    if any(s == FAIL for s in statuses):
        return 1
    return 0


@click.group()
def main():
    """Exact verification toolkit for the deformed oscillator quantum space,
    its invariance quantum groups, and the invariant differential calculus."""


@main.command()
@click.option("--suite", "-s", required=True, help="Suite name, or `all`.")
@click.option("--params", "-p", default=None, help="Rational bindings, e.g. u=2,s=3.")
@click.option("--generic-q", is_flag=True, help="Keep q independent of u.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--out", type=click.Path(), default=None, help="Write the report here.")
def check(suite, params, generic_q, fmt, out):
    """Run a verification suite and exit 0/1/2 for PASS/FAIL/ERROR."""
    try:
        bindings = _parse_params(params)
    except CLIError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)

    if suite == "all":
        names = [n for n in _SUITES]
    elif suite in _SUITES:
        names = [suite]
    else:
        click.echo(
            f"error: unknown suite {suite!r}; registered suites: "
            + ", ".join(suite_names()),
            err=True,
        )
        sys.exit(2)

    if generic_q and any(not _SUITES[n][1] for n in names) and suite != "all":
        click.echo(
            f"error: suite {suite!r} has no generic-q variant "
            "(supported: " + ", ".join(n for n, (_, g) in _SUITES.items() if g) + ")",
            err=True,
        )
        sys.exit(2)

    params_used = {k: str(v) for k, v in bindings.items()}
    reports = []
    for name in names:
        runner, supports_gq = _SUITES[name]
        gq = generic_q and supports_gq
        try:
            rep = runner(bindings or None, gq)
        except Exception as exc:  # surface as ERROR, exit 2
            rep = CheckReport.error(name, f"{type(exc).__name__}: {exc}")
        rep.params = dict(params_used)
        if gq:
            rep.params["q"] = "generic"
        reports.append(rep)

    _emit([r.to_dict() for r in reports], [r.render_text() for r in reports], fmt, out)
    sys.exit(_status_exit([r.status for r in reports]))


@main.command()
@click.option("--algebra", "-a", required=True, help="Builtin name or DSL file path.")
@click.option("--expr", "-e", required=True, help="Expression to normalize.")
@click.option("--params", "-p", default=None, help="Rational bindings, e.g. u=2,s=3.")
def normalize(algebra, expr, params):
    """Print the normal form of an expression in a presented algebra."""
    try:
        bindings = _parse_params(params)
        pres = _load_presentation(algebra, bindings)
        poly = parse_poly_text(expr, pres.table)
    except (CLIError, ParseError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    system = build_rules(pres.relations, pres.order, pres.table)
    click.echo(system.normal_form(poly).render(pres.order))


@main.command("d")
@click.option("--index", "-i", type=int, required=True, help="Derivative index 1..3.")
@click.option("--expr", "-e", required=True, help="Polynomial in the variables.")
@click.option("--params", "-p", default=None, help="Rational bindings, e.g. u=2,s=3.")
def derivative(index, expr, params):
    """Apply a derivative of the invariant calculus to a variable polynomial."""
    xspace = builtin("xspace")
    try:
        bindings = _parse_params(params)
        if bindings:
            xspace = xspace.substitute(bindings)
        poly = parse_poly_text(expr, xspace.table)
        if index not in (1, 2, 3):
            raise CLIError(f"derivative index must be 1..3, got {index}")
    except (CLIError, ParseError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    out = apply_derivative(index, poly, bindings=bindings or None)
    system = build_rules(xspace.relations, xspace.order, xspace.table)
    click.echo(system.normal_form(out).render(xspace.order))


@main.command()
@click.option(
    "--ansatz",
    type=click.Choice(["xi", "xi3sq-variant"]),
    default="xi",
    help="Which one-form ansatz to solve.",
)
@click.option("--params", "-p", default=None, help="Rational bindings, e.g. u=2,s=3.")
def derive(ansatz, params):
    """Solve the invariance constraints of a one-form ansatz and print the
    resulting constraint system."""
    try:
        bindings = _parse_params(params)
    except CLIError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    name = "ansatz_xi" if ansatz == "xi" else "ansatz_xi3sq_variant"
    system = ansatz_solve(builtin(name), bindings=bindings or None)
    click.echo(system.render())
    sys.exit(1 if system.inconsistent else 0)


if __name__ == "__main__":
    main()

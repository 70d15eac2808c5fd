"""Command-line front end.

Reports are newline-delimited JSON, one object per check, in check order.
Exit status: 0 all checks passed, 1 a check failed, 2 bad configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from . import hypersum, identities, inversion, solver, ultrade
from .exactnum import ZeroDenominator, rat, rat_str
from .families import FamilySpec
from .poly import latex
from .report import CheckReport, _jsonable, skipped_pole

Thunk = Callable[[], dict]

_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    output: str | None = None
    format: str = "json"
    strict_poles: bool = False


# argument parsing ----------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}: use p/q or an integer") from exc


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",")]


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _glue_negatives(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/3" as an option flag; bind it to the preceding option.
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEG_RATIONAL.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orthoinvert", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "latex"), default="json")
        p.add_argument("--strict-poles", action="store_true", help="count pole skips as failures")

    p = sub.add_parser("check", help="run an identity sweep")
    p.add_argument("--identity", required=True, help="identity tag such as eq31, eq24 or conv (Laguerre convolution)")
    p.add_argument("--n-max", type=_nonneg, default=8)
    p.add_argument("--i-max", type=_nonneg, default=None, help="alias of --n-max for (i, j) sweeps")
    p.add_argument("--alpha", type=_rational_list, default=[Fraction(0)])
    p.add_argument("--beta", type=_rational_list, default=[Fraction(0)])
    p.add_argument("--a", type=_rational_list, default=[Fraction(1)], help="Charlier parameter / 1F0 parameter")
    p.add_argument("--b", type=_rational_list, default=[Fraction(3)])
    p.add_argument("--c", type=_rational_list, default=[Fraction(1)])
    p.add_argument("--p", type=_rational_list, default=[Fraction(0)])
    p.add_argument("--q", type=_rational_list, default=[Fraction(2)])
    p.add_argument("--y", type=_rational_list, default=[Fraction(1, 3)])
    common(p)

    p = sub.add_parser("invert", help="build T and U = T^-1 for Charlier or Laguerre")
    p.add_argument("--family", choices=("charlier", "laguerre"), required=True)
    p.add_argument("--param", type=_rational, required=True, help="a (Charlier) or alpha (Laguerre)")
    p.add_argument("--N", type=_nonneg, required=True)
    p.add_argument("--x0", type=_rational, required=True)
    common(p)

    p = sub.add_parser("solve", help="solve a triangular system from a JSON file")
    p.add_argument("--input", "-i", required=True)
    common(p)

    p = sub.add_parser("synth-ultra", help="synthesize the ultraspherical DE coefficients")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--a01", type=_rational, default=Fraction(0))
    p.add_argument("--i-max", type=_nonneg, required=True)
    p.add_argument("--route", choices=("closed", "System54", "System52"), default="closed")
    common(p)

    p = sub.add_parser("verify-de", help="verify the DE for one degree")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--M", type=_rational, required=True)
    p.add_argument("--a01", type=_rational, default=Fraction(0))
    p.add_argument("--systems", action="store_true", help="also check the raw systems 38, 39, 50")
    common(p)
    return ap


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(_glue_negatives(argv))
    params = {k: v for k, v in vars(ns).items() if k not in ("command", "output", "format", "strict_poles")}
    return RunConfig(ns.command, params, ns.output, ns.format, ns.strict_poles)


# check registry -------------------------------------------------------------

def _rep(fn: Callable[..., CheckReport], *args) -> Thunk:
    return lambda: fn(*args).to_json()


def _sum(tag: str, fn: Callable[..., hypersum.SumCheck], params: dict) -> Thunk:
    def run() -> dict:
        sc = fn(*params.values())
        out = {"identity": tag, "params": {k: _jsonable(v) for k, v in params.items()}}
        out.update(sc.to_json())
        out["status"] = "ok" if sc.equal else "fail"
        return out

    return run


def _check_thunks(ident: str, P: dict) -> list[tuple[str, dict, Thunk]]:
    """(identity tag, params, thunk) triples for a sweep, in a fixed order."""
    N = P["i_max"] if P.get("i_max") is not None else P["n_max"]
    out: list[tuple[str, dict, Thunk]] = []

    def add(tag, params, thunk):
        out.append((tag, params, thunk))

    ab = [(a, b) for a in P["alpha"] for b in P["beta"]]
    ns = range(N + 1)
    lower = [(i, j) for i in ns for j in range(i + 1)]
    if ident == "eq5":
        for a in P["alpha"]:
            for n in ns:
                for i in range(n + 1):
                    add("Eq5", {}, _rep(identities.check_derivative_rule, FamilySpec.laguerre(a), n, i))
    elif ident == "eq6":
        for a in P["alpha"]:
            for n in ns:
                add("Eq6", {}, _rep(identities.check_ode, FamilySpec.laguerre(a), n))
    elif ident == "eq7":
        for a in P["alpha"]:
            for n in ns:
                add("Eq7", {"n": n, "alpha": a}, _rep(identities.check_monomial_expansion, "Laguerre7", n, a))
    elif ident in ("eq8", "eq9", "eq10"):
        for a, b in ab:
            for n in ns:
                for k in (0, 1):
                    add("Eq8", {}, lambda n=n, a=a, b=b, k=k: identities.check_jacobi_definitions(n, a, b)[k].to_json())
    elif ident == "eq11":
        for a, b in ab:
            for n in ns:
                for i in range(n + 1):
                    add("Eq11", {}, _rep(identities.check_derivative_rule, FamilySpec.jacobi(a, b), n, i))
    elif ident == "eq12":
        for a, b in ab:
            for n in ns:
                add("Eq12", {}, _rep(identities.check_symmetry, n, a, b))
    elif ident == "eq13":
        for a, b in ab:
            for n in ns:
                add("Eq13", {}, _rep(identities.check_ode, FamilySpec.jacobi(a, b), n))
    elif ident in ("eq14", "eq15"):
        kind = "Jacobi14" if ident == "eq14" else "Jacobi15"
        for a, b in ab:
            for n in ns:
                add(ident.capitalize(), {"n": n, "alpha": a, "beta": b},
                    _rep(identities.check_monomial_expansion, kind, n, a, b))
    elif ident in ("eq17", "eq18", "eq19", "eq20", "eq21", "eq22"):
        low = 1 if ident in ("eq17", "eq18", "eq19") else 2
        pairs = ab if low == 1 else [(a, a) for a in P["alpha"]]
        for a, b in pairs:
            for n in range(low, N + 1):
                add(ident.capitalize(), {}, _rep(identities.check_recurrence, ident.capitalize(), n, a, b))
    elif ident == "eq56":
        for n in ns:
            add("Eq56", {}, _rep(identities.check_laguerre_degenerate_monomial, n))
    elif ident == "eq23":
        for a in P["a"]:
            for n in ns:
                add("Eq23", {"a": a, "n": n}, _sum("Eq23", hypersum.sum_1f0_partial, {"a": a, "n": n}))
    elif ident == "eq24":
        for b in P["b"]:
            for c in P["c"]:
                for n in ns:
                    add("Eq24", {"b": b, "c": c, "n": n}, _sum("Eq24", hypersum.vandermonde, {"b": b, "c": c, "n": n}))
    elif ident in ("eq25", "eq26"):
        for b in P["b"]:
            for n in range(1, N + 1):
                add("Eq25", {"b": b, "n": n}, _sum("Eq25", hypersum.weighted_zero_sum, {"b": b, "n": n}))
    elif ident == "eq27":
        for a in P["a"]:
            for b in P["b"]:
                for c in P["c"]:
                    for n in ns:
                        add("Eq27", {"a": a, "b": b, "c": c, "n": n}, _sum("Eq27", hypersum.saalschutz, {"a": a, "b": b, "c": c, "n": n}))
    elif ident == "eq28":
        for b in P["b"]:
            for c in P["c"]:
                for n in ns:
                    add("Eq28", {"b": b, "c": c, "n": n}, _sum("Eq28", hypersum.saalschutz_balanced, {"b": b, "c": c, "n": n}))
    elif ident == "eq29":
        for b in P["b"]:
            for c in P["c"]:
                for n in ns:
                    add("Eq29", {"b": b, "c": c, "n": n}, _sum("Eq29", hypersum.wellpoised_29, {"b": b, "c": c, "n": n}))
    elif ident == "eq30":
        for a in P["alpha"]:
            for i, j in lower:
                add("Eq30", {}, _rep(inversion.laguerre_inversion_check, i, j, a))
    elif ident in ("eq31", "eq46", "eq37", "eq49"):
        variant = "Delta31" if ident in ("eq31", "eq46") else "Monomial37"
        pairs = ab if ident in ("eq31", "eq37") else [(a, a) for a in P["alpha"]]
        tag = ident.capitalize()
        for a, b in pairs:
            for i, j in lower:
                add(tag, {"i": i, "j": j, "alpha": a, "beta": b},
                    _rep(inversion.jacobi_inversion_check, i, j, a, b, variant))
    elif ident == "eq33":
        for a in P["a"]:
            for i, j in lower:
                add("Eq33", {}, _rep(inversion.charlier_inversion_check, i, j, a))
    elif ident == "eq34":
        for a in P["alpha"]:
            for p in P["p"]:
                for q in P["q"]:
                    for n in ns:
                        add("Eq34", {}, _rep(inversion.gen_laguerre_sum, n, a, p, q))
    elif ident == "eq35":
        for a, b in ab:
            for y in P["y"]:
                for n in ns:
                    add("Eq35", {"n": n, "alpha": a, "beta": b, "y": y},
                        _rep(inversion.jacobi_product_formula, n, a, b, y))
    elif ident == "eq36":
        for a, b in ab:
            for n in ns:
                add("Eq36", {"n": n, "alpha": a, "beta": b}, _rep(inversion.jacobi_diagonal_check, n, a, b))
    elif ident in ("eq57", "conv"):
        variant = "Eq57" if ident == "eq57" else "General"
        for a, b in ab:
            for y in P["y"]:
                for n in ns:
                    add(variant, {}, _rep(inversion.laguerre_convolution_check, n, a, b, y, variant))
    elif ident == "eq55":
        for a in P["alpha"]:
            for i in range(2, N + 1):
                add("Eq55", {"i": i, "alpha": a}, _rep(ultrade.identity_55_check, a, i))
    else:
        raise ConfigError(f"unknown identity {ident!r}; known: {', '.join(KNOWN_IDENTITIES)}")
    return out


KNOWN_IDENTITIES = (
    "eq5", "eq6", "eq7", "eq8", "eq11", "eq12", "eq13", "eq14", "eq15",
    "eq17", "eq18", "eq19", "eq20", "eq21", "eq22", "eq23", "eq24", "eq25",
    "eq27", "eq28", "eq29", "eq30", "eq31", "eq33", "eq34", "eq35", "eq36",
    "eq37", "eq46", "eq49", "eq55", "eq56", "eq57", "conv",
)


def _guard(tag: str, params: dict, thunk: Thunk) -> Thunk:
    def run() -> dict:
        try:
            return thunk()
        except ZeroDenominator as exc:
            return skipped_pole(tag, params, str(exc))

    return run


def run_thunks(thunks: Iterable[Thunk], threads: int | None = None) -> list[dict]:
    """Evaluate in parallel; results come back in submission order."""
    thunks = list(thunks)
    if threads is None:
        threads = int(os.environ.get("ORTHOINVERT_THREADS", "1") or 1)
    if threads <= 1:
        return [t() for t in thunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda t: t(), thunks))


# commands -------------------------------------------------------------------

def _cmd_check(cfg: RunConfig) -> list[dict]:
    triples = _check_thunks(cfg.params["identity"].lower(), cfg.params)
    return run_thunks(_guard(tag, params, th) for tag, params, th in triples)


def _cmd_invert(cfg: RunConfig) -> list[dict]:
    P = cfg.params
    spec = FamilySpec.charlier(P["param"]) if P["family"] == "charlier" else FamilySpec.laguerre(P["param"])
    pair = inversion.build_inversion_matrices(spec, P["N"], P["x0"])
    ok = pair.is_inverse()
    line = {
        "identity": "Eq33" if P["family"] == "charlier" else "Eq30",
        "params": {"family": spec.to_json(), "N": P["N"], "x0": rat_str(P["x0"])},
        "status": "ok" if ok else "fail",
    }
    line.update(pair.to_json())
    return [line]


def _cmd_solve(cfg: RunConfig) -> list[dict]:
    try:
        sys_ = solver.TriangularSystem.load(cfg.params["input"])
    except (OSError, KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot read system: {exc}") from exc
    A = solver.solve_triangular(sys_)
    lines = [{"identity": "Solution", "params": {"alpha": rat_str(sys_.alpha), "beta": rat_str(sys_.beta)},
              "status": "ok", "A": [a.to_json() for a in A]}]
    lines += [r.to_json() for r in solver.residual_check(sys_, A)]
    return lines


def _cmd_synth(cfg: RunConfig) -> list[dict]:
    P = cfg.params
    co = ultrade.synthesize(P["alpha"], P["a01"], P["i_max"])
    if P["route"] != "closed":
        co.a = ultrade.coeffs_via_inversion(P["alpha"], P["a01"], P["i_max"], P["route"])
    line = {"identity": "Eq41", "params": {"route": P["route"]}, "status": "ok"}
    line.update(co.to_json())
    line["latex"] = co.to_latex()
    return [line]


def _cmd_verify_de(cfg: RunConfig) -> list[dict]:
    P = cfg.params
    n, a, M, a01 = P["n"], P["alpha"], P["M"], P["a01"]
    thunks = [_rep(ultrade.verify_de, n, a, M, a01)]
    if P["systems"]:
        systems = ["Eq38", "Eq39"] + (["Eq50"] if n >= 2 else [])
        thunks += [_rep(ultrade.system_check, s, n, a, a01) for s in systems]
    return run_thunks(thunks)


COMMANDS = {
    "check": _cmd_check,
    "invert": _cmd_invert,
    "solve": _cmd_solve,
    "synth-ultra": _cmd_synth,
    "verify-de": _cmd_verify_de,
}


def exit_status(lines: Sequence[dict], strict_poles: bool = False) -> int:
    bad = {"fail", "skipped-pole"} if strict_poles else {"fail"}
    return 1 if any(line.get("status") in bad for line in lines) else 0


def render_latex(lines: Sequence[dict]) -> str:
    body = []
    for line in lines:
        if "latex" in line:
            body.append("\\begin{align*}")
            body.append(" \\\\\n".join(s.replace(" = ", " &= ", 1) for s in line["latex"]))
            body.append("\\end{align*}")
            continue
        params = ", ".join(f"{k}={v}" for k, v in line.get("params", {}).items())
        residual = line.get("residual")
        extra = f" residual ${latex_from_json(residual)}$" if residual else ""
        body.append(f"\\item \\texttt{{{line['identity']}}} ({params}): {line['status']}{extra}")
    items = any(b.startswith("\\item") for b in body)
    out = ["\\documentclass{article}", "\\usepackage{amsmath}", "\\begin{document}"]
    if items:
        out.append("\\begin{itemize}")
    out += body
    if items:
        out.append("\\end{itemize}")
    out.append("\\end{document}")
    return "\n".join(out) + "\n"


def latex_from_json(coeffs: list[str]) -> str:
    from .poly import Poly

    return latex(Poly.from_json(coeffs))


def run(cfg: RunConfig, stream=None) -> int:
    lines = COMMANDS[cfg.command](cfg)
    text = render_latex(lines) if cfg.format == "latex" else "".join(json.dumps(l) + "\n" for l in lines)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        (stream or sys.stdout).write(text)
    return exit_status(lines, cfg.strict_poles)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return run(cfg)
    except ConfigError as exc:
        print(f"orthoinvert: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        # DomainError / ArityError / a pole outside any sweep
        print(f"orthoinvert: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

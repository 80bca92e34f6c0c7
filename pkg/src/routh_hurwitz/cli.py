"""Command-line front end.

    routh-hurwitz stability "1 2 3 1"
    routh-hurwitz crosscheck "1 1 1 2" --format json
    routh-hurwitz hodograph "32 12 46 21 16 7 1" --out curve.svg
    routh-hurwitz lorenz 10 28 8/3

Exit status: 0 on success, 1 when ``crosscheck`` finds a disagreement,
2 on malformed input or a violated precondition.  ``--format json`` output
follows ``routh_hurwitz.schema.RESULT_SCHEMA``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import hankel, hodograph, hurwitz, lorenz, routh, stieltjes, sturm_index
from .crosscheck import METHODS, crosscheck, distribution
from .scalar_poly import (
    ComplexPolynomial,
    Polynomial,
    RationalFunction,
    format_complex,
    imaginary_axis_split,
)

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT = 0, 1, 2


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"token {position}: {message}")
        self.position = position


_RAT = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"^[+-]?{_RAT}$")
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_RAT})(?P<im>[+-](?:{_RAT})?)i|(?P<pure>[+-]?(?:{_RAT})?)i)$"
)


def _parse_rat(text: str, pos: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational {text!r}", pos) from None


def _parse_imag(text: str, pos: int) -> Fraction:
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    return _parse_rat(text, pos)


def parse_token(tok: str, pos: int = 0):
    if _REAL_RE.match(tok):
        return _parse_rat(tok, pos)
    m = _COMPLEX_RE.match(tok)
    if not m:
        raise ParseError(f"malformed coefficient {tok!r}", pos)
    if m.group("pure") is not None:
        return Fraction(0), _parse_imag(m.group("pure"), pos)
    return _parse_rat(m.group("re"), pos), _parse_imag(m.group("im"), pos)


def parse_polynomial(text: str):
    """Descending coefficients separated by whitespace; ``p/q`` rationals, ``a+bi`` complex."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty polynomial")
    values = [parse_token(t, i) for i, t in enumerate(tokens)]
    if any(isinstance(v, tuple) for v in values):
        pairs = [v if isinstance(v, tuple) else (v, Fraction(0)) for v in values]
        if pairs[0] == (0, 0):
            raise ParseError("leading coefficient zero", 0)
        return ComplexPolynomial(tuple(pairs))
    if values[0] == 0:
        raise ParseError("leading coefficient zero", 0)
    return Polynomial(tuple(values))


def format_polynomial(p) -> str:
    if isinstance(p, ComplexPolynomial):
        return " ".join(format_complex(c) for c in p.coeffs)
    return " ".join(str(c) for c in p.coeffs)


def _q(x) -> str:
    return str(Fraction(x))


def _coeffs(p) -> list | None:
    if p is None:
        return None
    if isinstance(p, ComplexPolynomial):
        return [format_complex(c) for c in p.coeffs]
    return [_q(c) for c in p.coeffs]


def _dist(d) -> dict | None:
    if d is None:
        return None
    return {
        "n_minus": d.n_minus,
        "n_plus": d.n_plus,
        "n_axis": d.n_axis,
        "axis_polynomial": _coeffs(d.axis),
    }


def _require_real(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if p.is_real:
        return p.to_real()
    raise ValueError("this subcommand needs real coefficients")


def _degree_one_or_more(p):
    if p.deg < 1:
        raise ValueError("polynomial must have degree >= 1")
    return p


# -- subcommands -----------------------------------------------------------


def cmd_stability(p, args) -> dict:
    if isinstance(p, ComplexPolynomial) and not p.is_real:
        d = sturm_index.half_plane_split(p).distribution()
        stable = d.n_plus == 0 and d.n_axis == 0
        return {"verdict": "stable" if stable else "not stable", "method": "sturm",
                "distribution": _dist(d)}
    real = _require_real(p)
    sc = routh.classify(real)
    return {
        "verdict": routh.describe(sc),
        "stable": routh.is_stable(real),
        "kind": sc.kind.value,
        "case": sc.case,
        "completed": sc.outcome.completed,
        "h": [_q(x) for x in sc.outcome.h],
        "distribution": _dist(sc.distribution),
    }


def cmd_distribution(p, args) -> dict:
    res = distribution(p, args.method)
    if res.distribution is None:
        raise ValueError(f"method {args.method} not applicable: {res.note}")
    return {"method": res.method, "note": res.note, **_dist(res.distribution)}


def cmd_hurwitz(p, args) -> dict:
    real = _require_real(p)
    rep = hurwitz.leading_minors(real)
    dist = None
    if rep.quotient_sequence is not None:
        dist = hurwitz.distribution_from_minors(real)
    return {
        "minors": [_q(m) for m in rep.minors],
        "stable": rep.stable,
        "lienard_chipart": hurwitz.lienard_chipart(real),
        "quotient_sequence": None if rep.quotient_sequence is None
        else [_q(x) for x in rep.quotient_sequence],
        "distribution": _dist(dist),
    }


def _split_function(p) -> RationalFunction:
    s = imaginary_axis_split(p)
    return RationalFunction(s.f1, s.f0)


def cmd_hankel(p, args) -> dict:
    R = _split_function(p)
    n = R.den.deg
    s = hankel.markov_parameters(R, 2 * n)
    rep = hankel.hankel_rank_signature(s, n)
    return {
        "function": {"num": _coeffs(R.num), "den": _coeffs(R.den)},
        "markov": [_q(x) for x in s.s],
        "minors": [_q(x) for x in hankel.hankel_minors(R)],
        "shifted_minors": [_q(x) for x in hankel.hankel_minors(R, shift=1)],
        "rank": rep.rank,
        "signature": rep.signature,
        "proper": hankel.is_proper_via_hankel(R),
    }


def cmd_cf(p, args) -> dict:
    R = _split_function(p)
    cf = stieltjes.cf_expand(R)
    return {
        "function": {"num": _coeffs(R.num), "den": _coeffs(R.den)},
        "quotients": [_coeffs(d) for d in cf.terms],
        "index": stieltjes.index_from_cf(cf),
        "proper": stieltjes.is_proper_via_cf(R),
    }


def cmd_hodograph(p, args) -> dict:
    out = {"points": args.points, "out": None}
    if args.out:
        path = Path(args.out)
        fmt = args.plot_format or ("svg" if path.suffix.lower() == ".svg" else "csv")
        samples = hodograph.sample_curve(p, args.points)
        path.write_text(hodograph.emit(samples, fmt))
        out["out"] = str(path)
        out["plot_format"] = fmt
    w = hodograph.winding_increment(p)
    d = sturm_index.half_plane_split(p)
    out.update(
        delta_over_pi=w.delta_over_pi,
        crossing_indices=list(w.crossing_indices),
        n_minus=d.n_minus,
        n_plus=d.n_plus,
    )
    return out


def cmd_lorenz(params: lorenz.LorenzParams, args) -> dict:
    a = lorenz.analyze(params)
    return {
        "sigma": _q(params.sigma),
        "r": _q(params.r),
        "b": _q(params.b),
        "r_star": "inf" if a.r_star is None else _q(a.r_star),
        "fixed_points": [str(fp) for fp in a.fixed_points],
        "p0": _coeffs(a.p0),
        "p0_verdict": a.p0_verdict.kind.value,
        "p12": _coeffs(a.p12),
        "p12_verdict": None if a.p12_verdict is None else a.p12_verdict.kind.value,
        "p12_distribution": None if a.p12_verdict is None else _dist(a.p12_verdict.distribution),
    }


def cmd_crosscheck(p, args) -> dict:
    cc = crosscheck(p)
    return {
        "agree": cc.agree,
        "methods": [
            {"method": r.method, "applicable": r.distribution is not None, "note": r.note,
             "distribution": _dist(r.distribution)}
            for r in cc.results
        ],
    }


POLY_COMMANDS = {
    "stability": cmd_stability,
    "distribution": cmd_distribution,
    "hurwitz": cmd_hurwitz,
    "hankel": cmd_hankel,
    "cf": cmd_cf,
    "hodograph": cmd_hodograph,
    "crosscheck": cmd_crosscheck,
}


# -- text rendering ----------------------------------------------------------


def _render_dist(d: dict | None) -> str:
    if d is None:
        return "n/a"
    s = f"n_minus={d['n_minus']} n_plus={d['n_plus']} n_axis={d['n_axis']}"
    if d.get("axis_polynomial"):
        s += f" (axis roots i*w with w a real root of {' '.join(d['axis_polynomial'])})"
    return s


def render_text(result: dict) -> str:
    cmd = result["command"]
    lines = [f"{cmd}: {result.get('input', '')}".rstrip()]
    if cmd == "crosscheck":
        for m in result["methods"]:
            note = f"  [{m['note']}]" if m["note"] else ""
            lines.append(f"  {m['method']:<8} {_render_dist(m['distribution'])}{note}")
        lines.append("  all methods agree" if result["agree"] else "  DISAGREEMENT")
        return "\n".join(lines)
    for key, val in result.items():
        if key in ("command", "input"):
            continue
        if isinstance(val, dict) and "n_minus" in val:
            val = _render_dist(val)
        elif key == "distribution":
            val = _render_dist(val)
        elif isinstance(val, list):
            val = " ".join(
                "[" + " ".join(v) + "]" if isinstance(v, list) else str(v) for v in val
            )
        lines.append(f"  {key}: {val}")
    return "\n".join(lines)


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="routh-hurwitz", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, poly=True):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if poly:
            sp.add_argument("polynomial", nargs="?",
                            help="coefficients in descending order, e.g. '1 2 3 1'")
            sp.add_argument("--input-file", help="file with one polynomial per line")

    for name in POLY_COMMANDS:
        sp = sub.add_parser(name)
        common(sp)
        if name == "distribution":
            sp.add_argument("--method", choices=METHODS, default="routh")
        if name == "hodograph":
            sp.add_argument("--out", help="write the sampled curve here (.svg or .csv)")
            sp.add_argument("--points", type=int, default=2000)
            sp.add_argument("--plot-format", choices=("csv", "svg"))
    sp = sub.add_parser("lorenz")
    common(sp, poly=False)
    sp.add_argument("sigma")
    sp.add_argument("r")
    sp.add_argument("b")
    return ap


def _inputs(args) -> list:
    if args.input_file:
        lines = Path(args.input_file).read_text().splitlines()
        return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if args.polynomial is None:
        raise ParseError("no polynomial given")
    return [args.polynomial]


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    def emit(result: dict):
        if args.format == "json":
            stdout.write(json.dumps(result) + "\n")
        else:
            stdout.write(render_text(result) + "\n")

    if args.command == "lorenz":
        try:
            params = lorenz.LorenzParams(*(parse_token(t, i) for i, t in
                                           enumerate((args.sigma, args.r, args.b))))
        except (ValueError, TypeError) as exc:
            stderr.write(f"error: {exc}\n")
            return EXIT_INPUT
        emit({"command": "lorenz", **cmd_lorenz(params, args)})
        return EXIT_OK

    try:
        texts = _inputs(args)
    except (ParseError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    status = EXIT_OK
    handler = POLY_COMMANDS[args.command]
    for text in texts:
        try:
            p = _degree_one_or_more(parse_polynomial(text))
            result = {"command": args.command, "input": format_polynomial(p), **handler(p, args)}
        except ValueError as exc:  # parse errors and violated preconditions
            stderr.write(f"error: {text!r}: {exc}\n")
            status = max(status, EXIT_INPUT)
            continue
        emit(result)
        if args.command == "crosscheck" and not result["agree"]:
            status = max(status, EXIT_DISAGREE)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

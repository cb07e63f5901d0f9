"""Command-line front end: sign computations, tables, checks, and the suite.

Exit statuses: 0 success or predicate true, 1 predicate false or suite
failure, 2 parse/usage error, 3 exhaustive-size bound exceeded. All indices
in the surface syntax are 1-based.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path

from . import verify as verify_mod
from .cohomology import SIGNATURE, TRIVIAL, build_cf, is_cocycle, module_from_degrees
from .core import (
    GradedSequence,
    Permutation,
    act,
    is_constant_one,
    is_morphism,
    kappa,
    kappa_exponent,
    parity,
    symmetric_group,
)
from .errors import KoszulError, ParseError, ResourceError
from .words import kappa_word, parse_word, render_word

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_INT = re.compile(r"[+-]?\d+$")


def parse_degrees(text: str):
    """Comma-separated integer degrees, length >= 2."""
    degrees = []
    pos = 0
    tokens = text.split(",")
    for token in tokens:
        stripped = token.strip()
        if not _INT.match(stripped):
            raise ParseError(f"bad degree token {token!r}", position=pos)
        degrees.append(int(stripped))
        pos += len(token) + 1
    if len(degrees) < 2:
        raise ParseError(f"need at least 2 degrees, got {len(degrees)}")
    return tuple(degrees)


def parse_perm(text: str, n: int) -> Permutation:
    """One-line ``[a1,...,an]`` (a_i = sigma(i)) or cycles ``(i j)(k l)``.

    Cycles compose left to right as written, with the rightmost cycle applied
    first.
    """
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unclosed bracket in {text!r}", position=len(text))
        body = text[1:-1]
        images = []
        for token in body.split(","):
            stripped = token.strip()
            if not stripped.isdigit():
                raise ParseError(f"bad one-line entry {token!r}")
            images.append(int(stripped))
        if len(images) != n:
            raise ParseError(f"expected {n} images, got {len(images)}")
        try:
            return Permutation(images)
        except KoszulError as exc:
            raise ParseError(str(exc)) from exc
    if text.startswith("(") or text in ("e", "()"):
        if text in ("e", "()"):
            return Permutation.identity(n)
        if not re.fullmatch(r"(\([^()]*\))+", text):
            raise ParseError(f"malformed cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            entries = [t for t in re.split(r"[,\s]+", body.strip()) if t]
            if not entries:
                continue
            cycle = []
            for t in entries:
                if not t.isdigit():
                    raise ParseError(f"bad cycle entry {t!r}")
                v = int(t)
                if not 1 <= v <= n:
                    raise ParseError(f"cycle entry {v} out of range 1..{n}")
                if v in cycle:
                    raise ParseError(f"repeated entry {v} in cycle ({body})")
                cycle.append(v)
            cycles.append(cycle)
        try:
            return Permutation.from_cycles(cycles, n)
        except KoszulError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot parse permutation {text!r}: expected [..] or (..)")


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _parity_explanation(degrees) -> str:
    odd = sum(parity(d) for d in degrees)
    even = len(degrees) - odd
    detail = f"{odd} odd, {even} even"
    if odd in (0, len(degrees)):
        return f"{detail}: all degrees share one parity"
    if odd == 1:
        return f"{detail}: exactly one odd degree"
    return f"{detail}: mixed parities with more than one odd degree (forbidden)"


def cmd_sign(args) -> int:
    degrees = parse_degrees(args.degrees)
    n = len(degrees)
    sigma = parse_perm(args.perm, n)
    f = GradedSequence.from_degrees(degrees)
    g = act(parse_perm(args.base_order, n), f) if args.base_order else f
    sign = kappa(sigma, g)
    exponent = kappa_exponent(sigma, g)
    payload = {
        "n": n,
        "degrees": list(degrees),
        "perm": sigma.one_line(),
        "sign": sign,
        "exponent_mod2": exponent,
    }
    lines = [
        f"n = {n}",
        f"degrees = {degrees}",
        f"perm = {sigma.one_line()}  cycles = {sigma.cycle_string()}",
    ]
    if args.base_order:
        payload["base_order"] = parse_perm(args.base_order, n).one_line()
        lines.append(f"base order = {payload['base_order']}")
    lines += [f"sign = {sign:+d}", f"exponent mod 2 = {exponent}"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_sign_word(args) -> int:
    degrees = parse_degrees(args.degrees)
    n = len(degrees)
    word = parse_word(args.word, n)
    g = GradedSequence.from_degrees(degrees)
    sign = kappa_word(word, g)
    payload = {
        "n": n,
        "degrees": list(degrees),
        "word": render_word(word),
        "sign": sign,
    }
    _emit(args, payload, [
        f"n = {n}",
        f"degrees = {degrees}",
        f"word = {render_word(word)}",
        f"sign = {sign:+d}",
    ])
    return EXIT_OK


def cmd_table(args) -> int:
    degrees = parse_degrees(args.degrees)
    n = len(degrees)
    if n > 6:
        raise ResourceError(f"table limited to n <= 6, got n={n}")
    f = GradedSequence.from_degrees(degrees)
    rows = [(p.rank(), p.one_line(), kappa(p, f)) for p in symmetric_group(n)]
    payload = {
        "n": n,
        "degrees": list(degrees),
        "signs": [{"rank": r, "perm": o, "sign": s} for r, o, s in rows],
    }
    lines = [f"# kappa(sigma, f) for degrees {degrees}"] + [
        f"{r}\t{o}\t{s:+d}" for r, o, s in rows
    ]
    _emit(args, payload, lines)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        cochain = build_cf(f)
        csv_path = out / "sign_table.csv"
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["sigma_rank", "rho_rank", "sign"])
            writer.writerows(cochain.records())
        from .plots import save_cochain_heatmap

        png_path = out / "sign_table.png"
        save_cochain_heatmap(
            cochain, png_path, title=f"c(sigma, rho) for degrees {degrees}"
        )
        print(f"wrote {csv_path} and {png_path}", file=sys.stderr)
    return EXIT_OK


def cmd_check_morphism(args) -> int:
    degrees = parse_degrees(args.degrees)
    morphism = is_morphism(degrees)
    constant = is_constant_one(degrees)
    payload = {
        "n": len(degrees),
        "degrees": list(degrees),
        "is_morphism": morphism,
        "is_constant_one": constant,
        "explanation": _parity_explanation(degrees),
    }
    _emit(args, payload, [
        f"degrees = {degrees}",
        f"parities: {_parity_explanation(degrees)}",
        f"group morphism: {morphism}",
        f"constant +1: {constant}",
    ])
    return EXIT_OK if morphism else EXIT_FALSE


def cmd_check_cocycle(args) -> int:
    degrees = parse_degrees(args.degrees)
    f = GradedSequence.from_degrees(degrees)
    auto = module_from_degrees(degrees)
    if args.u == "one":
        u = TRIVIAL
    elif args.u == "sgn":
        u = SIGNATURE
    else:
        u = auto
    if u is None:
        payload = {
            "n": len(degrees),
            "degrees": list(degrees),
            "u": None,
            "is_cocycle": False,
            "explanation": "no admissible module structure: generator values disagree",
        }
        _emit(args, payload, [
            f"degrees = {degrees}",
            "no admissible module structure: the generator values (-1)^(|f_i||f_{i+1}|) disagree",
            "2-cocycle: False",
        ])
        return EXIT_FALSE
    verdict = is_cocycle(f, u)
    payload = {
        "n": len(degrees),
        "degrees": list(degrees),
        "u": u.kind,
        "is_cocycle": verdict,
        "explanation": _parity_explanation(degrees),
    }
    _emit(args, payload, [
        f"degrees = {degrees}",
        f"module structure u = {u.kind}",
        f"parities: {_parity_explanation(degrees)}",
        f"2-cocycle: {verdict}",
    ])
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_example(args) -> int:
    rho = verify_mod.EXAMPLE_RHO
    f = GradedSequence.from_degrees((1,) * 5)
    g = act(rho, f)
    terms = verify_mod.sign_exponent_terms(rho)
    z_text = " + ".join(f"z{a}z{b}" for a, b in terms)
    payload = {
        "n": 5,
        "rho": rho.one_line(),
        "g": list(g.symbols),
        "terms": [list(t) for t in terms],
        "Z": z_text,
    }
    _emit(args, payload, [
        "n = 5",
        f"rho = {rho.one_line()}  cycles = {rho.cycle_string()}",
        f"g = rho(f) = ({', '.join(g.symbols)})",
        f"Z = {z_text}",
        "kappa(rho, f) = (-1)^Z",
    ])
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_mod.run_suite(
        n_max=args.n, degree_samples=args.trials, seed=args.seed
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        csv_path = out / "verify_report.csv"
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["check", "population", "passed", "failed", "first_counterexample"])
            for c in sorted(report.checks, key=lambda c: c.name):
                writer.writerow([c.name, c.population, c.passed, c.failed, c.first_counterexample or ""])
        from .plots import save_report_chart

        png_path = out / "verify_report.png"
        save_report_chart(report, png_path)
        print(f"wrote {csv_path} and {png_path}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koszul",
        description="Koszul signs of permutations acting on graded symbol sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    p = add("sign", cmd_sign, "sign of a permutation on a graded sequence")
    p.add_argument("--degrees", required=True, help="comma-separated integers, e.g. 1,1,0")
    p.add_argument("--perm", required=True, help="one-line [2,1,3] or cycles (1 2)")
    p.add_argument("--base-order", help="permutation applied to the base sequence first")

    p = add("sign-word", cmd_sign_word, "sign of a generator word")
    p.add_argument("--degrees", required=True)
    p.add_argument("--word", required=True, help="tokens s<k> and s<k>^-1, e.g. 's2 s1'")

    p = add("table", cmd_table, "signs of every permutation (n <= 6)")
    p.add_argument("--degrees", required=True)
    p.add_argument("--out", help="directory for sign_table.csv and sign_table.png")

    p = add("check-morphism", cmd_check_morphism, "is the sign map a group morphism?")
    p.add_argument("--degrees", required=True)

    p = add("check-cocycle", cmd_check_cocycle, "is the sign table a 2-cocycle?")
    p.add_argument("--degrees", required=True)
    p.add_argument("--u", choices=("auto", "one", "sgn"), default="auto",
                   help="module structure on {+1,-1}")

    add("example", cmd_example, "worked five-symbol example, term by term")

    p = add("verify", cmd_verify, "run the identity suite")
    p.add_argument("--n", type=int, default=5, help="largest n to sweep (2..6)")
    p.add_argument("--trials", type=int, default=2, help="degree samples per parity pattern")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for verify_report.csv and verify_report.png")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except KoszulError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 invalid
arguments, 4 degree or size cap exceeded.
"""
import argparse
import contextlib
import io
import json
import os
import sys
from fractions import Fraction
from itertools import product

from . import __version__
from .bases import convert, jacobi_trudi
from .config import degree_cap_set, set_oracle_cap, oracle_cap
from .errors import DegreeCapExceeded, ParseError, SizeCapExceeded, SymfError
from .expr import evaluate, parse_expr
from .lambda_ops import lambda_power, omega
from .partition import Partition, conjugate, partitions_of, z_factor
from .repsn import (
    ClassFunction, character_table, decompose, frobenius, inner_product,
    inverse_frobenius, irreducible_character, regular_character, sign_character,
    sign_twist, tensor_power_character, trivial_character,
)
from .schur_weyl import commutant, expected_commutant_dimension
from .symfunc import BASES, SymFunc, generator, multiply
from .truncation import PolyN, collect, expand, splitting_injectivity_report, truncate_var

OK, FAILED, PARSE, INVALID, CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- output -------------------------------------------------------------------------

def _coeff(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _aligned(rows):
    """Two-column layout: right-aligned coefficients, then labels."""
    if not rows:
        return "0"
    width = max(len(c) for c, _ in rows)
    return "\n".join(("%*s  %s" % (width, c, label)).rstrip() for c, label in rows)


def _show_symfunc(f):
    rows = []
    for lam, c in f.items():
        label = "%s[%s]" % (f.basis, ",".join(map(str, lam))) if lam else "1"
        rows.append((_coeff(c), label))
    return _aligned(rows)


def _show_poly(p):
    rows = []
    for e, c in p.items():
        mono = "*".join("x%d" % (i + 1) + ("^%d" % x if x != 1 else "") for i, x in enumerate(e) if x)
        rows.append((str(c), mono or "1"))
    return _aligned(rows)


def _show_rep(v):
    return _aligned([(str(m), str(lam)) for lam, m in v.items()])


def _dump(data):
    return json.dumps(data, separators=(",", ":"))


# -- input --------------------------------------------------------------------------

def _read_json_arg(text):
    """JSON from a literal, ``-`` (stdin) or a file path; None if ``text`` is none of these."""
    if text == "-":
        return _loads(sys.stdin.read())
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _loads(stripped)
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return _loads(fh.read())
    return None


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos, ["JSON"], "invalid JSON: %s" % exc.msg) from None


def _partition_arg(text):
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        return None
    body = t[1:-1].strip()
    try:
        parts = [int(x) for x in body.split(",")] if body else []
    except ValueError:
        raise ParseError(0, ["partition"], "bad partition %r" % text) from None
    return Partition(parts)


def _need(args, name, flag):
    value = getattr(args, name)
    if value is None:
        raise UsageError("%s is required here" % flag)
    return value


def _symfunc_input(args, text):
    data = _read_json_arg(text)
    if data is not None:
        try:
            return SymFunc.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(0, ["SymFunc JSON"], "bad SymFunc JSON: %s" % exc) from None
    return evaluate(parse_expr(text), basis=args.basis)


def _poly_input(args, text):
    data = _read_json_arg(text)
    if data is not None:
        try:
            return PolyN.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(0, ["PolyN JSON"], "bad PolyN JSON: %s" % exc) from None
    f = evaluate(parse_expr(text))
    return expand(f, _need(args, "nvars", "-N/--nvars"))


def _class_function_input(args, text):
    data = _read_json_arg(text)
    if data is not None:
        try:
            return ClassFunction.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(0, ["ClassFunction JSON"], "bad ClassFunction JSON: %s" % exc) from None
    lam = _partition_arg(text)
    if lam is not None:
        return irreducible_character(lam)
    named = {"triv": trivial_character, "sgn": sign_character, "regular": regular_character}
    if text in named:
        return named[text](_need(args, "degree", "-n/--degree"))
    if text == "tensor":
        return tensor_power_character(_need(args, "nvars", "-N/--nvars"),
                                      _need(args, "degree", "-n/--degree"))
    # anything else is read as a homogeneous symmetric function
    return inverse_frobenius(evaluate(parse_expr(text)), args.degree)


# -- subcommands --------------------------------------------------------------------

def cmd_eval(args):
    f = evaluate(parse_expr(args.expr), basis=args.basis)
    return OK, _dump(f.to_json()) if args.json else _show_symfunc(f)


def cmd_convert(args):
    f = _symfunc_input(args, args.input)
    if args.basis:
        f = convert(f, args.basis)
    return OK, _dump(f.to_json()) if args.json else _show_symfunc(f)


def cmd_expand(args):
    f = _symfunc_input(args, args.input)
    p = expand(f, _need(args, "nvars", "-N/--nvars"))
    return OK, _dump(p.to_json()) if args.json else _show_poly(p)


def cmd_truncate(args):
    p = _poly_input(args, args.input)
    q = truncate_var(p, args.to)
    return OK, _dump(q.to_json()) if args.json else _show_poly(q)


def cmd_collect(args):
    f = collect(_poly_input(args, args.input))
    if args.basis:
        f = convert(f, args.basis)
    return OK, _dump(f.to_json()) if args.json else _show_symfunc(f)


def cmd_chartable(args):
    n = _need(args, "degree", "-n/--degree")
    table = character_table(n)
    classes = list(partitions_of(n))
    if args.json:
        return OK, _dump({
            "n": n,
            "classes": [list(mu) for mu in classes],
            "characters": [
                {"partition": list(lam), "values": [_coeff(chi.values[mu]) for mu in classes]}
                for lam, chi in zip(classes, table)
            ],
        })
    header = [""] + [str(mu) for mu in classes]
    body = [[str(lam)] + [_coeff(chi.values[mu]) for mu in classes] for lam, chi in zip(classes, table)]
    grid = [header] + body
    widths = [max(len(r[i]) for r in grid) for i in range(len(header))]
    lines = []
    for r in grid:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return OK, "\n".join(lines)


def cmd_ch(args):
    chi = _class_function_input(args, args.input)
    f = convert(frobenius(chi), args.basis or "s")
    return OK, _dump(f.to_json()) if args.json else _show_symfunc(f)


def cmd_decompose(args):
    v = decompose(_class_function_input(args, args.input))
    return OK, _dump(v.to_json()) if args.json else _show_rep(v)


def cmd_omega(args):
    f = _symfunc_input(args, args.input)
    g = omega(f)
    if args.basis:
        g = convert(g, args.basis)
    return OK, _dump(g.to_json()) if args.json else _show_symfunc(g)


def _check_report(name, degree, checks):
    failures = [label for label, ok in checks if not ok]
    return {"check": name, "degree": degree, "checked": len(checks),
            "passed": not failures, "failures": failures}


def _show_report(data, verbose):
    lines = []
    for k, v in data.items():
        if isinstance(v, list) and not verbose and k in ("failures", "collisions", "wrong_vanishing", "basis"):
            v = len(v)
        if isinstance(v, bool):
            v = str(v).lower()
        lines.append("%s: %s" % (k, v if not isinstance(v, list) else json.dumps(v)))
    return "\n".join(lines)


def verify_schur_weyl(args):
    N = _need(args, "nvars", "-N/--nvars")
    n = _need(args, "degree", "-n/--degree")
    report = commutant(N, n)
    expected = expected_commutant_dimension(N, n)
    ok = (report.dimension == expected
          and report.permutations_contained
          and report.is_isomorphism == (N >= n))
    return ok, report.to_json(verbose=args.verbose)


def verify_splitting(args):
    d = _need(args, "degree", "-n/--degree")
    report = splitting_injectivity_report(d, args.nvars)
    return report.passed, report.to_json()


def verify_lambda_axioms(args):
    d = args.degree if args.degree is not None else 4
    checks = []
    h1 = generator("h", (1,))
    for n in range(d + 1):
        expect = generator("e", (n,) if n else ())
        checks.append(("lambda^%d(h[1]) = e[%d]" % (n, n), convert(lambda_power(n, h1), "e") == expect))
    inputs = [generator(b, lam) for b in ("s", "p") for k in range(1, 3) for lam in partitions_of(k)]
    for f, g in product(inputs, repeat=2):
        fp, gp = convert(f, "p"), convert(g, "p")
        for k in range(d + 1):
            lhs = lambda_power(k, fp + gp)
            rhs = SymFunc.zero("p")
            for i in range(k + 1):
                rhs = rhs + multiply(lambda_power(i, fp), lambda_power(k - i, gp))
            checks.append(("lambda^%d(%s + %s)" % (k, f, g), lhs == rhs))
    return _verdict(_check_report("lambda-axioms", d, checks))


def verify_frobenius(args):
    d = args.degree if args.degree is not None else 5
    checks = []
    for n in range(1, d + 1):
        for lam in partitions_of(n):
            checks.append(("ch(chi^%s) = s%s" % (lam, lam),
                           frobenius(irreducible_character(lam)) == jacobi_trudi(lam)))
        table = character_table(n)
        orthonormal = all(inner_product(a, b) == (1 if i == j else 0)
                          for i, a in enumerate(table) for j, b in enumerate(table))
        checks.append(("orthonormal rows, n=%d" % n, orthonormal))
        classes = list(partitions_of(n))
        columns = all(sum(chi.values[mu] * chi.values[nu] for chi in table)
                      == (z_factor(mu) if mu == nu else 0)
                      for mu in classes for nu in classes)
        checks.append(("orthogonal columns, n=%d" % n, columns))
        checks.append(("ch(triv_%d) = h[%d]" % (n, n), frobenius(trivial_character(n)) == generator("h", (n,))))
        checks.append(("ch(sgn_%d) = e[%d]" % (n, n), frobenius(sign_character(n)) == generator("e", (n,))))
    return _verdict(_check_report("frobenius", d, checks))


def verify_omega_duality(args):
    d = args.degree if args.degree is not None else 5
    checks = []
    for n in range(d + 1):
        for lam in partitions_of(n):
            for b in BASES:
                f = generator(b, lam)
                checks.append(("omega^2(%s) = %s" % (f, f), omega(omega(f)) == f))
            checks.append(("omega(e%s) = h%s" % (lam, lam),
                           omega(generator("e", lam)) == generator("h", lam)))
            checks.append(("omega(s%s) = s%s" % (lam, conjugate(lam)),
                           omega(generator("s", lam)) == generator("s", conjugate(lam))))
            if n:
                chi = irreducible_character(lam)
                checks.append(("ch(sgn * chi^%s) = omega(ch(chi^%s))" % (lam, lam),
                               frobenius(sign_twist(chi)) == omega(frobenius(chi))))
    return _verdict(_check_report("omega-duality", d, checks))


def _verdict(data):
    return data["passed"], data


VERIFIERS = {
    "schur-weyl": verify_schur_weyl,
    "splitting": verify_splitting,
    "lambda-axioms": verify_lambda_axioms,
    "frobenius": verify_frobenius,
    "omega-duality": verify_omega_duality,
}


def cmd_verify(args):
    ok, data = VERIFIERS[args.check](args)
    text = _dump(data) if args.json else _show_report(data, args.verbose)
    return (OK if ok else FAILED), text


# -- parser -------------------------------------------------------------------------

def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text) from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer, got %r" % text)
    return value


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("-N", "--nvars", type=_positive, help="number of variables / dimension of V")
    common.add_argument("-n", "--degree", type=_positive, help="degree")
    common.add_argument("--basis", choices=BASES, help="output basis")
    common.add_argument("--json", action="store_true", help="bit-exact JSON output")
    common.add_argument("--cap", type=_positive, help="degree cap (default 20, or SYMF_DEGREE_CAP)")
    common.add_argument("--size-cap", type=_positive, help="Schur-Weyl oracle cap on N^n (default 256)")
    common.add_argument("--verbose", action="store_true", help="include bases and failure lists")

    parser = _Parser(prog="symf", description="Exact symmetric functions and representation checks.")
    parser.add_argument("--version", action="version", version="symf " + __version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text, *positional):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for arg, arg_help in positional:
            p.add_argument(arg, help=arg_help)
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, "evaluate an expression", ("expr", "expression"))
    add("convert", cmd_convert, "rewrite in another basis", ("input", "expression or SymFunc JSON"))
    add("expand", cmd_expand, "expand in N variables", ("input", "expression or SymFunc JSON"))
    p = add("truncate", cmd_truncate, "set variables beyond the first M to zero",
            ("input", "PolyN JSON, or an expression with -N"))
    p.add_argument("--to", type=_positive, required=True, help="number of variables to keep")
    add("collect", cmd_collect, "rewrite a symmetric polynomial in the m basis",
        ("input", "PolyN JSON, or an expression with -N"))
    add("chartable", cmd_chartable, "character table of S_n")
    add("ch", cmd_ch, "Frobenius characteristic of a class function",
        ("input", "ClassFunction JSON, a partition like [2,1], triv, sgn, regular or tensor"))
    add("decompose", cmd_decompose, "multiplicities of irreducibles",
        ("input", "ClassFunction JSON, a partition, triv, sgn, regular, tensor, or an expression"))
    add("omega", cmd_omega, "apply the involution omega", ("input", "expression or SymFunc JSON"))
    p = add("verify", cmd_verify, "run a built-in check")
    p.add_argument("check", choices=sorted(VERIFIERS))
    return parser


def run(argv, out=None, err=None):
    """Run one invocation, writing to ``out``/``err``; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out):
            try:
                args = parser.parse_args(argv)
            except SystemExit as exc:  # --help, --version
                return exc.code or 0
        if args.size_cap is not None:
            old_size = oracle_cap()
            set_oracle_cap(args.size_cap)
        try:
            with degree_cap_set(args.cap) if args.cap is not None else contextlib.nullcontext():
                code, text = args.func(args)
        finally:
            if args.size_cap is not None:
                set_oracle_cap(old_size)
    except UsageError as exc:
        print("symf: error: %s" % exc, file=err)
        return INVALID
    except ParseError as exc:
        print("symf: parse error at offset %d: %s" % (exc.offset, exc.args[0].split(": ", 1)[-1]), file=err)
        return PARSE
    except (DegreeCapExceeded, SizeCapExceeded) as exc:
        print("symf: cap exceeded: %s" % exc, file=err)
        return CAP
    except SymfError as exc:
        print("symf: error: %s" % exc, file=err)
        return INVALID
    print(text, file=out)
    return code


def run_command(argv):
    """Run one invocation and return ``(exit_code, stdout_text, stderr_text)``."""
    out = io.StringIO()
    err = io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands compute h-vectors (symbolic engine or linear extension),
auxiliary vectors, flag vectors, lattices, basis expressions, link-recursion
values, pseudo h, index terms and their order, and run verification suites.
Exit codes: 0 success or all checks pass, 1 verification failure, 2 usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import checks, engine, flaglin, links, terms
from .lattice import FaceLattice, build
from .symbols import (
    AUX, FINAL, PAD, PAD_AUX, render_scalar, render_word, scalar_to_json,
)
from .terms import IndexTerm
from .words import GeneratorWord, WordParseError

FORMATS = ("text", "json", "csv")


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def parse_word(text: str) -> GeneratorWord:
    return GeneratorWord.parse(text)


_TERM_TOKEN = re.compile(
    r"(x|y|X|Y)(?:\^?(\d+))?|(Abar|Ā|Ā|A)|\{(\d+)\}|(.)")


def parse_term(text: str) -> IndexTerm:
    """Parse terms like ``xA{1}``, ``X^2Y^3{5}``, ``Abar{1}{1}``."""
    xexp = yexp = 0
    word = []
    aux = False
    final = False
    for m in _TERM_TOKEN.finditer(text.replace(" ", "")):
        var, exp, pad, local, junk = m.groups()
        if junk is not None:
            raise CliError(f"bad term syntax near {junk!r}")
        if var is not None:
            e = int(exp) if exp else 1
            if var in "xy":
                final = True
            else:
                aux = True
            if var in "xX":
                xexp += e
            else:
                yexp += e
        elif pad is not None:
            if pad == "A":
                final = True
                word.append(PAD)
            else:
                aux = True
                word.append(PAD_AUX)
        else:
            word.append(int(local))
    if aux and final:
        raise CliError("term mixes aux and final symbols")
    flavor = AUX if aux else FINAL
    if flavor == AUX:
        word = [PAD_AUX if s == PAD else s for s in word]
    try:
        return IndexTerm(xexp, yexp, tuple(word), flavor)
    except ValueError as e:
        raise CliError(str(e))


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _hvector_out(h, fmt):
    if fmt == "json":
        return json.dumps(h.to_json(), ensure_ascii=True)
    if fmt == "csv":
        lines = ["word,poly"]
        for w, p in h.sorted_terms():
            lines.append(f"{render_word(w, h.flavor)},"
                         + " ".join(render_scalar(c) for c in p.coeffs))
        return "\n".join(lines)
    return h.render()


def _load_flag_vector(arg: str):
    """A generator word, or a path to a lattice JSON file."""
    try:
        w = parse_word(arg)
        return w, build(w).flag_vector()
    except WordParseError:
        pass
    try:
        with open(arg) as fh:
            data = json.load(fh)
    except OSError as e:
        raise CliError(f"not a word and not a readable file: {e}")
    lat = FaceLattice.from_json(data)
    return None, lat.flag_vector()


def cmd_hvec(args):
    w = parse_word(args.word)
    if w.is_bipyramid_free():
        h = engine.extended_hvector(w)
        label = "engine"
    else:
        h = flaglin.linear_h(build(w).flag_vector())
        label = "linear extension"
    body = _hvector_out(h, args.format)
    if args.format == "text":
        body += f"   [{label}]"
    _emit(body, args.out)


def cmd_aux(args):
    w = parse_word(args.word)
    h = engine.aux_hvector(w)
    _emit(_hvector_out(h, args.format), args.out)


def cmd_flagvec(args):
    _, fv = _load_flag_vector(args.word)
    if args.format == "json":
        _emit(json.dumps(fv.to_json()), args.out)
    elif args.format == "csv":
        _emit(fv.to_csv().rstrip("\n"), args.out)
    else:
        lines = []
        for S in fv.subsets():
            name = "{" + ",".join(str(i) for i in sorted(S)) + "}"
            lines.append(f"f{name} = {fv[S]}")
        _emit("\n".join(lines), args.out)


def cmd_lattice(args):
    w = parse_word(args.word)
    _emit(build(w).dumps(), args.out)


def cmd_basis(args):
    ws = flaglin.ic_basis(args.n)
    if args.format == "json":
        _emit(json.dumps([w.render() for w in ws]), args.out)
    else:
        _emit("\n".join(w.render() for w in ws), args.out)


def cmd_express(args):
    _, fv = _load_flag_vector(args.word)
    if args.coeff:
        term = parse_term(args.coeff)
        h = flaglin.linear_h(fv)
        _emit(render_scalar(links.coefficient_of(h, term)), args.out)
        return
    basis = flaglin.ic_basis(fv.n)
    cs = flaglin.express_in_basis(fv)
    if args.format == "json":
        _emit(json.dumps([{"word": w.render(), "coeff": scalar_to_json(c)}
                          for w, c in zip(basis, cs)]), args.out)
    elif args.format == "csv":
        lines = ["word,coeff"] + [f"{w.render()},{render_scalar(c)}"
                                  for w, c in zip(basis, cs)]
        _emit("\n".join(lines), args.out)
    else:
        _emit("\n".join(f"{w.render()}: {render_scalar(c)}"
                        for w, c in zip(basis, cs)), args.out)


def cmd_links(args):
    w = parse_word(args.word)
    h = links.h_by_links(build(w), args.rule)
    _emit(_hvector_out(h, args.format), args.out)


def cmd_pseudo(args):
    w = parse_word(args.word)
    if w.is_bipyramid_free():
        p = engine.pseudo_h(w)
        label = "engine"
    else:
        p = flaglin.linear_pseudo_h(build(w).flag_vector())
        label = "linear extension"
    if args.format == "json":
        _emit(json.dumps([scalar_to_json(c) for c in p.coeffs]), args.out)
    else:
        _emit(f"{p.render()}   [{label}]", args.out)


def cmd_terms(args):
    ts = terms.enumerate_terms(args.n)
    if args.format == "json":
        _emit(json.dumps([t.render() for t in ts]), args.out)
    else:
        _emit("\n".join(t.render() for t in ts), args.out)


def cmd_order(args):
    t1 = parse_term(args.term1)
    t2 = parse_term(args.term2)
    fwd = terms.implies(t1, t2)
    bwd = terms.implies(t2, t1)
    if fwd and bwd:
        msg = f"{t1} = {t2} (same strata)"
    elif fwd:
        msg = f"{t1} => {t2}"
    elif bwd:
        msg = f"{t2} => {t1}"
    elif terms.broadly_similar(t1, t2):
        msg = f"{t1} and {t2} are broadly similar but incomparable"
    else:
        msg = f"{t1} and {t2} are not broadly similar"
    _emit(msg, args.out)


def cmd_verify(args):
    try:
        results = checks.run_suite(args.suite, args.max_dim)
    except KeyError as e:
        raise CliError(str(e))
    lines = [r.line() for r in results]
    failures = [r for r in results if not r.passed]
    summary = f"{len(results) - len(failures)}/{len(results)} checks passed"
    _emit("\n".join(lines + [summary]), args.out)
    if failures:
        first = failures[0]
        print(f"first failure: {first.name}"
              + (f" [{first.detail}]" if first.detail else ""),
              file=sys.stderr)
        return 1
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hvcalc",
        description="exact h-vector calculus for cone/cylinder/bipyramid polytopes")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("hvec", help="extended h-vector of a word")
    p.add_argument("word")
    common(p)
    p.set_defaults(fn=cmd_hvec)

    p = sub.add_parser("aux", help="auxiliary vector of a bipyramid-free word")
    p.add_argument("word")
    common(p)
    p.set_defaults(fn=cmd_aux)

    p = sub.add_parser("flagvec", help="flag vector of a word or lattice file")
    p.add_argument("word")
    common(p)
    p.set_defaults(fn=cmd_flagvec)

    p = sub.add_parser("lattice", help="face lattice of a word, as JSON")
    p.add_argument("word")
    common(p)
    p.set_defaults(fn=cmd_lattice)

    p = sub.add_parser("basis", help="basis words of a dimension")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("express",
                       help="basis coefficients of a word or lattice file")
    p.add_argument("word")
    p.add_argument("--coeff", default=None,
                   help="print one h coefficient, e.g. 'xA{1}'")
    common(p)
    p.set_defaults(fn=cmd_express)

    p = sub.add_parser("links", help="h-vector via the link recursion")
    p.add_argument("word")
    p.add_argument("--rule", choices=links.RULES, default=links.CONJUGATION)
    common(p)
    p.set_defaults(fn=cmd_links)

    p = sub.add_parser("pseudo", help="pseudo h-vector of a word")
    p.add_argument("word")
    common(p)
    p.set_defaults(fn=cmd_pseudo)

    p = sub.add_parser("terms", help="index terms of a degree")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(fn=cmd_terms)

    p = sub.add_parser("order", help="compare two index terms")
    p.add_argument("term1")
    p.add_argument("term2")
    common(p)
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(checks.SUITES))
    p.add_argument("--max-dim", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        rc = args.fn(args)
    except WordParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())

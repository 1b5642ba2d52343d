"""Named verification suites shared by the CLI and the acceptance tests.

Each check returns CheckResult records; a suite is a list of checks.  All
expected values here are either golden table rows, hand-derived small
cases, or cross-route comparisons (engine vs lattice vs link recursion).
Randomized checks use a fixed seed so runs are byte-reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import engine, flaglin, links, terms
from .lattice import build
from .symbols import AUX, FINAL, PAD, PAD_AUX, BiGradedPoly, HVector, word_degree
from .terms import IndexTerm
from .words import GeneratorWord, all_words, words_up_to


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f"  [{self.detail}]" if self.detail and not self.passed else ""
        return f"{status}  {self.name}{tail}"


def _res(name, passed, detail=""):
    return CheckResult(name, bool(passed), detail)


# -- golden tables ------------------------------------------------------------

GOLDEN_TABLES = {
    "": "(1)",
    "C": "(11)",
    "I": "(11)",
    "CC": "(111)",
    "IC": "(121)",
    "CCC": "(1111)",
    "ICC": "(1221)",
    "IIC": "(1331)",
    "CIC": "(1221) + (1){1}",
    "CCCC": "(11111)",
    "ICCC": "(12221)",
    "IICC": "(13431)",
    "IIIC": "(14641)",
    "CICC": "(12221) + (1)A{1}",
    "CIIC": "(13331) + (2)A{1}",
    "ICIC": "(13431) + (11){1} + (1)A{1}",
    "CCIC": "(12221) + (11){1} + (1)A{1}",
    "CCCCC": "(111111)",
    "CCCIC": "(122221) + (111){1} + (11)A{1} + (1)AA{1}",
    "CCICC": "(122221) + (11)A{1} + (1)AA{1}",
    "CICCC": "(122221) + (1)AA{1}",
    "CICIC": "(134431) + (111){1} + (11)A{1} + (2)AA{1} + (1){2}",
    "ICCCC": "(122221)",
    "ICCIC": "(134431) + (121){1} + (12)A{1} + (1)AA{1}",
    "ICICC": "(134431) + (11)A{1} + (1)AA{1}",
}


def check_tables():
    out = []
    for ops, want in GOLDEN_TABLES.items():
        got = engine.extended_hvector(GeneratorWord(ops)).render()
        out.append(_res(f"table h({ops or ''}.) = {want}", got == want,
                        f"got {got}"))
    return out


def check_aux_checkpoint():
    got = engine.aux_hvector(GeneratorWord("CCIC")).render()
    want = "[12221] + [11]{1}"
    return [_res("aux h~(CCIC.) = [12221] + [11]{1}", got == want,
                 f"got {got}")]


# -- Bayer counterexample and pseudo h ---------------------------------------

XA1 = IndexTerm(1, 0, (PAD, 1), FINAL)


def check_bayer():
    lat = build(GeneratorWord("BICCC"))
    via_linear = flaglin.linear_h(lat.flag_vector())
    c1 = links.coefficient_of(via_linear, XA1)
    via_links = links.h_by_links(lat)
    c2 = links.coefficient_of(via_links, XA1)
    return [
        _res("linear h(BICCC.) has coefficient -2 on xA{1}", c1 == -2,
             f"got {c1}"),
        _res("link-recursion h(BICCC.) has coefficient -2 on xA{1}",
             c2 == -2, f"got {c2}"),
        _res("both Bayer routes agree term by term", via_linear == via_links),
    ]


def check_pseudo_octahedron():
    oct_fv = build(GeneratorWord("BIC")).flag_vector()
    got = flaglin.linear_pseudo_h(oct_fv)
    want = BiGradedPoly((1, -1, 5, 1))
    return [_res("pseudo h extrapolated to the octahedron = (1,-1,5,1)",
                 got == want, f"got {got.render()}")]


# -- Fibonacci ranks and counts -----------------------------------------------

def check_fibonacci_ranks(max_ic=7, max_b=6):
    out = []
    for n in range(1, max_ic + 1):
        vecs = [flaglin.word_flag_vector(w) for w in all_words(n, "IC")]
        rank = flaglin.span_rank(vecs)
        want = terms.fib(n + 1)
        out.append(_res(f"rank of {{I,C}} flag vectors, dim {n} = F_{n + 1} = {want}",
                        rank == want, f"got {rank}"))
    for n in range(1, max_b + 1):
        vecs = [flaglin.word_flag_vector(w) for w in all_words(n, "ICB")]
        rank = flaglin.span_rank(vecs)
        want = terms.fib(n + 1)
        out.append(_res(f"bipyramids do not enlarge the span, dim {n}",
                        rank == want, f"got {rank}"))
    return out


def check_fibonacci_terms(max_n=12):
    out = []
    ok_counts = ok_le = ok_gt = ok_eq = True
    for n in range(max_n + 1):
        ts = terms.enumerate_terms(n)
        ok_counts &= len(ts) == terms.fib(n + 2)
        ok_le &= sum(1 for t in ts if t.xexp <= t.yexp) == terms.fib(n + 1)
        ok_gt &= sum(1 for t in ts if t.xexp > t.yexp) == terms.fib(n)
        eq_want = terms.fib(n - 1) if n >= 1 else 1
        ok_eq &= sum(1 for t in ts if t.xexp == t.yexp) == eq_want
    out.append(_res(f"term count of degree n is F_(n+2), n <= {max_n}", ok_counts))
    out.append(_res("terms with i<=j number F_(n+1)", ok_le))
    out.append(_res("terms with i>j number F_n", ok_gt))
    out.append(_res("terms with i=j number F_(n-1)", ok_eq))
    ok_words = all(
        len(terms.words_up_to_degree(n)) == terms.fib(n)
        for n in range(1, max_n + 1))
    out.append(_res(f"words of degree <= n number F_n, n <= {max_n}", ok_words))
    ok_basis = all(
        len(flaglin.ic_basis(n)) == terms.fib(n + 1) for n in range(8))
    out.append(_res("basis words number F_(n+1), n <= 7", ok_basis))
    return out


# -- the IC equation ----------------------------------------------------------

def _random_aux_vector(rng, degree):
    words = terms.words_up_to_degree(degree, AUX)
    chosen = rng.sample(words, k=min(len(words), rng.randint(1, 3)))
    tm = {}
    for w in chosen:
        m = degree - word_degree(w)
        tm[w] = BiGradedPoly([rng.randint(-9, 9) for _ in range(m + 1)])
    return HVector(degree, AUX, tm)


def check_ic_equation_suite(n_random=100, max_random_degree=6, engine_dim=5,
                            flag_base_dim=3, seed=20260809):
    out = []
    rng = random.Random(seed)
    ok = True
    bad = ""
    for i in range(n_random):
        h = _random_aux_vector(rng, rng.randint(0, max_random_degree))
        if not engine.check_ic_equation(h):
            ok = False
            bad = h.render()
            break
    out.append(_res(f"operator IC equation on {n_random} random aux vectors",
                    ok, f"counterexample {bad}"))
    ok = True
    bad = ""
    for w in words_up_to(engine_dim, "IC"):
        if not engine.check_ic_equation(engine.aux_hvector(w)):
            ok = False
            bad = str(w)
            break
    out.append(_res(f"operator IC equation on engine outputs, dim <= {engine_dim}",
                    ok, f"counterexample {bad}"))
    ok = True
    bad = ""
    for w in words_up_to(flag_base_dim, "ICB"):
        lhs = (flaglin.word_flag_vector(GeneratorWord("ICI" + w.ops))
               + flaglin.word_flag_vector(GeneratorWord("CCI" + w.ops)).scale(-1))
        rhs = (flaglin.word_flag_vector(GeneratorWord("IIC" + w.ops))
               + flaglin.word_flag_vector(GeneratorWord("ICC" + w.ops)).scale(-1))
        if lhs != rhs:
            ok = False
            bad = str(w)
            break
    out.append(_res(
        f"flag-level (I-C)CI = I(I-C)C on base words, dim <= {flag_base_dim}",
        ok, f"counterexample {bad}"))
    return out


# -- triple agreement ---------------------------------------------------------

def _agreement_words(max_dim=4, basis_dim=5):
    ws = list(words_up_to(max_dim, "IC"))
    ws += flaglin.ic_basis(basis_dim)
    return ws


def check_triple_agreement(max_dim=4, basis_dim=5):
    out = []
    ok = True
    bad = ""
    for w in _agreement_words(max_dim, basis_dim):
        lat = build(w)
        a = engine.extended_hvector(w)
        b = links.h_by_links(lat, links.CONJUGATION)
        c = flaglin.linear_h(lat.flag_vector())
        if not (a == b == c):
            ok = False
            bad = str(w)
            break
    out.append(_res(
        f"engine = link recursion = linear extension, dim <= {max_dim} "
        f"plus the dim-{basis_dim} basis", ok, f"counterexample {bad}"))

    direct_agrees = True
    for w in _agreement_words(max_dim, basis_dim):
        lat = build(w)
        if links.h_by_links(lat, links.DIRECT) != engine.extended_hvector(w):
            direct_agrees = False
            break
    out.append(_res(
        "exactly one cone-rule reading passes (conjugation yes, direct no)",
        ok and not direct_agrees,
        "direct rule unexpectedly agrees" if direct_agrees else ""))
    return out


# -- lattice oracle suites ------------------------------------------------------

def _oracle_words(max_dim):
    return list(words_up_to(max_dim, "ICB"))


def check_oracles(max_dim=6, closure_dim=6, cone_base_dim=5):
    out = []
    lats = [(w, build(w)) for w in _oracle_words(max_dim)]

    bad = [str(w) for w, lat in lats if not lat.euler_ok()]
    out.append(_res(f"Euler relation on all lattices, dim <= {max_dim}",
                    not bad, f"fails for {bad[:3]}"))

    bad = [str(w) for w, lat in lats if lat.n <= closure_dim
           and not lat.closed_under_intersection()]
    out.append(_res(f"intersection closure on all lattices, dim <= {closure_dim}",
                    not bad, f"fails for {bad[:3]}"))

    bad = []
    for w, lat in lats:
        if lat.n == 0 or not _is_simple_word(w.ops):
            continue
        degs = set(lat.vertex_edge_degrees().values())
        if degs != {lat.n}:
            bad.append(str(w))
    out.append(_res(
        f"simple words have n edges at every vertex, dim <= {max_dim}",
        not bad, f"fails for {bad[:3]}"))

    bad = []
    for w, lat in lats:
        if not _is_simple_word(w.ops) or lat.n == 0:
            continue
        h = engine.mpih_part(engine.extended_hvector(w))
        if engine.extended_hvector(w).terms.keys() - {()}:
            bad.append(str(w) + " (non-empty word part)")
            continue
        if h != engine.classical_h_simple(lat.face_counts()):
            bad.append(str(w))
    out.append(_res(
        f"classical h of the face vector = mpih part on simple words, dim <= {max_dim}",
        not bad, f"fails for {bad[:3]}"))

    bad = []
    for w, lat in lats:
        if lat.n > cone_base_dim:
            continue
        got = flaglin.cone_flag_vector(lat.flag_vector())
        want = lat.pyramid().flag_vector()
        if got != want:
            bad.append(str(w))
    out.append(_res(
        f"cone transform matches the lattice pyramid, base dim <= {cone_base_dim}",
        not bad, f"fails for {bad[:3]}"))
    return out


def _is_simple_word(ops: str) -> bool:
    # simple polytopes among the generator words are exactly I^a C^b
    i = 0
    while i < len(ops) and ops[i] == "I":
        i += 1
    return all(ch == "C" for ch in ops[i:])


# -- properties: palindromy, unimodality, strata, downsets ---------------------

def check_palindromy(max_dim=8):
    bad = [str(w) for w in words_up_to(max_dim, "IC")
           if not engine.is_palindromic(engine.aux_hvector(w))]
    return [_res(f"auxiliary vectors are palindromic, dim <= {max_dim}",
                 not bad, f"fails for {bad[:3]}")]


def check_unimodality(max_dim=8):
    bad = []
    for w in words_up_to(max_dim, "IC"):
        cs = engine.mpih_part(engine.extended_hvector(w)).coeffs
        half = len(cs) // 2
        if any(cs[i] > cs[i + 1] for i in range(half)):
            bad.append(str(w))
    return [_res(f"mpih parts are unimodal up to halfway, dim <= {max_dim}",
                 not bad, f"fails for {bad[:3]}")]


STRATA_CASES = [
    (IndexTerm(2, 3, (PAD_AUX,) * 4 + (5,) + (PAD_AUX,) * 2 + (6,), AUX),
     (5, 20, 35)),
    (IndexTerm(11, 0, (5, 6), AUX), (11, 22, 35)),
    (IndexTerm(1, 0, (1, 1), AUX), (1, 4, 7)),
    (IndexTerm(0, 0, (PAD_AUX, 1, 1), AUX), (0, 4, 7)),
    (IndexTerm(0, 0, (1, PAD_AUX, 1), AUX), (0, 3, 7)),
]


def check_strata(max_downset_degree=9):
    out = []
    for t, want in STRATA_CASES:
        got = terms.strata_vector(t)
        out.append(_res(f"strata of {t} = {want}", got == want, f"got {got}"))
    ok = True
    bad = ""
    for n in range(max_downset_degree + 1):
        universe = terms.enumerate_terms(n, AUX)
        for t in universe:
            via_moves = set(terms.downset(t))
            via_order = {u for u in universe if terms.implies(t, u)}
            if via_moves != via_order:
                ok = False
                bad = str(t)
                break
        if not ok:
            break
    out.append(_res(
        f"downset by moves = downset by implication, degree <= {max_downset_degree}",
        ok, f"counterexample {bad}"))
    return out


# -- suite registry -------------------------------------------------------------

SUITES = {
    "tables": lambda max_dim: check_tables() + check_aux_checkpoint(),
    "ic-equation": lambda max_dim: check_ic_equation_suite(),
    "palindromy": lambda max_dim: check_palindromy(min(max_dim, 8) if max_dim else 8),
    "fibonacci": lambda max_dim: check_fibonacci_terms(max_dim or 12),
    "gds-rank": lambda max_dim: check_fibonacci_ranks(
        min(max_dim or 7, 7), min(max_dim or 6, 6)),
    "oracle": lambda max_dim: check_oracles(min(max_dim or 6, 6)),
    "link-agreement": lambda max_dim: (check_triple_agreement()
                                       + check_bayer()
                                       + check_pseudo_octahedron()),
    "unimodality": lambda max_dim: check_unimodality(min(max_dim, 8) if max_dim else 8),
}
SUITES["all"] = lambda max_dim: [r for name in
                                 ("tables", "ic-equation", "palindromy",
                                  "fibonacci", "gds-rank", "oracle",
                                  "link-agreement", "unimodality")
                                 for r in SUITES[name](max_dim)]


def run_suite(name: str, max_dim=None):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](max_dim)

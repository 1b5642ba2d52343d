"""Exact symbol algebra: bigraded polynomials, padded words, formal h-vectors.

The basic value is a formal sum of terms ``P * W`` where ``P`` is a
homogeneous polynomial in two commuting degree-one variables and ``W`` is a
word over a padding symbol of degree one and local symbols ``{k}`` of degree
2k+1.  Two flavors exist: the auxiliary flavor (variables X, Y and sliding
pad Ā) and the final flavor (variables x, y and frozen pad A).  Every word
is implicitly terminated, and a pad sitting against the terminator
annihilates the whole term; that is the only normalization rule applied on
construction.

The pad elimination system that converts auxiliary words to final words is

    Ā{k} -> A{k} + {k}Ā        (stay put, frozen, or slide right)
    ĀA   -> AA                 (a frozen pad blocks sliding)
    Ā|   -> 0                  (dies at the terminator)

It is confluent at the scales used here; ``rewrite_pads`` applies it with a
rightmost-first strategy.

All coefficients are exact: Python ints or ``fractions.Fraction``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

PAD = "A"        # final-flavor padding symbol
PAD_AUX = "Ā"  # aux-flavor padding symbol, rendered as a barred A

AUX = "aux"
FINAL = "final"

_PADS = (PAD, PAD_AUX)


def _exact(c):
    """Collapse integral Fractions to int; reject floats."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"exact coefficient required, got {type(c).__name__}")
    return c


def sym_degree(s) -> int:
    if s in _PADS:
        return 1
    if isinstance(s, int) and s >= 1:
        return 2 * s + 1
    raise ValueError(f"bad symbol {s!r}")


def word_degree(word) -> int:
    return sum(sym_degree(s) for s in word)


def word_locals(word) -> tuple:
    """The subsequence of local symbols, pads erased."""
    return tuple(s for s in word if s not in _PADS)


def pad_positions(word) -> tuple:
    return tuple(i for i, s in enumerate(word) if s in _PADS)


def word_sort_key(word):
    # degree first, then local subsequence, then pad placement; this
    # reproduces the customary display order (empty word leads).
    return (word_degree(word), word_locals(word), pad_positions(word))


def word_ok_for_flavor(word, flavor) -> bool:
    bad = PAD_AUX if flavor == FINAL else PAD
    return bad not in word


def render_word(word, flavor=FINAL) -> str:
    pad = PAD if flavor == FINAL else "Ā"
    out = []
    for s in word:
        out.append(pad if s in _PADS else "{%d}" % s)
    return "".join(out)


def word_to_json(word):
    return [("A" if s == PAD else "Abar") if s in _PADS else {"local": s}
            for s in word]


def word_from_json(items) -> tuple:
    out = []
    for it in items:
        if it == "A":
            out.append(PAD)
        elif it == "Abar":
            out.append(PAD_AUX)
        elif isinstance(it, dict) and "local" in it:
            out.append(int(it["local"]))
        else:
            raise ValueError(f"bad word entry {it!r}")
    return tuple(out)


class BiGradedPoly:
    """Homogeneous polynomial in two commuting variables, as a coefficient list.

    ``coeffs[t]`` is the coefficient of (first variable)^(m-t) (second
    variable)^t where m = len(coeffs)-1.  Degree is structural: the zero
    polynomial of degree m keeps its m+1 zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(_exact(c) for c in coeffs)
        if not cs:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("BiGradedPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, degree: int) -> "BiGradedPoly":
        return cls((0,) * (degree + 1))

    @classmethod
    def one(cls) -> "BiGradedPoly":
        return cls((1,))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BiGradedPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch in polynomial addition")
        return BiGradedPoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "BiGradedPoly":
        return BiGradedPoly(c * a for a in self.coeffs)

    def mul_linear(self) -> "BiGradedPoly":
        """Multiply by the sum of the two variables; degree goes up by one."""
        cs = self.coeffs
        mid = [cs[i] + cs[i + 1] for i in range(len(cs) - 1)]
        return BiGradedPoly((cs[0], *mid, cs[-1]))

    def times_first(self) -> "BiGradedPoly":
        return BiGradedPoly(self.coeffs + (0,))

    def times_second(self) -> "BiGradedPoly":
        return BiGradedPoly((0,) + self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def coefficient(self, second_exp: int):
        """Coefficient of (first)^(m-j) (second)^j."""
        return self.coeffs[second_exp]

    def render(self, aux=False) -> str:
        lo, hi = ("[", "]") if aux else ("(", ")")
        if all(isinstance(c, int) and 0 <= c <= 9 for c in self.coeffs):
            body = "".join(str(c) for c in self.coeffs)
        else:
            body = ",".join(render_scalar(c) for c in self.coeffs)
        return lo + body + hi

    def __repr__(self):
        return f"BiGradedPoly({list(self.coeffs)!r})"


def render_scalar(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def scalar_to_json(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return int(c)


@lru_cache(maxsize=None)
def rewrite_pads(word) -> tuple:
    """Normal form of a word under the pad elimination rules.

    Returns ((word, multiplicity), ...) of surviving aux-pad-free words.
    Rightmost sliding pad first; positions of frozen pads are preserved.
    """
    for i in range(len(word) - 1, -1, -1):
        if word[i] == PAD_AUX:
            break
    else:
        # no sliding pads left; a trailing frozen pad still dies
        if word and word[-1] == PAD:
            return ()
        return ((word, 1),)
    if i == len(word) - 1:
        return ()
    nxt = word[i + 1]
    if nxt == PAD:
        return rewrite_pads(word[:i] + (PAD,) + word[i + 1:])
    # nxt is a local symbol: freeze in place or slide over it
    out = Counter()
    for w, m in rewrite_pads(word[:i] + (PAD,) + word[i + 1:]):
        out[w] += m
    for w, m in rewrite_pads(word[:i] + (nxt, PAD_AUX) + word[i + 2:]):
        out[w] += m
    return tuple(sorted(out.items(), key=lambda kv: word_sort_key(kv[0])))


def push_pads(m: int, word) -> dict:
    """Normal form of pad^m * word as a multiset of final words.

    ``word`` must use final-flavor symbols only.
    """
    if m < 0:
        raise ValueError("pad count must be nonnegative")
    if not word_ok_for_flavor(word, FINAL):
        raise ValueError("push_pads takes a final-flavor word")
    return dict(rewrite_pads((PAD_AUX,) * m + tuple(word)))


class HVector:
    """Formal sum of terms word -> homogeneous polynomial, of fixed degree.

    Invariants: deg(poly) + deg(word) equals the vector degree for every
    term, no term maps to the zero polynomial, no word ends in a pad, and
    every word matches the vector's flavor.  Terms violating the trailing
    pad rule are annihilated on construction (the terminator at work);
    zero polynomials are dropped.
    """

    __slots__ = ("degree", "flavor", "terms")

    def __init__(self, degree: int, flavor: str, terms=None):
        if flavor not in (AUX, FINAL):
            raise ValueError(f"bad flavor {flavor!r}")
        clean = {}
        for word, poly in (terms or {}).items():
            word = tuple(word)
            if word and word[-1] in _PADS:
                continue  # trailing pad meets the terminator
            if poly.is_zero():
                continue
            if not word_ok_for_flavor(word, flavor):
                raise ValueError(f"word {word!r} has wrong flavor for {flavor}")
            if poly.degree + word_degree(word) != degree:
                raise ValueError(
                    f"term {word!r} breaks degree {degree} homogeneity")
            clean[word] = poly
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("HVector is immutable")

    @classmethod
    def zero(cls, degree: int, flavor: str) -> "HVector":
        return cls(degree, flavor, {})

    @classmethod
    def unit(cls, flavor: str) -> "HVector":
        """The degree-zero vector with constant polynomial 1 on the empty word."""
        return cls(0, flavor, {(): BiGradedPoly.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, HVector) and self.degree == other.degree
                and self.flavor == other.flavor and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, self.flavor, frozenset(self.terms.items())))

    def _merge(self, other, sign):
        if self.degree != other.degree or self.flavor != other.flavor:
            raise ValueError("degree/flavor mismatch in h-vector addition")
        terms = dict(self.terms)
        for word, poly in other.terms.items():
            p = poly if sign > 0 else -poly
            if word in terms:
                terms[word] = terms[word] + p
            else:
                terms[word] = p
        return HVector(self.degree, self.flavor, terms)

    def __add__(self, other):
        return self._merge(other, +1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def scale(self, c) -> "HVector":
        return HVector(self.degree, self.flavor,
                       {w: p.scale(c) for w, p in self.terms.items()})

    def times_second(self) -> "HVector":
        """Multiply every polynomial by the second variable (y or Y)."""
        return HVector(self.degree + 1, self.flavor,
                       {w: p.times_second() for w, p in self.terms.items()})

    def mpih(self) -> BiGradedPoly:
        """The empty-word polynomial; structurally zero when absent."""
        return self.terms.get((), BiGradedPoly.zero(self.degree))

    def coefficient(self, xexp: int, yexp: int, word):
        """Coefficient of (first)^xexp (second)^yexp word, or 0."""
        word = tuple(word)
        poly = self.terms.get(word)
        if poly is None:
            return 0
        if xexp + yexp != poly.degree:
            return 0
        return poly.coefficient(yexp)

    def is_palindromic(self) -> bool:
        return all(p.is_palindromic() for p in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: word_sort_key(kv[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        aux = self.flavor == AUX
        parts = []
        for word, poly in self.sorted_terms():
            parts.append(poly.render(aux=aux) + render_word(word, self.flavor))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "flavor": self.flavor,
            "terms": [
                {"word": word_to_json(w),
                 "poly": [scalar_to_json(c) for c in p.coeffs]}
                for w, p in self.sorted_terms()
            ],
        }

    def __repr__(self):
        return f"<HVector {self.flavor} deg {self.degree}: {self.render()}>"

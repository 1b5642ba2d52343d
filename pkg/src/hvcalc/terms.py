"""Index terms, their strata vectors, and the implication partial order.

An index term is a monomial in the two commuting variables times a word in
pads and local symbols, the whole thing homogeneous.  Broadly similar terms
(same degree, same second-variable exponent, same local subsequence) are
compared through their stratification dimension vectors: scanning the word
from the right, each local symbol eats its own degree plus the pads packed
against it, and the running values are the strata dimensions.  A term
implies another exactly when the strata dominate componentwise.

The same order is generated by two moves on aux terms: trade a first
variable for a pad at the front of the word, and slide a pad rightwards
over a local symbol (off the end of the word means annihilation).  The
downset computed by the moves and the one computed from strata vectors are
cross-checked in the tests, and the family is Fibonacci-counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .symbols import (
    AUX, FINAL, PAD, PAD_AUX, render_word, sym_degree, word_degree,
    word_locals, word_ok_for_flavor, word_sort_key,
)


@dataclass(frozen=True)
class IndexTerm:
    xexp: int
    yexp: int
    word: tuple = ()
    flavor: str = FINAL

    def __post_init__(self):
        if self.xexp < 0 or self.yexp < 0:
            raise ValueError("negative exponent")
        if not word_ok_for_flavor(self.word, self.flavor):
            raise ValueError(f"word {self.word!r} clashes with {self.flavor}")
        if self.word and self.word[-1] in (PAD, PAD_AUX):
            raise ValueError("index words do not end in a pad")

    @property
    def degree(self) -> int:
        return self.xexp + self.yexp + word_degree(self.word)

    @property
    def order(self) -> int:
        return len(word_locals(self.word))

    def render(self) -> str:
        xs, ys = ("x", "y") if self.flavor == FINAL else ("X", "Y")
        out = []
        for sym, e in ((xs, self.xexp), (ys, self.yexp)):
            if e == 1:
                out.append(sym)
            elif e > 1:
                out.append(f"{sym}^{e}")
        out.append(render_word(self.word, self.flavor))
        return "".join(out) or "1"

    def __str__(self):
        return self.render()


def term_degree(t: IndexTerm) -> int:
    return t.degree


def strata_vector(t: IndexTerm) -> tuple:
    """Ascending stratum dimensions, ending at the term degree."""
    n = t.degree
    out = [n]
    value = n
    i = len(t.word) - 1
    while i >= 0:
        k = t.word[i]
        assert k not in (PAD, PAD_AUX)  # words cannot end in a pad
        pads = 0
        while i - 1 - pads >= 0 and t.word[i - 1 - pads] in (PAD, PAD_AUX):
            pads += 1
        value -= sym_degree(k) + pads
        out.append(value)
        i -= 1 + pads
    return tuple(reversed(out))


def broadly_similar(a: IndexTerm, b: IndexTerm) -> bool:
    """Equal after deleting the first variable and the pads, and of equal
    degree."""
    return (a.degree == b.degree and a.yexp == b.yexp
            and word_locals(a.word) == word_locals(b.word))


def implies(a: IndexTerm, b: IndexTerm) -> bool:
    if not broadly_similar(a, b):
        return False
    return all(x >= y for x, y in zip(strata_vector(a), strata_vector(b)))


def downset(t: IndexTerm) -> list:
    """Closure of an aux term under the two weakening moves."""
    if t.flavor != AUX:
        raise ValueError("the move system is defined on aux terms")
    seen = set()
    frontier = [t]
    while frontier:
        cur = frontier.pop()
        if cur in seen:
            continue
        seen.add(cur)
        if cur.xexp > 0 and cur.word:
            # on an empty word the traded pad would sit at the terminator
            frontier.append(IndexTerm(cur.xexp - 1, cur.yexp,
                                      (PAD_AUX,) + cur.word, AUX))
        w = cur.word
        for i, s in enumerate(w):
            if s != PAD_AUX or i + 1 >= len(w):
                continue
            if w[i + 1] in (PAD, PAD_AUX):
                continue
            slid = w[:i] + (w[i + 1], PAD_AUX) + w[i + 2:]
            if slid[-1] == PAD_AUX:
                continue  # slid off the end: the term dies
            frontier.append(IndexTerm(cur.xexp, cur.yexp, slid, AUX))
    return sorted(seen, key=_term_sort_key)


def _term_sort_key(t: IndexTerm):
    return (word_sort_key(t.word), t.yexp)


@lru_cache(maxsize=None)
def words_of_degree(d: int, flavor: str = FINAL) -> tuple:
    """All words of exact degree d not ending in a pad."""
    pad = PAD if flavor == FINAL else PAD_AUX
    if d == 0:
        return ((),)
    out = []
    if d >= 1:
        for w in words_of_degree(d - 1, flavor):
            if w:
                out.append((pad,) + w)
    k = 1
    while 2 * k + 1 <= d:
        for w in words_of_degree(d - 2 * k - 1, flavor):
            out.append((k,) + w)
        k += 1
    return tuple(sorted(out, key=word_sort_key))


def words_up_to_degree(n: int, flavor: str = FINAL) -> list:
    out = []
    for d in range(n + 1):
        out.extend(words_of_degree(d, flavor))
    return sorted(out, key=word_sort_key)


def enumerate_terms(n: int, flavor: str = FINAL) -> list:
    """Every index term of degree n, in display order."""
    out = []
    for w in words_up_to_degree(n, flavor):
        rest = n - word_degree(w)
        for j in range(rest + 1):
            out.append(IndexTerm(rest - j, j, w, flavor))
    return sorted(out, key=_term_sort_key)


def fib(k: int) -> int:
    """Fibonacci numbers with fib(1) = fib(2) = 1."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a

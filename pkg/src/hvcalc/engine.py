"""The symbolic h-vector engine.

Two operators act on auxiliary vectors.  The cylinder operator multiplies
every polynomial by the linear sum of the variables.  The cone operator acts
term by term in three parts: duplicate the coefficient just before or at the
middle, record each coprimitive count as a new local symbol padded up to
homogeneity, and subtract a full-pad correction term:

    [a_0 .. a_m] W  ->  dup_{m//2}[a] W
                        + sum_{k=1..m//2} [a_k - a_{k-1}] pad^(m-2k) {k} W
                        - [a_0] pad^(m+1) W

Folding these over a generator word from the seed [1] gives the auxiliary
vector; eliminating the sliding pads (first variable = frozen variable plus
pad, with pad * first variable = 0) gives the extended vector.

Also here: palindromy and operator-identity checks, the classical h of a
simple polytope from its face vector, and the naive pseudo h-vector.
"""

from __future__ import annotations

from math import comb

from .symbols import (
    AUX, FINAL, PAD_AUX, BiGradedPoly, HVector, rewrite_pads, word_degree,
)
from .words import GeneratorWord


def apply_cylinder(h: HVector) -> HVector:
    """Product with a segment: every polynomial times the linear sum."""
    if h.flavor != AUX:
        raise ValueError("cylinder operator acts on auxiliary vectors")
    return HVector(h.degree + 1, AUX,
                   {w: p.mul_linear() for w, p in h.terms.items()})


def _duplicate_middle(p: BiGradedPoly) -> BiGradedPoly:
    i = p.degree // 2
    return BiGradedPoly(p.coeffs[:i + 1] + p.coeffs[i:])


def apply_cone(h: HVector) -> HVector:
    """Cone operator on an auxiliary vector, term by term."""
    if h.flavor != AUX:
        raise ValueError("cone operator acts on auxiliary vectors")
    out = {}

    def add(word, poly):
        if word in out:
            out[word] = out[word] + poly
        else:
            out[word] = poly

    for word, p in h.terms.items():
        m = p.degree
        add(word, _duplicate_middle(p))
        for k in range(1, m // 2 + 1):
            c = p.coeffs[k] - p.coeffs[k - 1]
            add((PAD_AUX,) * (m - 2 * k) + (k,) + word, BiGradedPoly((c,)))
        add((PAD_AUX,) * (m + 1) + word, BiGradedPoly((-p.coeffs[0],)))
    return HVector(h.degree + 1, AUX, out)


def aux_hvector(w: GeneratorWord) -> HVector:
    """Fold the two operators over a bipyramid-free word from the seed."""
    if not w.is_bipyramid_free():
        raise ValueError(
            f"word {w} contains the bipyramid operator; "
            "use the linear extension over flag vectors instead")
    h = HVector.unit(AUX)
    for op in w.rightmost_first():
        h = apply_cone(h) if op == "C" else apply_cylinder(h)
    return h


def to_extended(h: HVector) -> HVector:
    """Change of variables from the auxiliary to the final flavor.

    Each monomial X^p Y^q expands as sum_j x^(p-j) y^q pad^j because a
    sliding pad kills x on its left; the pads, new and old, are then pushed
    through the word by the elimination rules.
    """
    if h.flavor != AUX:
        raise ValueError("change of variables starts from an auxiliary vector")
    acc: dict[tuple, list] = {}
    n = h.degree
    for word, p in h.terms.items():
        m = p.degree
        for t, a in enumerate(p.coeffs):
            if a == 0:
                continue
            pexp, q = m - t, t
            for j in range(pexp + 1):
                for w2, mult in rewrite_pads((PAD_AUX,) * j + word):
                    cs = acc.get(w2)
                    if cs is None:
                        cs = acc[w2] = [0] * (n - word_degree(w2) + 1)
                    cs[q] += a * mult
    return HVector(n, FINAL,
                   {w: BiGradedPoly(cs) for w, cs in acc.items()})


def extended_hvector(w: GeneratorWord) -> HVector:
    return to_extended(aux_hvector(w))


def mpih_part(h: HVector) -> BiGradedPoly:
    """Empty-word polynomial of an extended vector."""
    return h.mpih()


def is_palindromic(h: HVector) -> bool:
    """True when swapping the two variables fixes every term."""
    return h.is_palindromic()


def check_ic_equation(h: HVector) -> bool:
    """Operator identity (I-C)CI = I(I-C)C evaluated on a vector."""
    a = apply_cone(apply_cylinder(h))
    lhs = apply_cylinder(a) - apply_cone(a)
    b = apply_cone(h)
    rhs = apply_cylinder(apply_cylinder(b) - apply_cone(b))
    return lhs == rhs


def classical_h_simple(face_vector) -> BiGradedPoly:
    """The h-polynomial of a simple n-polytope from [f_0 .. f_{n-1}].

    Solves h(x, x+y) = sum_i f_i x^(n-i) y^i with f_n = 1 by
    back-substitution over exact integers.
    """
    f = list(face_vector)
    n = len(f)
    f.append(1)
    h = [0] * (n + 1)
    for s in range(n, -1, -1):
        h[s] = f[s] - sum(comb(t, s) * h[t] for t in range(s + 1, n + 1))
    return BiGradedPoly(h)


def pseudo_h(w: GeneratorWord) -> BiGradedPoly:
    """Naive h under the simple-case rules: I multiplies by the linear sum,
    C prepends a leading 1 (top power of the first variable plus y times
    the old value)."""
    if not w.is_bipyramid_free():
        raise ValueError("pseudo h is defined by the I/C rules only")
    p = BiGradedPoly.one()
    for op in w.rightmost_first():
        if op == "I":
            p = p.mul_linear()
        else:
            p = BiGradedPoly((1,) + p.coeffs)
    return p

"""Exact linear algebra over flag vectors.

Flag vectors of the cone/cylinder words with no repeated cylinder and no
innermost cylinder form a basis of the span of all polytope flag vectors
(a Fibonacci number of them in each dimension).  This module expresses
arbitrary flag vectors in that basis by exact row reduction and extends
linear functionals (the extended h-vector, the naive pseudo h, the link
functionals) from the basis to the whole span.

It also carries the constructor transforms at the flag-vector level: the
flag vector of a pyramid, prism or bipyramid computed linearly from the
flag vector of the base.  Each flag of the new polytope splits into a chain
of base-type faces followed by a chain of new-type faces, so the count for
a dimension set T is a sum over two-block splits of T of base flag counts.
Every one of these is pinned against the brute-force lattice count in the
test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import engine
from .lattice import FlagVector, build
from .symbols import HVector
from .words import GeneratorWord, all_words


class NotInSpanError(ValueError):
    """Raised when a vector lies outside the polytope flag-vector span."""

    def __init__(self, residual):
        super().__init__(f"vector is outside the basis span; residual {residual}")
        self.residual = residual


# -- constructor transforms on flag vectors ---------------------------------

def _block_splits(T):
    """Splits of a sorted tuple into a low block and a high block."""
    for cut in range(len(T) + 1):
        yield T[:cut], T[cut:]


def _base(fv: FlagVector, S) -> int:
    # the full face tops up any chain, so its dimension is dropped
    return fv[frozenset(s for s in S if s != fv.n)]


def cone_flag_vector(fv: FlagVector) -> FlagVector:
    """Flag vector of the pyramid over a polytope with flag vector fv.

    New faces are old faces joined to the apex, one dimension up; the base
    survives as a facet.  A chain is a chain of base faces, then a chain of
    coned faces whose underlying faces continue it weakly.
    """
    n = fv.n
    counts = {}
    for key in range(1 << (n + 1)):
        T = tuple(d for d in range(n + 1) if key >> d & 1)
        total = 0
        for T1, T2 in _block_splits(T):
            if not T2:
                total += _base(fv, T1)
            elif T2[0] == 0:
                if not T1:
                    total += _base(fv, [t - 1 for t in T2 if t > 0])
            else:
                total += _base(fv, set(T1) | {t - 1 for t in T2})
        counts[frozenset(T)] = total
    return FlagVector(n + 1, counts)


def prism_flag_vector(fv: FlagVector) -> FlagVector:
    """Flag vector of the prism: two side copies of each face plus the
    interval products, which sit one dimension up."""
    n = fv.n
    counts = {}
    for key in range(1 << (n + 1)):
        T = tuple(d for d in range(n + 1) if key >> d & 1)
        total = 0
        for T1, T2 in _block_splits(T):
            if T2 and T2[0] == 0:
                continue  # no product face has dimension zero
            side = 2 if T1 else 1
            total += side * _base(fv, set(T1) | {t - 1 for t in T2})
        counts[frozenset(T)] = total
    return FlagVector(n + 1, counts)


def bipyramid_flag_vector(fv: FlagVector) -> FlagVector:
    """Flag vector of the bipyramid: proper faces survive, every proper
    face gains two apex companions, and the base is no longer a face."""
    n = fv.n
    counts = {}
    for key in range(1 << (n + 1)):
        T = tuple(d for d in range(n + 1) if key >> d & 1)
        total = 0
        for T1, T2 in _block_splits(T):
            if T1 and T1[-1] == n:
                continue  # the base itself is not a face
            if not T2:
                total += _base(fv, T1)
            elif T2[0] == 0:
                if not T1:
                    total += 2 * _base(fv, [t - 1 for t in T2 if t > 0])
            else:
                total += 2 * _base(fv, set(T1) | {t - 1 for t in T2})
        counts[frozenset(T)] = total
    return FlagVector(n + 1, counts)


_POINT_FLAG = FlagVector(0, {frozenset(): 1})


@lru_cache(maxsize=None)
def _word_flag_cached(ops: str) -> FlagVector:
    if not ops:
        return _POINT_FLAG
    inner = _word_flag_cached(ops[1:])
    op = ops[0]
    if op == "C":
        return cone_flag_vector(inner)
    if op == "I":
        return prism_flag_vector(inner)
    return bipyramid_flag_vector(inner)


def word_flag_vector(w: GeneratorWord) -> FlagVector:
    """Flag vector of a generator word by the linear transforms.

    Agrees with the lattice count (tested exhaustively at low dimension)
    but stays cheap for prism-heavy words in dimension 6 and 7.
    """
    return _word_flag_cached(w.ops)


# -- the basis and row reduction --------------------------------------------

def ic_basis(n: int) -> list:
    """Length-n words over I, C with no 'II' and no innermost 'I',
    in lexicographic order; there are Fibonacci-many."""
    out = []
    for w in all_words(n, "IC"):
        if "II" in w.ops or w.ops.endswith("I"):
            continue
        out.append(w)
    return out


@lru_cache(maxsize=None)
def _basis_data(n: int):
    """Columns = lattice flag vectors of the basis words; returns the
    recorded row reduction (pivots and the transform matrix T with
    T @ M in reduced echelon form)."""
    basis = ic_basis(n)
    rows = 1 << n
    M = [[Fraction(build(w).flag_vector().as_vector()[r]) for w in basis]
         for r in range(rows)]
    T = [[Fraction(int(i == j)) for j in range(rows)] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(len(basis)):
        pr = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        T[r], T[pr] = T[pr], T[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        T[r] = [x * inv for x in T[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
                T[i] = [a - f * b for a, b in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != len(basis):
        raise AssertionError(f"basis flag vectors are dependent at n={n}")
    return basis, pivots, T


def express_in_basis(fv: FlagVector):
    """Exact coefficients of fv over the basis flag vectors.

    Raises NotInSpanError (carrying the residual rows) when no exact
    combination exists; the tolerance is literally zero.
    """
    basis, pivots, T = _basis_data(fv.n)
    f = fv.as_vector()
    u = [sum(trow[j] * f[j] for j in range(len(f)) if f[j] != 0)
         for trow in T]
    rank = len(pivots)
    residual = [x for x in u[rank:] if x != 0]
    if residual:
        raise NotInSpanError(residual)
    coeffs = [Fraction(0)] * len(basis)
    for row, col in enumerate(pivots):
        coeffs[col] = u[row]
    return coeffs


def extend_linear(fv: FlagVector, value_on_word):
    """Extend a linear functional from basis words to the whole span."""
    basis, _, _ = _basis_data(fv.n)
    coeffs = express_in_basis(fv)
    total = None
    for c, w in zip(coeffs, basis):
        if c == 0:
            continue
        v = value_on_word(w).scale(c)
        total = v if total is None else total + v
    if total is None:
        return value_on_word(basis[0]).scale(0)
    return total


def linear_h(fv: FlagVector) -> HVector:
    """The extended h-vector of an arbitrary spanned flag vector."""
    return extend_linear(fv, engine.extended_hvector)


def linear_pseudo_h(fv: FlagVector):
    """The naive pseudo h-vector extended off the generator words."""
    return extend_linear(fv, engine.pseudo_h)


def span_rank(flag_vectors) -> int:
    """Exact rank of a family of equal-dimension flag vectors.

    Integer cross-elimination with gcd normalization; no pivoting games
    are needed over an exact field.
    """
    basis = []  # (pivot index, normalized int row)
    dim = None
    for fv in flag_vectors:
        if dim is None:
            dim = fv.n
        elif fv.n != dim:
            raise ValueError("rank of flag vectors of unequal dimension")
        row = list(fv.as_vector())
        for p, b in basis:
            if row[p]:
                f = row[p]
                row = [x * b[p] - y * f for x, y in zip(row, b)]
        piv = next((i for i, x in enumerate(row) if x), None)
        if piv is None:
            continue
        g = 0
        for x in row:
            g = gcd(g, x)
        if row[piv] < 0:
            g = -g
        row = [x // g for x in row]
        basis.append((piv, row))
        basis.sort(key=lambda pb: pb[0])
    return len(basis)

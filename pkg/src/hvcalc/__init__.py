"""Exact h-vector calculus for polytopes built from the point by cones,
cylinders and bipyramids."""

from .engine import (
    apply_cone, apply_cylinder, aux_hvector, check_ic_equation,
    classical_h_simple, extended_hvector, is_palindromic, mpih_part,
    pseudo_h, to_extended,
)
from .flaglin import (
    NotInSpanError, cone_flag_vector, express_in_basis, ic_basis, linear_h,
    linear_pseudo_h, span_rank, word_flag_vector,
)
from .lattice import (
    FaceLattice, FlagVector, bipyramid, build, empty_polytope, flag_vector,
    join, link_flag_vector, point, prism, pyramid,
)
from .links import cone_rule_final, g_eval, h_by_links, lift_to_aux
from .symbols import AUX, FINAL, BiGradedPoly, HVector, push_pads
from .terms import (
    IndexTerm, broadly_similar, downset, enumerate_terms, fib, implies,
    strata_vector, term_degree,
)
from .words import GeneratorWord, WordParseError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

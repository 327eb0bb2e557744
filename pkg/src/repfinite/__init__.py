"""Detect infinitely many semisimple representation classes in a fixed
dimension, for finitely presented algebras over Q or F_p."""

__version__ = "0.1.0"

from .detector import Answer, CandidateCoefficient, Verdict, candidate_coefs, detect
from .fields import GF, QQ, FieldSpec
from .freealg import (NcPoly, Presentation, parse_presentation, words_up_to,
                      cyclic_representatives)
from .groebner import (AlgebraicityResult, GroebnerBasis, buchberger,
                       contains_one, eliminate, is_algebraic_mod_ideal,
                       normal_form, s_poly)
from .matrices import (CharCoefficients, GenericMatrix, char_poly, eval_ncpoly,
                       eval_word, generic_matrix, rel_entries)
from .poly import (BlockEliminate, GrevLex, Lex, MonomialOrder, Polynomial,
                   Ring, Variable, block_eliminate, compare_monomials,
                   coordinate_ring, parse_poly)

__all__ = [
    "Answer", "CandidateCoefficient", "Verdict", "candidate_coefs", "detect",
    "GF", "QQ", "FieldSpec",
    "NcPoly", "Presentation", "parse_presentation", "words_up_to",
    "cyclic_representatives",
    "AlgebraicityResult", "GroebnerBasis", "buchberger", "contains_one",
    "eliminate", "is_algebraic_mod_ideal", "normal_form", "s_poly",
    "CharCoefficients", "GenericMatrix", "char_poly", "eval_ncpoly",
    "eval_word", "generic_matrix", "rel_entries",
    "BlockEliminate", "GrevLex", "Lex", "MonomialOrder", "Polynomial", "Ring",
    "Variable", "block_eliminate", "compare_monomials", "coordinate_ring",
    "parse_poly",
]

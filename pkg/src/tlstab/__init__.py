"""Exact computations with the Temperley-Lieb monoid at loop value 1: diagrams,
link states, standard modules, multiplicity formulas, TL-spaces and
representation stability checks."""

from .comb import (Composition, FiltrationProfile, Multiplicities, check_hddr, compositions, d, d_lambda,
                   multiplicity_closed, multiplicity_recursive)
from .decomp import Decomposition, DecompositionError, cyclic_span, decompose, grothendieck_quotient
from .diagram import Diagram, Word, compose, enumerate_diagrams, eval_word, generator, identity, pad
from .link_state import ZERO, LinkState, act, act_standard, back_to_back, enumerate_states, include
from .std_module import MatrixRep, direct_sum, gram_matrix, rep_of_word, standard_rep, verify_relations

__all__ = [
    "Composition", "FiltrationProfile", "Multiplicities", "check_hddr", "compositions", "d", "d_lambda",
    "multiplicity_closed", "multiplicity_recursive",
    "Decomposition", "DecompositionError", "cyclic_span", "decompose", "grothendieck_quotient",
    "Diagram", "Word", "compose", "enumerate_diagrams", "eval_word", "generator", "identity", "pad",
    "ZERO", "LinkState", "act", "act_standard", "back_to_back", "enumerate_states", "include",
    "MatrixRep", "direct_sum", "gram_matrix", "rep_of_word", "standard_rep", "verify_relations",
]

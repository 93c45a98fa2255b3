"""Propositional intuitionistic logic decided through its translation into the
partially-shielded first-order fragment (PSF) and the labelled calculus
G3c/PSF* with geometric rules refl, tran and mono."""
from .kripke import (Counterexample, KripkeModel, NoCounterexample, check_int_model,
                     enumerate_models, forces_prop, forces_psf, semantic_decide, validates)
from .oracle import Provable, Unprovable, equivalence_check, mg3ip_prove
from .prop import PropSequent, parse_prop_formula, parse_sequent
from .prover import DepthExceeded, Proof, Refuted, SearchConfig, geometric_saturate, prove
from .psf import Sequent, is_psf, translate, translate_sequent

__all__ = [
    "Counterexample", "DepthExceeded", "KripkeModel", "NoCounterexample", "Proof",
    "PropSequent", "Provable", "Refuted", "SearchConfig", "Sequent", "Unprovable",
    "check_int_model", "enumerate_models", "equivalence_check", "forces_prop", "forces_psf",
    "geometric_saturate", "is_psf", "mg3ip_prove", "parse_prop_formula", "parse_sequent",
    "prove", "semantic_decide", "translate", "translate_sequent", "validates",
]

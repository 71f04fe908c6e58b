"""Executable injections D_{L,3} -> I_{L,3,L} and their exhaustive verifier."""

from .helpful2 import a4_solution, phi_helpful2, witness_helpful2
from .labels import (CaseLabel, InjectionReport, NoApplicableBranch, lemma_for,
                     weight_bound)
from .small import phi_small
from .two2 import (dichotomy_failures, dichotomy_holds, max_dichotomy_failure_weight,
                   phi_two2, psi_two2, two2_bound)
from .verify import in_codomain, phi, verify_injection

__all__ = [
    "CaseLabel", "InjectionReport", "NoApplicableBranch", "a4_solution", "dichotomy_failures",
    "dichotomy_holds", "max_dichotomy_failure_weight",
    "in_codomain", "lemma_for", "phi", "phi_helpful2", "phi_small", "phi_two2", "psi_two2",
    "two2_bound", "verify_injection", "weight_bound", "witness_helpful2",
]

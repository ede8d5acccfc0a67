"""Presentations of projective S-unit groups of the Hurwitz quaternion order."""

from .analysis import AbelianInvariants, abelianization, closure_order
from .congruence import congruence_image, find_splitting, neighbor_label, rho
from .hurwitz import (
    HurwitzElement,
    ProjectiveClass,
    SPrimeSet,
    canonical_class,
    class_in_projective_sunits,
    conjugate,
    multiply,
    reduced_norm,
)
from .io import export, from_json, load_fixture, to_json
from .norms import elements_of_norm, locate_unit_class, prime_transversal, unit_transversal
from .presentation import Presentation, build_main, build_oracle, verify_presentation
from .tietze import SimplifyBudget, free_and_cyclic_reduce, simplify

__version__ = "0.1.0"

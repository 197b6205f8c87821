"""Exact computation in free-by-free groups F x| F(s, t) and their central
extension by a letter l with [t, a_i] = l: normal forms, conjugacy with
certificates, centralizers, brute-force oracles and growth experiments."""

from .automorphism import FreeAut, apply_aut, builtin_automorphism, load_aut, parse_aut, stretch_sequence
from .centralizer import best_conjugator_G, centralizer_G, conjugator_family_G
from .config import Config, Deadline, load_config
from .conjugacy import Conjugate, NotConjugate, Undecided, conjugate, conjugate_in_G, conjugate_in_Lambda
from .diophantine import bezout_bounded, bezout_lcm, multi_bezout
from .errors import ConjlenError, DomainError, MalformedInput, NotAnAutomorphism, ResourceError
from .hierarchy import (Presentation, ackermann, hydra_presentation, lambda_presentation,
                        mihailova_check, mihailova_generators)
from .hyperbolic import conjugate_in_E, conjugate_in_H, max_root_H
from .normal_form import Element, LambdaGroup, PowerWord
from .suites import run_suite
from .words import Alphabet, conjugate_in_free, cyclic_reduce, free_reduce, max_root_free

__all__ = [
    "Alphabet", "Config", "ConjlenError", "Conjugate", "Deadline", "DomainError", "Element",
    "FreeAut", "LambdaGroup", "MalformedInput", "NotAnAutomorphism", "NotConjugate",
    "PowerWord", "Presentation", "ResourceError", "Undecided", "ackermann", "apply_aut",
    "best_conjugator_G", "bezout_bounded", "bezout_lcm", "builtin_automorphism",
    "centralizer_G", "conjugate", "conjugate_in_E", "conjugate_in_G", "conjugate_in_H",
    "conjugate_in_Lambda", "conjugate_in_free", "conjugator_family_G", "cyclic_reduce",
    "free_reduce", "hydra_presentation", "lambda_presentation", "load_aut", "load_config",
    "max_root_H", "max_root_free", "mihailova_check", "mihailova_generators", "multi_bezout",
    "parse_aut", "run_suite", "stretch_sequence",
]

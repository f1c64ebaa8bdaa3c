"""Strong partial actions of finite monoids on finite semigroups.

Build a :class:`PartialAction`, then ask for its classes
(:func:`classes_generic`), local confluence (:func:`is_locally_confluent`)
or the full :func:`build_report`.
"""

from .algebra_core import FiniteGroup, FiniteMonoid, FiniteSemigroup, SizeCapError
from .criteria import CriteriaReport, build_report
from .mx_quotient import MXPartition, classes_g0_closed_form, classes_generic
from .partial_action import GlobalAction, PartialAction, validate_partial_action
from .report import Verdict
from .rewriting import RewritingSystem, is_locally_confluent, unique_nf_condition

__version__ = "0.1.0"

__all__ = [
    "CriteriaReport",
    "FiniteGroup",
    "FiniteMonoid",
    "FiniteSemigroup",
    "GlobalAction",
    "MXPartition",
    "PartialAction",
    "RewritingSystem",
    "SizeCapError",
    "Verdict",
    "build_report",
    "classes_g0_closed_form",
    "classes_generic",
    "is_locally_confluent",
    "unique_nf_condition",
    "validate_partial_action",
]

"""Exact generalized inverses (group, {1,3}, {1,4}, core, dual core) in rings with involution."""

from . import corpus, engine, linalg, oracle, rings
from .engine import (
    Form,
    InverseCertificate,
    InverseKind,
    compute,
    core_inverse,
    dual_core_inverse,
    group_inverse,
    one_four_inverse,
    one_three_inverse,
    verify,
)
from .errors import GinvError, NotInvertible, PreconditionViolated
from .rings import RingDescriptor, Side, make_ring, parse, render

__version__ = "0.1.0"

__all__ = [
    "Form", "GinvError", "InverseCertificate", "InverseKind", "NotInvertible",
    "PreconditionViolated", "RingDescriptor", "Side", "compute", "core_inverse", "corpus",
    "dual_core_inverse", "engine", "group_inverse", "linalg", "make_ring", "one_four_inverse",
    "one_three_inverse", "oracle", "parse", "render", "rings", "verify",
]

"""Commutative incline matrices, power inequalities and walk reductions."""

import json

from ._incline import (
    ArgumentError,
    DomainError,
    Incline,
    InputError,
    InvalidInclineError,
    Matrix,
    NoncommutativeInclineError,
    PreconditionError,
    StructuralError,
    edge_counts,
    find_reduction,
    is_reduction,
    lcm_upto,
    walk_code,
)
from . import _incline

__all__ = [
    "ArgumentError",
    "DomainError",
    "Incline",
    "InputError",
    "InvalidInclineError",
    "Matrix",
    "NoncommutativeInclineError",
    "PreconditionError",
    "StructuralError",
    "edge_counts",
    "find_reduction",
    "is_reduction",
    "lcm_upto",
    "order_index_period",
    "validate_incline",
    "verify_all",
    "walk_code",
]


def _spec_json(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def validate_incline(spec, samples=10000, seed=None):
    """Axiom report for an incline spec (dict or JSON string)."""
    if seed is None:
        return json.loads(_incline.validate_incline_json(_spec_json(spec), samples))
    return json.loads(_incline.validate_incline_json(_spec_json(spec), samples, seed))


def order_index_period(matrix, horizon=None):
    return json.loads(matrix.order_index_period_json(horizon))


def verify_all(n, long_length, short_length, mode="multiset", primes=None):
    """Exhaustive reduction check; failures are space-separated walks."""
    return json.loads(_incline.verify_all_json(n, long_length, short_length, mode, primes))

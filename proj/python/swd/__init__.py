"""Segment modules, the B_n^(1) duality datum and cocycle solvers.

Structured values are returned as plain dicts and lists in the same JSON
layout the ``swd`` command-line tool prints.
"""

import json

from ._swd import (
    DomainError,
    QPower,
    cartan,
    denom_roots,
    in_s0,
    quiver_dij,
    run_cli,
)
from . import _swd

__all__ = [
    "DomainError",
    "QPower",
    "cartan",
    "class_text",
    "de",
    "denom_roots",
    "f_image",
    "in_s0",
    "k_relation",
    "lambda_",
    "phi1",
    "phi2",
    "quiver_dij",
    "run_cli",
    "solve_cocycle",
    "zero_order_s",
]


def f_image(n, a, b):
    """Image of the segment module L(a,b) for B_n^(1)."""
    return json.loads(_swd.f_image_json(n, a, b))


def phi1(n, i, p):
    return json.loads(_swd.phi1_json(n, i, p))


def phi2(n, i, sign, p):
    return json.loads(_swd.phi2_json(n, i, sign, p))


def class_text(c):
    """Text form of a class dict, e.g. ``Fund(2,q^7)``."""
    return _swd.class_text(json.dumps(c))


def lambda_(s, t):
    return _swd.lambda_(*s, *t)


def de(s, t):
    return _swd.de(*s, *t)


def zero_order_s(s, t):
    return _swd.zero_order_s(*s, *t)


def k_relation(s, t):
    return json.loads(_swd.k_relation_json(*s, *t))


def solve_cocycle(family, N, series=False, order=8):
    """Solve for c given the h-family ``{"a,b": value}``."""
    return json.loads(_swd.solve_cocycle_json(json.dumps(family), N, series, order))

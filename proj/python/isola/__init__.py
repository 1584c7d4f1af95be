"""Python bindings for the isola library."""

import json

from . import _isola
from ._isola import (
    Ap,
    Cp,
    III_kernel_check,
    beta1,
    beta1_roots,
    eigenvalues,
    phi,
    precision_bits,
    run_criterion,
    set_precision_bits,
)


def stokes_expand(order, exact=False, depth=1.0, precision_bits=0):
    return json.loads(_isola.stokes_expand_json(order, exact, depth, precision_bits))


def linearize(order, exact=False, depth=1.0, precision_bits=0):
    return json.loads(_isola.linearize_json(order, exact, depth, precision_bits))


def collision(p, depth):
    return json.loads(_isola.collision_json(p, depth))


def beta1_details(p, depth, precision_bits=0):
    return json.loads(_isola.beta1_json(p, depth, precision_bits))


def trace_isola(p, depth, eps, modes=16, order=0, samples=64):
    return json.loads(_isola.trace_isola_json(p, depth, eps, modes, order, samples))


__all__ = [
    "Ap",
    "Cp",
    "III_kernel_check",
    "beta1",
    "beta1_details",
    "beta1_roots",
    "collision",
    "eigenvalues",
    "linearize",
    "phi",
    "precision_bits",
    "run_criterion",
    "set_precision_bits",
    "stokes_expand",
    "trace_isola",
]

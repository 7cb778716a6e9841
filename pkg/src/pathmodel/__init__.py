"""Exact path models for root systems.

Vectors are tuples of :class:`fractions.Fraction` in the fundamental-coweight
basis.  The submodules are meant to be used directly::

    from pathmodel import root_system, paths, operators, tensor
    R = root_system.build("A2")
    orbit = operators.generate_F_orbit(R, paths.pi_lambda(R, (1, 1)))
"""
from . import (
    chains,
    config,
    errors,
    hecke_search,
    operators,
    paths,
    predicates,
    rational,
    root_system,
    saturation,
    tensor,
    weyl,
)
from .root_system import RootSystem, build

__version__ = "0.1.0"

__all__ = [
    "RootSystem",
    "build",
    "chains",
    "config",
    "errors",
    "hecke_search",
    "operators",
    "paths",
    "predicates",
    "rational",
    "root_system",
    "saturation",
    "tensor",
    "weyl",
]

"""Finitely presented algebra toolkit.

Transforms finite presentations of associative algebras: computes a
presentation of the even part of a Z/2Z-graded algebra and of the Peirce
component eAe, and verifies every transformation with degree-truncated
noncommutative rewriting oracles.
"""

from ._fpa import (
    Presentation,
    check_generator_map,
    compare_hilbert,
    even_part,
    gb,
    hilbert,
    member,
    parse,
    peirce_component,
    tietze_simplify,
    verify_witnesses,
)

__all__ = [
    "Presentation",
    "check_generator_map",
    "compare_hilbert",
    "even_part",
    "gb",
    "hilbert",
    "member",
    "parse",
    "peirce_component",
    "tietze_simplify",
    "verify_witnesses",
]

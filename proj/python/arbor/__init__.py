"""Exact computations with Hopf algebras of rooted trees.

Trees are strings such as "[[][]]"; forests join trees with "·".
Coefficients come back as fractions.Fraction.
"""

from fractions import Fraction

from . import _arbor
from ._arbor import DomainError, InternalMismatch, ParseError, canonical, enumerate_trees, run_cli

__all__ = [
    "DomainError",
    "InternalMismatch",
    "ParseError",
    "antipode",
    "canonical",
    "character_values",
    "coproduct",
    "enumerate_trees",
    "graft",
    "insert",
    "lambda_",
    "magnus",
    "omega",
    "qsh",
    "run_cli",
    "tree_stats",
    "verify",
]


def _sum(terms):
    return {forest: Fraction(c) for forest, c in terms}


def tree_stats(forest):
    s = _arbor.tree_stats(forest)
    return {
        "vertices": s["vertices"],
        "edges": s["edges"],
        "sigma": int(s["sigma"]),
        "factorial": int(s["factorial"]),
        "cm": Fraction(s["cm"]),
    }


def coproduct(forest, variant="H"):
    """{(left, right): coefficient}"""
    return {(a, b): Fraction(c) for a, b, c in _arbor.coproduct(forest, variant)}


def antipode(forest, variant="H", method="recursive"):
    return _sum(_arbor.antipode(forest, variant, method))


def character_values(name, max_vertices):
    return _sum(_arbor.character_values(name, max_vertices))


def omega(max_vertices):
    return _sum(_arbor.omega(max_vertices))


def insert(t, u, normalized=False):
    return _sum(_arbor.insert(t, u, normalized))


def graft(t, u, normalized=False):
    return _sum(_arbor.graft(t, u, normalized))


def magnus(max_vertices):
    return _sum(_arbor.magnus(max_vertices))


def lambda_(forest):
    """Image in the quasi-shuffle algebra as {power of x: coefficient}."""
    return {k: Fraction(c) for k, c in _arbor.lambda_(forest)}


def qsh(ks, r):
    return int(_arbor.qsh(list(ks), r))


def verify(suite="all", max_degree=5):
    return _arbor.verify(suite, max_degree)

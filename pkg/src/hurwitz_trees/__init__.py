"""Minimal factorizations of the long cycle, their Hurwitz graphs and geometric trees."""

from .perm import Permutation, Transposition, absolute_length, compose, conjugate, is_nc_element, nc_leq
from .factorization import Word, enumerate_fn, is_fn_word, partial_products, phi, word_to_chain
from .geomtree import GeometricGraph, GeometricTree, enumerate_noncrossing_trees, gamma

__all__ = [
    "Permutation",
    "Transposition",
    "Word",
    "GeometricGraph",
    "GeometricTree",
    "absolute_length",
    "compose",
    "conjugate",
    "enumerate_fn",
    "enumerate_noncrossing_trees",
    "gamma",
    "is_fn_word",
    "is_nc_element",
    "nc_leq",
    "partial_products",
    "phi",
    "word_to_chain",
]

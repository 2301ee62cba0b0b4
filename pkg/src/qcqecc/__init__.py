"""Quasi-cyclic codes over finite fields and the quantum codes built from them."""

from .gf import FieldElem, GF, ctx_new, field_of_order, parse_elem, format_elem
from .polyring import Poly, RingElem, ring_new
from .matfq import MatFq
from .qccode import TGenQc, TwoGenQc

__all__ = [
    "FieldElem", "GF", "ctx_new", "field_of_order", "parse_elem", "format_elem",
    "Poly", "RingElem", "ring_new", "MatFq", "TGenQc", "TwoGenQc",
]
__version__ = "0.1.0"

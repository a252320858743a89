"""Exact rank-1 generic character tables and their verification suites."""

from functools import lru_cache

from .core import GenericTable, class_function_eq, inner_product
from .degrees import degree_data, semisimple_and_depth
from .gl2 import GL2_Q_CAP, GL2Table, build_gl2
from .projector import (
    apply_matrix,
    luconj_check,
    orthocomplement_basis,
    projector_matrix,
    projector_report,
    uniform_projector,
)
from .restrict import (
    class_restriction_map,
    restrict_class_function,
    restriction_decomposition,
    restriction_suite,
)
from .sl2 import SL2_Q_CAP, SL2Table, build_sl2
from .verify import green_functions, lemma_app3_check, verify_dl_identities


@lru_cache(maxsize=None)
def sl2_table(q):
    """Build (and certify) the SL2(F_q) table, cached per q."""
    return build_sl2(q)


@lru_cache(maxsize=None)
def gl2_table(q):
    """Build (and certify) the GL2(F_q) table, cached per q."""
    return build_gl2(q)


def get_table(group, q):
    g = group.upper()
    if g == "SL2":
        return sl2_table(q)
    if g == "GL2":
        return gl2_table(q)
    raise ValueError(f"unknown group {group!r}; supported: SL2, GL2")


__all__ = [
    "GenericTable",
    "SL2Table",
    "GL2Table",
    "SL2_Q_CAP",
    "GL2_Q_CAP",
    "apply_matrix",
    "build_gl2",
    "build_sl2",
    "class_function_eq",
    "class_restriction_map",
    "degree_data",
    "get_table",
    "gl2_table",
    "green_functions",
    "inner_product",
    "lemma_app3_check",
    "luconj_check",
    "orthocomplement_basis",
    "projector_matrix",
    "projector_report",
    "restrict_class_function",
    "restriction_decomposition",
    "restriction_suite",
    "semisimple_and_depth",
    "sl2_table",
    "uniform_projector",
    "verify_dl_identities",
]

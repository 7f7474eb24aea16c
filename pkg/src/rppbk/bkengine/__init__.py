"""12-tables, descent resolution, and the Bender-Knuth involutions built on it."""

from .involutions import bk12, bk12_table, bk_general, classical_bk
from .rewriting import RewritingSystem, all_normal_forms, local_confluence_failures, normal_form
from .table import (
    ColumnClass,
    DescentResolution,
    DescentType,
    Table12,
    check_local_confluence,
    column_class,
    descent_type,
    descents,
    ell,
    flip,
    is_benign,
    normalize,
    random_benign_table,
    resolve,
    sep,
    seplist,
    sig,
)

__all__ = [
    "bk12",
    "bk12_table",
    "bk_general",
    "classical_bk",
    "RewritingSystem",
    "all_normal_forms",
    "local_confluence_failures",
    "normal_form",
    "ColumnClass",
    "DescentResolution",
    "DescentType",
    "Table12",
    "check_local_confluence",
    "column_class",
    "descent_type",
    "descents",
    "ell",
    "flip",
    "is_benign",
    "normalize",
    "random_benign_table",
    "resolve",
    "sep",
    "seplist",
    "sig",
]

from .corpus import builtin_corpus, corpus_index
from .dissections import DissectionCase, builtin_dissections
from .expr import ExprNode, Identity, eval_expr
from .families import andrews_gordon, vz_double
from .grammar import parse_expr, serialize
from .store import IdentityRecord, RunDocument, dump_corpus, load_corpus
from .verify import (
    VerifyReport,
    dissection_check,
    jquot_terms,
    level_report,
    verify,
    verify_all,
)

__all__ = [
    "DissectionCase",
    "ExprNode",
    "Identity",
    "IdentityRecord",
    "RunDocument",
    "VerifyReport",
    "andrews_gordon",
    "builtin_corpus",
    "builtin_dissections",
    "corpus_index",
    "dissection_check",
    "dump_corpus",
    "eval_expr",
    "jquot_terms",
    "level_report",
    "load_corpus",
    "parse_expr",
    "serialize",
    "verify",
    "verify_all",
    "vz_double",
]

"""Finite Boolean-valued models of set theory: a library and workbench.

Build bounded-rank Boolean-valued universes over finite complete Boolean
algebras, evaluate truth values of first-order set formulas, move material
up and down between ordinary sets and the universe, equip carriers with
Boolean metrics, and complete forcing posets into Boolean algebras — with
every construction cross-checked against the classical atom-fiber collapse.
"""

from . import errors
from .balg import (
    BoolAlg,
    Elem,
    Hom,
    Partition,
    aggregate,
    big_join,
    big_meet,
    identity_hom,
    is_partition,
    make_hom,
)
from .hf import EMPTY, HFSet, hf, kpair, ktuple, ordinal, parse_hf
from .universe import BvSet, Universe, pi_star
from .formula import Signature, is_restricted, parse, to_text
from .evaluator import (
    check_los,
    check_restricted_transfer,
    eval_bv,
    eval_classical,
    find_max_witness,
)
from .arrows import (
    ExtMap,
    ascend_function,
    ascent,
    descend_function,
    descend_two_point,
    descent,
    internal_pair,
    internal_tuple,
    is_extensional,
    mix_closure,
)
from .bsets import (
    BSet,
    BSystem,
    check_homomorphism,
    cyc,
    eval_bsystem,
    is_contractive,
    is_universally_complete,
    make_bset,
    mix_in_bset,
    mix_set,
    realize_bset,
)
from .posets import (
    Band,
    FinPoset,
    antichain,
    band_of,
    chain,
    completion,
    forcing_c,
    forcing_count,
    is_refined,
    polar,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "BoolAlg", "Elem", "Hom", "Partition", "aggregate", "big_join", "big_meet",
    "identity_hom", "is_partition", "make_hom",
    "EMPTY", "HFSet", "hf", "kpair", "ktuple", "ordinal", "parse_hf",
    "BvSet", "Universe", "pi_star",
    "Signature", "is_restricted", "parse", "to_text",
    "check_los", "check_restricted_transfer", "eval_bv", "eval_classical",
    "find_max_witness",
    "ExtMap", "ascend_function", "ascent", "descend_function",
    "descend_two_point", "descent", "internal_pair", "internal_tuple",
    "is_extensional", "mix_closure",
    "BSet", "BSystem", "check_homomorphism", "cyc", "eval_bsystem",
    "is_contractive", "is_universally_complete", "make_bset", "mix_in_bset",
    "mix_set", "realize_bset",
    "Band", "FinPoset", "antichain", "band_of", "chain", "completion",
    "forcing_c", "forcing_count", "is_refined", "polar",
    "__version__",
]

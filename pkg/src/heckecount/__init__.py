"""heckecount: exact counting of simple modules of Iwahori-Hecke algebras.

Builds finite Weyl groups from integer root systems, the generic Hecke
algebra over Z[v, v^-1] with u = v^2, generic character tables and Schur
elements for the supported families, and counts the simple modules of
specialized algebras H_k(W, q) by character-table rank, by MeatAxe
composition-factor analysis of the regular module, and (type A) by
e-regular partition counts.
"""

from .counting import (
    SpecPoint,
    VerifyReport,
    char0_point,
    count_eregular,
    count_simples_char0,
    count_simples_rank,
    make_spec_point,
    verify_theorem,
)
from .rootsys import CoxeterDatum, WeylGroup, build_group, datum_from_label

__version__ = "1.0.0"

__all__ = [
    "CoxeterDatum",
    "SpecPoint",
    "VerifyReport",
    "WeylGroup",
    "build_group",
    "char0_point",
    "count_eregular",
    "count_simples_char0",
    "count_simples_rank",
    "datum_from_label",
    "make_spec_point",
    "verify_theorem",
    "__version__",
]

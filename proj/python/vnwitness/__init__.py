"""Witnesses for von Neumann inequality violations.

Thin re-export of the compiled core: polydisc sup norms, sign and Gram
maxima, and Varopoulos operator norms.
"""

from ._core import (
    BudgetError,
    GramWitness,
    Poly,
    RatioReport,
    SignWitness,
    SupResult,
    balpha_gram_max,
    balpha_matrix,
    balpha_sup_norm,
    beta_rank1,
    bracket,
    collinearity_certificate,
    cplus_witness,
    evaluate,
    fj_matrix,
    fj_ratio,
    gram_max,
    homogenize,
    inf_to_one_norm,
    is_psd,
    make_varopoulos,
    operator_norm,
    realify,
    sign_sup,
    symmetrize,
    torus_sup,
    vn_ratio,
)

__all__ = [
    "BudgetError",
    "GramWitness",
    "Poly",
    "RatioReport",
    "SignWitness",
    "SupResult",
    "balpha_gram_max",
    "balpha_matrix",
    "balpha_sup_norm",
    "beta_rank1",
    "bracket",
    "collinearity_certificate",
    "cplus_witness",
    "evaluate",
    "fj_matrix",
    "fj_ratio",
    "gram_max",
    "homogenize",
    "inf_to_one_norm",
    "is_psd",
    "make_varopoulos",
    "operator_norm",
    "realify",
    "sign_sup",
    "symmetrize",
    "torus_sup",
    "vn_ratio",
]

__version__ = "0.1.0"

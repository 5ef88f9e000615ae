"""Exact arithmetic for multiple Euler numbers, Dirichlet-twisted l-values
at negative integers, and their p-adic interpolation with derivatives."""

from .characters import (
    DirichletCharacter,
    UnitGroupStructure,
    conductor,
    enumerate_characters,
    evaluate,
    unit_group_structure,
)
from .cyclotomic import CycElem, cyc_embed_padic, cyclotomic_polynomial
from .errors import DomainError, PrecisionError, UnsupportedEmbedding
from .euler import (
    EulerTable,
    euler_number,
    euler_number_multi,
    euler_number_multi_recurrence,
    euler_polynomial_multi,
    series_expand_multi,
)
from .lpadic import (
    PadicLQuery,
    char_twisted,
    derivative_report,
    euler_number_twisted,
    euler_number_twisted_p_part,
    l_derivative_at_0,
    l_padic,
    l_padic_interp,
)
from .lvalues import (
    LNegQuery,
    generalized_euler_number,
    generalized_euler_numbers_gf,
    l_value_neg,
    partial_zeta_neg,
    partial_zeta_neg_binomial,
)
from .padic import (
    PadicContext,
    PadicNum,
    angle,
    angle_pow_neg_s,
    binom_neg_s,
    iwasawa_log,
    root_of_unity,
    teichmuller,
)
from .series import TruncatedSeries

__all__ = [
    "CycElem",
    "DirichletCharacter",
    "DomainError",
    "EulerTable",
    "LNegQuery",
    "PadicContext",
    "PadicLQuery",
    "PadicNum",
    "PrecisionError",
    "TruncatedSeries",
    "UnitGroupStructure",
    "UnsupportedEmbedding",
    "angle",
    "angle_pow_neg_s",
    "binom_neg_s",
    "char_twisted",
    "conductor",
    "cyc_embed_padic",
    "cyclotomic_polynomial",
    "derivative_report",
    "enumerate_characters",
    "euler_number",
    "euler_number_multi",
    "euler_number_multi_recurrence",
    "euler_number_twisted",
    "euler_number_twisted_p_part",
    "euler_polynomial_multi",
    "evaluate",
    "generalized_euler_number",
    "generalized_euler_numbers_gf",
    "iwasawa_log",
    "l_derivative_at_0",
    "l_padic",
    "l_padic_interp",
    "l_value_neg",
    "partial_zeta_neg",
    "partial_zeta_neg_binomial",
    "root_of_unity",
    "series_expand_multi",
    "teichmuller",
    "unit_group_structure",
]

__version__ = "0.1.0"

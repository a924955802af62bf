"""Multiple zeta values from fast polylogarithm series at 1/2.

The heavy lifting lives in the C++ extension; values cross the boundary as
decimal strings so no precision is lost.
"""

from ._polyzeta import (
    DivergentError,
    MethodError,
    PrecisionError,
    __version__,
    antipode,
    box_closed_form,
    classify,
    concat,
    const_log2,
    const_pi,
    const_sqrt3,
    coproduct,
    cor12_weight,
    lambda_inverse,
    lambda_map,
    lemma9_coeffs,
    nabla_closed_form,
    polylog,
    polylog_poly,
    polylog_word,
    regularize_ab,
    regularize_b,
    shuffle,
    theorem10_weights,
    transform,
    verify,
    zeta,
    zeta_oracle,
    zeta_pm,
    zeta_reg,
)

__all__ = [
    "DivergentError",
    "MethodError",
    "PrecisionError",
    "__version__",
    "antipode",
    "box_closed_form",
    "classify",
    "concat",
    "const_log2",
    "const_pi",
    "const_sqrt3",
    "coproduct",
    "cor12_weight",
    "lambda_inverse",
    "lambda_map",
    "lemma9_coeffs",
    "nabla_closed_form",
    "polylog",
    "polylog_poly",
    "polylog_word",
    "regularize_ab",
    "regularize_b",
    "shuffle",
    "theorem10_weights",
    "transform",
    "verify",
    "zeta",
    "zeta_oracle",
    "zeta_pm",
    "zeta_reg",
]

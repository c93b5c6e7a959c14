"""Exact Fourier expansions of degree-2 Siegel modular forms."""

from ._siegel import (
    GeneratorSet,
    FormExpr,
    InsufficientBound,
    ModPExpansion,
    NotPIntegral,
    ParseError,
    QExpansion,
    SiegelError,
    bernoulli,
    build_generators,
    cohen_h,
    eval,
    eval_mod_p,
    kronecker,
    parse,
    parse_expansion,
    sturm,
    verify_x35_mod23,
    verify_theta_example,
)

__all__ = [
    "GeneratorSet",
    "FormExpr",
    "InsufficientBound",
    "ModPExpansion",
    "NotPIntegral",
    "ParseError",
    "QExpansion",
    "SiegelError",
    "bernoulli",
    "build_generators",
    "cohen_h",
    "eval",
    "eval_mod_p",
    "kronecker",
    "parse",
    "parse_expansion",
    "sturm",
    "verify_x35_mod23",
    "verify_theta_example",
]

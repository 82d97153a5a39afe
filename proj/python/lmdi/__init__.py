"""Additive LMDI decomposition over telescoping factor chains."""

from ._core import (
    Effect,
    EffectVector,
    FactorChain,
    FactorDef,
    LmdiError,
    chain_periods,
    decompose_additive,
    decompose_multiplicative,
    kaya_chain,
    load_dataset,
    log_mean,
    render_waterfall_svg,
    write_report,
)

__all__ = [
    "Effect",
    "EffectVector",
    "FactorChain",
    "FactorDef",
    "LmdiError",
    "chain_periods",
    "decompose_additive",
    "decompose_multiplicative",
    "kaya_chain",
    "load_dataset",
    "log_mean",
    "render_waterfall_svg",
    "write_report",
]

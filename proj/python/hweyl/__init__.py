"""Weyl transform, twisted convolution and vector-measure tools on finite abelian groups."""

from ._hweyl import (
    hausdorff_young_margin,
    lp_norm,
    p_semivariation,
    schatten_norm,
    semivariation,
    twisted_convolve,
    verify,
    weyl_inverse,
    weyl_transform,
)

__all__ = [
    "hausdorff_young_margin",
    "lp_norm",
    "p_semivariation",
    "schatten_norm",
    "semivariation",
    "twisted_convolve",
    "verify",
    "weyl_inverse",
    "weyl_transform",
]

"""Enriched representation and fusion rings of sl_n with Hodge-polynomial structure constants."""
from .core import BigradedPoly, HodgePoly, Rational, as_rational, eval_at_one, frac, homogenize, reciprocal
from .lie import (
    AlcoveFold,
    RootVector,
    Weight,
    affine_fold,
    alcove_distance,
    casimir,
    dual,
    fusion_tensor,
    lr_tensor,
    pairing,
    root_decompose,
)
from .motive import KappaParam, LocalExponent, delmos, local_exponents, pieri1_poly, weight_bounds
from .ring import (
    Expansion,
    Fusion,
    PiImage,
    Representation,
    RingContext,
    context,
    dual_kappa,
    fusion,
    pi_map,
    pi_predict,
    rep,
    signed_star,
)

"""Words in SL2(Z), toric fans, semitoric helices and polygons."""

from ._semitoric import (
    DomainError,
    ParseError,
    classify,
    eq_g,
    eval_word,
    fan_classify,
    fan_minimize,
    helix_blowdown,
    helix_blowup,
    helix_from_seed,
    helix_from_word,
    helix_integers,
    helix_minimize,
    helix_validate,
    helix_word,
    polygon_from_helix,
    polygon_to_helix,
    reduce,
    winding,
)

__all__ = [
    "DomainError",
    "ParseError",
    "classify",
    "eq_g",
    "eval_word",
    "fan_classify",
    "fan_minimize",
    "helix_blowdown",
    "helix_blowup",
    "helix_from_seed",
    "helix_from_word",
    "helix_integers",
    "helix_minimize",
    "helix_validate",
    "helix_word",
    "polygon_from_helix",
    "polygon_to_helix",
    "reduce",
    "winding",
]

"""Filtered objects with Frobenius structures from hyperelliptic curves.

Objects cross the boundary in their canonical serialized form; experiment
reports come back as dicts (parsed from the library's JSON block).
"""

import json as _json

from ._fogq import (
    InputError,
    InvariantError,
    PrecisionError,
    __version__,
    check,
    direct_sum,
    dual,
    good_primes,
    hom,
    point_count,
    profile,
    realise,
    split,
    tensor,
    twist,
    zeta,
)
from . import _fogq as _native


def tate_rank(c1, c2, primes, prec=3, bound=None):
    """Divisor-class rank of the product surface, as a report dict."""
    return _json.loads(_native.tate_rank_json(c1, c2, list(primes), prec, bound))


def isogeny_detect(c1, c2, primes, prec=3, bound=None):
    """Hom rank between the curves' H^1 realisations, as a report dict."""
    return _json.loads(_native.isogeny_detect_json(c1, c2, list(primes), prec, bound))


__all__ = [
    "InputError",
    "InvariantError",
    "PrecisionError",
    "__version__",
    "check",
    "direct_sum",
    "dual",
    "good_primes",
    "hom",
    "isogeny_detect",
    "point_count",
    "profile",
    "realise",
    "split",
    "tate_rank",
    "tensor",
    "twist",
    "zeta",
]

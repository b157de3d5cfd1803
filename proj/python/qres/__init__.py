"""Embedded Q-resolutions of plane-curve germs and Yomdin-Le surface
singularities, with exact characteristic polynomials of the monodromy.

The heavy lifting happens in the C++ extension ``_qres``; this wrapper
decodes the JSON result documents into plain dictionaries.
"""

import json

from ._qres import (  # noqa: F401
    ScopeError,
    VerificationError,
    __version__,
    classical_charpoly,
    curve_json,
    ext_gcd,
    milnor_jacobian,
    newton_weights,
    surface_json,
    w_order,
)


def curve(poly, verify=False, weights=None):
    """Resolve a plane-curve germ h(x, y) and return the result document."""
    return json.loads(curve_json(poly, verify, weights))


def surface(poly=None, germs=None, m=0, k=1, verify=False, weights=None):
    """Resolve a surface germ f(x, y, z), or a list of tangent-cone germs
    with explicit (m, k), and return the result document."""
    return json.loads(surface_json(poly, germs, m, k, verify, weights))


__all__ = [
    "ScopeError",
    "VerificationError",
    "classical_charpoly",
    "curve",
    "ext_gcd",
    "milnor_jacobian",
    "newton_weights",
    "surface",
    "w_order",
]

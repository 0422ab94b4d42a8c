"""Bijection kernels on one-line tuples.

The compiled module is used when it was built; otherwise the pure-Python
one.  Set ``NONDERANGEMENTS_PURE=1`` to force the fallback.
"""

import os

from . import pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("NONDERANGEMENTS_PURE"):
    active = compiled
else:
    active = pure

BACKEND = active.BACKEND

phi = active.phi
phi_inverse = active.phi_inverse
split = active.split
split_inverse = active.split_inverse
varphi = active.varphi
varphi_inverse = active.varphi_inverse
varphi_alt = active.varphi_alt
varphi_alt_inverse = active.varphi_alt_inverse
theta = active.theta
theta_inverse = active.theta_inverse

__all__ = [
    "BACKEND",
    "pure",
    "compiled",
    "active",
    "phi",
    "phi_inverse",
    "split",
    "split_inverse",
    "varphi",
    "varphi_inverse",
    "varphi_alt",
    "varphi_alt_inverse",
    "theta",
    "theta_inverse",
]

"""Backend selection for the transition-map kernels.

At import time the compiled extension is preferred; the pure-Python
implementation is the fallback and can be forced with the environment
variable ``B2CRYSTAL_PURE=1``.  ``BACKEND`` names the active choice.
Callers should access the functions through this module (not bind them at
import) so that ``force_backend`` affects them; the navigation code in
`b2crystal.pbw` does exactly that.
"""

import os

from . import _kernel_py

_IMPLS = {"python": (_kernel_py.r_transfer, _kernel_py.r_inverse)}

try:
    from . import _kernel_c

    _IMPLS["cython"] = (_kernel_c.r_transfer, _kernel_c.r_inverse)
except ImportError:
    pass

if os.environ.get("B2CRYSTAL_PURE") == "1" or "cython" not in _IMPLS:
    BACKEND = "python"
else:
    BACKEND = "cython"

r_transfer, r_inverse = _IMPLS[BACKEND]


def available_backends():
    """Names of importable kernel implementations."""
    return sorted(_IMPLS)


def force_backend(name):
    """Rebind the module-level kernels; returns the previous backend name.

    Meant for the benchmark and for cross-backend tests.
    """
    global BACKEND, r_transfer, r_inverse
    if name not in _IMPLS:
        raise ValueError(f"unknown backend {name!r}; have {available_backends()}")
    previous = BACKEND
    BACKEND = name
    r_transfer, r_inverse = _IMPLS[name]
    return previous

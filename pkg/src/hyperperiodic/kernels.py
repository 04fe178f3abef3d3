"""Backend selection for the integer kernels.

The compiled extension ``_ckernels`` is used when it was built and imports
cleanly; otherwise the pure-Python ``_pykernels`` is used. Setting
``HYPERPERIODIC_PURE_PYTHON=1`` forces the fallback. Inputs too large for
64-bit arithmetic always take the pure-Python path, so results stay exact.
"""
import os

from . import _pykernels

if os.environ.get("HYPERPERIODIC_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_C_LIMIT = 1 << 26


def _use_compiled(*bounds):
    return _compiled is not None and all(0 <= b < _C_LIMIT for b in bounds)


def reduce_letters(letters):
    if _compiled is not None:
        try:
            return _compiled.reduce_letters(letters)
        except OverflowError:
            pass
    return _pykernels.reduce_letters(letters)


def element_order(moduli, h):
    if _use_compiled(*moduli):
        return _compiled.element_order(moduli, h)
    return _pykernels.element_order(moduli, h)


def cone_orbits(moduli, h, cones):
    if _use_compiled(moduli[0] * moduli[1]):
        return _compiled.cone_orbits(moduli, h, cones)
    return _pykernels.cone_orbits(moduli, h, cones)


def vertex_classes(m, pairing):
    if _use_compiled(m):
        return _compiled.vertex_classes(m, pairing)
    return _pykernels.vertex_classes(m, pairing)

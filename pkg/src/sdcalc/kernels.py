"""Backend selection for the exact inner loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise
(or when ``SDCALC_PURE_PYTHON`` is set to a non-empty value) the
pure-Python ``_pykernels`` module is used. Both expose the same three
functions and return identical values.
"""
import os

BACKEND = "python"

if not os.environ.get("SDCALC_PURE_PYTHON"):
    try:
        from sdcalc._ckernels import composition_sum, series_inverse, series_mul
    except ImportError:
        pass
    else:
        BACKEND = "cython"

if BACKEND == "python":
    from sdcalc._pykernels import composition_sum, series_inverse, series_mul

__all__ = ["BACKEND", "composition_sum", "series_inverse", "series_mul"]

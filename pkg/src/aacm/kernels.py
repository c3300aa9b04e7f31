"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``AACM_PURE=1`` to force the
pure-Python implementation.
"""

import os

from . import _pykernels

if os.environ.get("AACM_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

cf_unit_mod = _impl.cf_unit_mod
kronecker_table = _impl.kronecker_table

# the compiled variants work in int64 with p < 2^31
_P_LIMIT = 1 << 31


def bernoulli_table_mod_p(nmax, p):
    if p >= _P_LIMIT:
        return _pykernels.bernoulli_table_mod_p(nmax, p)
    return _impl.bernoulli_table_mod_p(nmax, p)


def fermat_quotient_sum(table, p, F):
    if p >= _P_LIMIT:
        return _pykernels.fermat_quotient_sum(table, p, F)
    return _impl.fermat_quotient_sum(table, p, F)


def cf_unit_mod_checked(d, modulus, period_bound):
    if d >= 1 << 61 or modulus >= 1 << 64:
        return _pykernels.cf_unit_mod(d, modulus, period_bound)
    return cf_unit_mod(d, modulus, period_bound)

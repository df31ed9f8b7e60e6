"""Kernel selection: compiled accelerator when importable, pure Python otherwise.

Set ``SEAWEEDS_BACKEND=python`` or ``SEAWEEDS_BACKEND=c`` to force a choice
(forcing ``c`` raises if the extension was not built).  Both backends are
exact and produce identical output; only speed differs.
"""

import os

_choice = os.environ.get("SEAWEEDS_BACKEND", "").lower()

if _choice in ("python", "py"):
    from . import _exactkernel_py as _impl
elif _choice in ("c", "cython", "compiled"):
    from . import _exactkernel as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _exactkernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _exactkernel_py as _impl

BACKEND_NAME = _impl.BACKEND_NAME
rank_int_rows = _impl.rank_int_rows
rref_int_rows = _impl.rref_int_rows

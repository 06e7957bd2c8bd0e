"""Kernel backend selection.

The compiled Cython module is preferred when importable; the numpy/Python
fallback is used otherwise. PADEKIT_BACKEND=python|compiled forces a choice
(forcing "compiled" when the extension is absent raises at import).
"""

import os

_requested = os.environ.get("PADEKIT_BACKEND", "").strip().lower()

if _requested in ("python", "py"):
    from . import _kernels_py as kernels
elif _requested in ("compiled", "c"):
    from . import _kernels_c as kernels  # type: ignore[no-redef]
elif _requested == "":
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels
else:
    raise ImportError(f"unknown PADEKIT_BACKEND={_requested!r}")

BACKEND = kernels.BACKEND_NAME

horner_many = kernels.horner_many
shift_center = kernels.shift_center
rational_taylor = kernels.rational_taylor
conv_trunc = kernels.conv_trunc
lu_det = kernels.lu_det
lu_solve_det = kernels.lu_solve_det

"""Backend selection and orchestration for the search kernels.

The compiled backend (``_fastcore``) is used when it built successfully
and the instance fits in 64-bit masks; otherwise the pure-Python
reference backend handles the call.  Both return identical values, so
callers never observe which one ran.  Set ``POCGRAPH_BACKEND=pure`` (or
call :func:`set_backend`) to force the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _pykernels as _pure

try:
    from . import _fastcore as _fast
except ImportError:  # extension not built; pure backend serves everything
    _fast = None

_MODES = ("auto", "pure", "compiled")
_mode = os.environ.get("POCGRAPH_BACKEND", "auto")
if _mode not in _MODES:
    raise RuntimeError(f"POCGRAPH_BACKEND must be one of {_MODES}, got {_mode!r}")
if _mode == "compiled" and _fast is None:
    raise RuntimeError("POCGRAPH_BACKEND=compiled but the extension is not built")


def set_backend(mode: str) -> None:
    global _mode
    if mode not in _MODES:
        raise ValueError(f"backend must be one of {_MODES}")
    if mode == "compiled" and _fast is None:
        raise RuntimeError("compiled backend is not available")
    _mode = mode


def compiled_available() -> bool:
    return _fast is not None


def backend_name(n: Optional[int] = None) -> str:
    """Backend that would serve an n-vertex call (overall default if n is None)."""
    if _mode == "pure" or _fast is None:
        return "pure"
    if n is not None and n > 64:
        return "pure"
    return "compiled"


def _impl(n: int):
    if _mode != "pure" and _fast is not None and n <= 64:
        return _fast
    return _pure


# -- primitive kernels -------------------------------------------------------

def vc_solve(rows: Sequence[int], n: int, forced_in: int = 0, forced_out: int = 0,
             bound: Optional[int] = None) -> Optional[tuple[int, int]]:
    return _impl(n).vc_solve(rows, n, forced_in, forced_out, bound)


def cvc_exists(rows: Sequence[int], n: int, k: int, forced_in: int = 0,
               forced_out: int = 0) -> Optional[int]:
    return _impl(n).cvc_exists(rows, n, k, forced_in, forced_out)


def canon_key(rows: Sequence[int], n: int) -> bytes:
    return _impl(n).canon_key(rows, n)


def induced_embedding(host_rows: Sequence[int], hn: int, pat_rows: Sequence[int],
                      pn: int, order: Sequence[int]) -> Optional[tuple[int, ...]]:
    return _impl(hn).induced_embedding(host_rows, hn, pat_rows, pn, order)


# -- derived solvers ---------------------------------------------------------

def vc_min(rows: Sequence[int], n: int) -> tuple[int, int]:
    """(tau, witness) where the witness is the minimum-bitmask optimal cover.

    The witness is refined bit by bit from the highest vertex down: a set
    bit is cleared whenever some optimal cover avoids that vertex, which
    yields the numerically smallest witness mask.
    """
    tau, w = vc_solve(rows, n)  # type: ignore[misc]
    fin = 0
    fout = 0
    for i in range(n - 1, -1, -1):
        bit = 1 << i
        if w & bit:
            alt = vc_solve(rows, n, forced_in=fin, forced_out=fout | bit, bound=tau)
            if alt is None:
                fin |= bit
            else:
                w = alt[1]
                fout |= bit
        else:
            fout |= bit
    return tau, w


def cvc_value(rows: Sequence[int], n: int, tau: Optional[int] = None) -> int:
    """tau_c of a connected graph with at least one edge (no witness).

    Iterative deepening from tau; the search is capped at 2*tau - 1,
    which every connected graph satisfies.
    """
    if tau is None:
        tau = vc_solve(rows, n)[0]  # type: ignore[index]
    for k in range(tau, 2 * tau):
        if cvc_exists(rows, n, k) is not None:
            return k
    raise AssertionError("connected vertex cover exceeded 2*tau - 1")


def cvc_min(rows: Sequence[int], n: int) -> tuple[int, int]:
    """(tau_c, witness) for a connected graph with at least one edge."""
    tau = vc_solve(rows, n)[0]  # type: ignore[index]
    for k in range(tau, 2 * tau):
        w = cvc_exists(rows, n, k)
        if w is None:
            continue
        fin = 0
        fout = 0
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if w & bit:
                alt = cvc_exists(rows, n, k, forced_in=fin, forced_out=fout | bit)
                if alt is None:
                    fin |= bit
                else:
                    w = alt
                    fout |= bit
            else:
                fout |= bit
        return k, w
    raise AssertionError("connected vertex cover exceeded 2*tau - 1")

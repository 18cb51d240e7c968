"""Backend selection for the integer kernels.

The compiled extension ``_ckernels`` is used when it was built; otherwise
(or when ``HOPFSMASH_PURE_PYTHON`` is set) the pure-Python module is used.
Calls that overflow int64 in the compiled path are transparently rerun on
the pure-Python path, so results never depend on the backend.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from types import ModuleType
from typing import Iterator

from . import _pykernels

_ckernels: ModuleType | None
try:
    if os.environ.get("HOPFSMASH_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced by environment")
    from . import _ckernels  # type: ignore[attr-defined,no-redef]
except ImportError:
    _ckernels = None

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels


def backend() -> str:
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def set_backend(name: str) -> None:
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}") from None


@contextmanager
def use_backend(name: str) -> Iterator[None]:
    previous = backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _dispatch(name: str, *args):
    if _active is not _pykernels:
        try:
            return getattr(_active, name)(*args)
        except OverflowError:
            pass
    return getattr(_pykernels, name)(*args)


def matmul(a, b, r, s, t, phi, red) -> list[int]:
    return _dispatch("matmul", a, b, r, s, t, phi, red)


def kron(a, b, ra, ca, rb, cb, phi, red) -> list[int]:
    return _dispatch("kron", a, b, ra, ca, rb, cb, phi, red)


def convolve(f, g, d, phi, red, cidx, cval, moff, mtgt, mval) -> list[int]:
    return _dispatch("convolve", f, g, d, phi, red, cidx, cval, moff, mtgt, mval)

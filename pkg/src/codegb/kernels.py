"""Kernel backend selection.

The compiled extension is used when it imported and the problem fits its
fixed-width integers; otherwise the pure-Python module runs.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_default = "cython" if _ckernels is not None else "python"


def default_backend() -> str:
    return _default


def set_default_backend(name: str) -> None:
    global _default
    if name not in BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}")
    _default = name


def fglm_backend(n: int, name: str | None = None) -> ModuleType:
    mod = BACKENDS[name or _default]
    if mod is _ckernels and n > _ckernels.MAX_FGLM_N:
        return _pykernels
    return mod


def reduce_backend(n: int, name: str | None = None) -> ModuleType:
    mod = BACKENDS[name or _default]
    if mod is _ckernels and n > _ckernels.MAX_REDUCE_N:
        return _pykernels
    return mod

"""Kernel backend selection.

The split-enumeration kernel exists twice: a compiled Cython extension
(cvckit._kernel) and a pure-Python twin (cvckit._pykernel). The compiled one
is picked at import when available; CVCKIT_BACKEND=py|c forces a choice, and
callers may override per call.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _kernel  # compiled extension

    HAVE_C_KERNEL = True
except ImportError:  # pragma: no cover - depends on the build
    _kernel = None
    HAVE_C_KERNEL = False


def default_backend() -> str:
    env = os.environ.get("CVCKIT_BACKEND", "").strip().lower()
    if env in ("c", "py"):
        return env
    return "c" if HAVE_C_KERNEL else "py"


def resolve_backend(name: str | None = None):
    """Return (name, module) for the requested or default backend."""
    name = (name or default_backend()).lower()
    if name == "auto":
        name = "c" if HAVE_C_KERNEL else "py"
    if name == "c":
        if not HAVE_C_KERNEL:
            raise RuntimeError("compiled kernel not available; rebuild or use backend 'py'")
        return "c", _kernel
    if name == "py":
        return "py", _pykernel
    raise ValueError(f"unknown backend {name!r}")

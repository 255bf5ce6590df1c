"""Kernel backend chosen at import: the compiled extension when it was
built, otherwise the pure-Python module with the same functions."""

from . import _kernels_py

try:
    from . import _kernels as _active
    BACKEND = "cython"
except ImportError:  # extension not built
    _active = _kernels_py
    BACKEND = "python"

find_repetition = _active.find_repetition
square_runs = _active.square_runs
max_repetition = _active.max_repetition
min_length = _kernels_py.min_length


def available_backends():
    """Map of backend name to kernel module, for benchmarks and tests."""
    out = {"python": _kernels_py}
    if BACKEND == "cython":
        out["cython"] = _active
    return out

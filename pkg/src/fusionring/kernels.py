"""Backend selection for the straightening kernel.

Imports the compiled extension when present, otherwise the pure-Python
reference; both expose the same `straighten_core`.  `BACKEND` records which
one was picked (the benchmark and the equivalence tests use both explicitly).
"""

from . import _kernels_py

try:
    from . import _speedups as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    _impl = _kernels_py
    BACKEND = "python"

straighten_core = _impl.straighten_core
straighten_core_policy = _kernels_py.straighten_core_policy

"""Order-preserving distribution of independent work across processes.

Outputs are byte-identical for every worker count: items are mapped in
input order and workers receive pure functions of their items. Shared
read-only state rides through fork as a module-level context object so
it is not re-pickled per item.
"""

from __future__ import annotations

import os
from multiprocessing import get_context

_CONTEXT = None


def default_workers() -> int:
    raw = os.environ.get("RIGIDKIT_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def get_shared_context():
    return _CONTEXT


def _set_context(obj):
    global _CONTEXT
    _CONTEXT = obj


def parallel_map(fn, items, workers: int | None = None, shared=None) -> list:
    """Map fn over items, optionally across processes. fn must be picklable
    (module-level); shared is exposed to workers via get_shared_context()."""
    items = list(items)
    w = default_workers() if workers is None else max(1, workers)
    _set_context(shared)
    try:
        if w <= 1 or len(items) <= 1:
            return [fn(x) for x in items]
        ctx = get_context("fork")
        with ctx.Pool(min(w, len(items))) as pool:
            return pool.map(fn, items)
    finally:
        _set_context(None)

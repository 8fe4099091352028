"""Structured-parallelism layer: deterministic parallel map and reduce.

All analysis modules fan work out over integer index ranges through this
module; it is the only place worker threads are created.  Ranges are
inclusive on both ends.  Work is split into fixed chunks of size
ceil(range / workers), so results are reproducible for a given worker
count, and :func:`parallel_map` output is identical to a sequential loop
for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

WORKERS_ENV = "NETMINE_WORKERS"


@dataclass(frozen=True)
class ReductionOp:
    """Associative binary operation with its identity element."""

    fn: callable
    identity: object


ADD = ReductionOp(lambda a, b: a + b, 0)
MULTIPLY = ReductionOp(lambda a, b: a * b, 1)
MAX = ReductionOp(max, float("-inf"))
MIN = ReductionOp(min, float("inf"))


@dataclass
class SchedulerConfig:
    """Worker count and chunking granularity for one parallel call."""

    workers: int = 0
    chunk_size: int = 0

    def __post_init__(self):
        if self.workers == 0:
            self.workers = default_workers()
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


_active_workers = None


def default_workers():
    """Configured worker count: explicit override, else NETMINE_WORKERS, else CPU count."""
    if _active_workers is not None:
        return _active_workers
    env = os.environ.get(WORKERS_ENV)
    if env:
        workers = int(env)
        if workers < 1:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {env!r}")
        return workers
    return os.cpu_count() or 1


def configure(workers=None):
    """Set (or with None, clear) the process-wide worker count override."""
    global _active_workers
    if workers is not None and workers < 1:
        raise ValueError("worker count must be >= 1")
    _active_workers = workers


def _chunks(lo, hi, config):
    size = hi - lo + 1
    chunk = config.chunk_size or -(-size // config.workers)
    bounds = []
    start = lo
    while start <= hi:
        end = min(start + chunk - 1, hi)
        bounds.append((start, end))
        start = end + 1
    return bounds


def parallel_map(lo, hi, fn, config=None):
    """Evaluate ``fn`` over lo..hi inclusive; result[i-lo] = fn(i).

    Identical to the sequential loop for any worker count.  If any call
    raises, the error for the smallest failing index is re-raised.
    """
    if lo > hi + 1:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    if lo > hi:
        return []
    config = config or SchedulerConfig()
    bounds = _chunks(lo, hi, config)
    if config.workers == 1 or len(bounds) == 1:
        return [fn(i) for i in range(lo, hi + 1)]

    def run_chunk(start, end):
        out = []
        for i in range(start, end + 1):
            try:
                out.append(fn(i))
            except Exception as exc:  # noqa: BLE001 - reported by index below
                return out, (i, exc)
        return out, None

    results = [None] * (hi - lo + 1)
    failures = []
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = [(start, pool.submit(run_chunk, start, end)) for start, end in bounds]
        for start, future in futures:
            out, failure = future.result()
            results[start - lo:start - lo + len(out)] = out
            if failure:
                failures.append(failure)
    if failures:
        index, exc = min(failures, key=lambda f: f[0])
        raise exc
    return results


def parallel_reduce(fn, op, lo, hi, config=None):
    """Chunked left fold of ``fn(lo..hi)`` under ``op``.

    Equals the sequential fold up to floating-point reassociation, and
    bitwise-exactly when ``op`` is exact on the inputs.  Empty ranges
    return the identity.
    """
    if lo > hi + 1:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    if lo > hi:
        return op.identity
    config = config or SchedulerConfig()
    bounds = _chunks(lo, hi, config)

    def fold_chunk(start, end):
        value = op.identity
        for i in range(start, end + 1):
            value = op.fn(value, fn(i))
        return value

    if config.workers == 1 or len(bounds) == 1:
        return fold_chunk(lo, hi)
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        partials = list(pool.map(lambda b: fold_chunk(*b), bounds))
    value = op.identity
    for partial in partials:
        value = op.fn(value, partial)
    return value


def map_accumulate(lo, hi, fn, combine, initial, config=None):
    """Map in parallel, then fold the results sequentially in index order.

    The fold order never depends on the worker count, so floating-point
    accumulations are bitwise identical for 1..w workers.
    """
    total = initial
    for value in parallel_map(lo, hi, fn, config):
        total = combine(total, value)
    return total

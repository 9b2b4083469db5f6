"""Backend selection for the exhaustive GF(p) sweep.

The compiled kernel (``leibkit._sweep``) is used when it imports; otherwise, or
when ``LEIBKIT_PURE_PYTHON=1`` is set, the pure-Python mirror runs instead.
Both return identical results in identical order.
"""
from __future__ import annotations

import multiprocessing
import os

import numpy as np

from . import _sweep_py
from .guard import get_workers

MODE_ALL = _sweep_py.MODE_ALL
MODE_SUBALGEBRA = _sweep_py.MODE_SUBALGEBRA
MODE_IDEAL = _sweep_py.MODE_IDEAL

try:
    if os.environ.get("LEIBKIT_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from ._sweep import sweep as _sweep_c
    BACKEND = "cython"
except ImportError:
    _sweep_c = None
    BACKEND = "python"

# top-level ordinals handed to one streaming chunk
CHUNK = 256


def available_backends():
    return ["python"] + (["cython"] if _sweep_c is not None else [])


def top_level_count(p: int, n: int) -> int:
    """Number of first-row choices: the points of projective (n-1)-space."""
    return (p**n - 1) // (p - 1)


def _flat_tensor(sc, n):
    if sc is None:
        return np.zeros(0, dtype=np.int_)
    arr = np.asarray(sc, dtype=np.int_).reshape(-1)
    if arr.size != n**3:
        raise ValueError("structure tensor has the wrong size")
    return np.ascontiguousarray(arr)


def sweep(sc, p, n, k, mode, lo=0, hi=None, backend=None):
    """Accepted k-row RREF matrices with top-level ordinal in ``[lo, hi)``.

    ``sc`` is the flattened n*n*n tensor of residues (ignored for MODE_ALL).
    Returns a list of row tuples, each a tuple of k tuples.
    """
    if k == 0:
        return [()] if lo == 0 else []
    total = top_level_count(p, n)
    hi = total if hi is None else min(hi, total)
    backend = backend or BACKEND
    flat = _flat_tensor(sc, n)
    if backend == "cython" and p <= 255 and n <= 62:
        raw = np.frombuffer(_sweep_c(flat, p, n, k, mode, lo, hi), dtype=np.uint8)
        mats = raw.reshape(-1, k, n).tolist()
    else:
        data = _sweep_py.sweep(flat.tolist(), p, n, k, mode, lo, hi)
        mats = np.asarray(data, dtype=np.int64).reshape(-1, k, n).tolist()
    return [tuple(map(tuple, m)) for m in mats]


def _shard(args):
    return sweep(*args)


def sweep_all(sc, p, n, k, mode, workers=None, backend=None):
    """Full sweep, optionally split over worker processes.

    The ordinal range is cut into contiguous pieces whose results are
    concatenated in order, so output is independent of the worker count.
    """
    workers = workers or get_workers()
    if k == 0 or workers <= 1:
        return sweep(sc, p, n, k, mode, backend=backend)
    total = top_level_count(p, n)
    step = -(-total // workers)
    flat = _flat_tensor(sc, n).tolist()
    jobs = [(flat, p, n, k, mode, lo, min(lo + step, total), backend) for lo in range(0, total, step)]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        parts = pool.map(_shard, jobs)
    return [m for part in parts for m in part]


def iter_sweep(sc, p, n, k, mode, backend=None):
    """Stream the sweep in canonical order, a chunk of first rows at a time."""
    if k == 0:
        yield ()
        return
    total = top_level_count(p, n)
    for lo in range(0, total, CHUNK):
        yield from sweep(sc, p, n, k, mode, lo, lo + CHUNK, backend=backend)

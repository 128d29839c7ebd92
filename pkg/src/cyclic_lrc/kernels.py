"""Hot enumeration kernels for exhaustive code scans.

Enumerating all q**k messages of a linear code dominates the runtime of the
oracles in this package (several million codewords for the larger desk-scale
instances), so the inner loops live here in two interchangeable backends:

* a numba ``@njit`` odometer loop that updates the running codeword
  incrementally as the message counter steps (the default), and
* a pure-numpy chunked path that materializes codeword blocks with
  table-gather indexing.

The backend is chosen by the ``CYCLIC_LRC_BACKEND`` environment variable:
``numba``, ``numpy``, or ``auto`` (default: numba when importable).  Both
backends scan the same message sequence: message t has symbol j equal to the
field element of index ``(t // q**j) % q``, for t = 1..count.

Field arithmetic is table-driven: elements are their canonical indices and
add/sub/mul are q-by-q int16 lookup tables, which keeps one code path for
prime and extension fields alike.  Tables are only built for q up to
``TABLE_LIMIT``; exhaustive scans over larger alphabets are out of scope.
"""

from __future__ import annotations

import functools
import os
from typing import Sequence

import numpy as np

from .field import FieldElement, FiniteField

TABLE_LIMIT = 1024
BACKEND_ENV = "CYCLIC_LRC_BACKEND"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def active_backend() -> str:
    """Resolve the enumeration backend from the environment."""
    choice = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if choice in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("CYCLIC_LRC_BACKEND=numba but numba is not importable")
        return "numba"
    if choice == "numpy":
        return "numpy"
    raise ValueError(f"unknown {BACKEND_ENV} value: {choice!r}")


@functools.lru_cache(maxsize=None)
def op_tables(field: FiniteField) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(add, sub, mul) index tables for a field, as q x q int16 arrays."""
    q = field.q
    if q > TABLE_LIMIT:
        raise ValueError(
            f"field order {q} exceeds the enumeration table limit {TABLE_LIMIT}"
        )
    elems = [field.from_index(i) for i in range(q)]
    add = np.empty((q, q), dtype=np.int16)
    sub = np.empty((q, q), dtype=np.int16)
    mul = np.empty((q, q), dtype=np.int16)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            add[i, j] = (a + b).index
            sub[i, j] = (a - b).index
            mul[i, j] = (a * b).index
    add.setflags(write=False)
    sub.setflags(write=False)
    mul.setflags(write=False)
    return add, sub, mul


def matrix_indices(rows: Sequence[Sequence[FieldElement]]) -> np.ndarray:
    """Element rows to an int16 index matrix for the kernels."""
    return np.array([[e.index for e in row] for row in rows], dtype=np.int16)


def message_symbols(field: FiniteField, t: int, k: int) -> tuple[FieldElement, ...]:
    """Message with counter t in the enumeration order used by the kernels."""
    q = field.q
    out = []
    for _ in range(k):
        t, d = divmod(t, q)
        out.append(field.from_index(d))
    return tuple(out)


# ---------------------------------------------------------------------------
# Kernel implementations.  Each exists twice: a loop version (numba-compiled
# when available) and a vectorized numpy version; tests pin their agreement.


def _scan_min_weight_loop(gmat, add_t, sub_t, mul_t, q, count):
    k, n = gmat.shape
    digits = np.zeros(k, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int16)
    best = n + 1
    for _ in range(count):
        j = 0
        while True:
            old = digits[j]
            new = old + 1
            if new == q:
                new = 0
            digits[j] = new
            diff = sub_t[new, old]
            for c in range(n):
                gv = gmat[j, c]
                if gv != 0:
                    cw[c] = add_t[cw[c], mul_t[diff, gv]]
            if new != 0:
                break
            j += 1
        w = 0
        for c in range(n):
            if cw[c] != 0:
                w += 1
        if w < best:
            best = w
    return best


def _scan_witness_loop(gmat, add_t, sub_t, mul_t, q, count, max_weight):
    k, n = gmat.shape
    digits = np.zeros(k, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int16)
    witness = np.full(n, -1, dtype=np.int64)
    remaining = n
    t = 0
    for _ in range(count):
        t += 1
        j = 0
        while True:
            old = digits[j]
            new = old + 1
            if new == q:
                new = 0
            digits[j] = new
            diff = sub_t[new, old]
            for c in range(n):
                gv = gmat[j, c]
                if gv != 0:
                    cw[c] = add_t[cw[c], mul_t[diff, gv]]
            if new != 0:
                break
            j += 1
        w = 0
        for c in range(n):
            if cw[c] != 0:
                w += 1
        if 0 < w <= max_weight:
            for c in range(n):
                if cw[c] != 0 and witness[c] < 0:
                    witness[c] = t
                    remaining -= 1
            if remaining == 0:
                break
    return witness


if HAVE_NUMBA:
    _scan_min_weight_numba = njit(cache=True)(_scan_min_weight_loop)
    _scan_witness_numba = njit(cache=True)(_scan_witness_loop)


_CHUNK = 1 << 15


def _codeword_block(gmat, add_t, mul_t, q, t0, t1):
    """Codeword index matrix for messages t0..t1-1, shape (t1-t0, n)."""
    k, n = gmat.shape
    t = np.arange(t0, t1, dtype=np.int64)
    cw = np.zeros((t.size, n), dtype=np.int16)
    for j in range(k):
        digit = (t // q**j) % q
        cw = add_t[cw, mul_t[digit[:, None], gmat[j][None, :]]]
    return cw


def _scan_min_weight_numpy(gmat, add_t, sub_t, mul_t, q, count):
    n = gmat.shape[1]
    best = n + 1
    start = 1
    while start <= count:
        stop = min(start + _CHUNK, count + 1)
        cw = _codeword_block(gmat, add_t, mul_t, q, start, stop)
        best = min(best, int(np.count_nonzero(cw, axis=1).min()))
        start = stop
    return best


def _scan_witness_numpy(gmat, add_t, sub_t, mul_t, q, count, max_weight):
    n = gmat.shape[1]
    witness = np.full(n, -1, dtype=np.int64)
    start = 1
    while start <= count:
        stop = min(start + _CHUNK, count + 1)
        cw = _codeword_block(gmat, add_t, mul_t, q, start, stop)
        weights = np.count_nonzero(cw, axis=1)
        for row in np.nonzero((weights > 0) & (weights <= max_weight))[0]:
            hit = False
            for c in np.nonzero(cw[row])[0]:
                if witness[c] < 0:
                    witness[c] = start + int(row)
                    hit = True
            if hit and (witness >= 0).all():
                return witness
        start = stop
    return witness


# ---------------------------------------------------------------------------
# Public entry points.


def _prepare(matrix: np.ndarray, field: FiniteField):
    if matrix.ndim != 2 or matrix.shape[0] == 0:
        raise ValueError("kernel scans need a nonempty 2-d generator matrix")
    add_t, sub_t, mul_t = op_tables(field)
    return matrix.astype(np.int16, copy=False), add_t, sub_t, mul_t


def min_nonzero_weight(matrix: np.ndarray, field: FiniteField, count: int) -> int:
    """Minimum Hamming weight over the codewords of messages 1..count.

    ``matrix`` holds the generator rows as element indices.  The result is
    independent of backend; with ``count == q**k - 1`` it is the exact
    minimum distance of the row space.
    """
    gmat, add_t, sub_t, mul_t = _prepare(matrix, field)
    if count < 1:
        raise ValueError("at least one message must be scanned")
    if count > field.q ** matrix.shape[0] - 1:
        raise ValueError("count exceeds the number of nonzero messages")
    if active_backend() == "numba":
        return int(_scan_min_weight_numba(gmat, add_t, sub_t, mul_t, field.q, count))
    return int(_scan_min_weight_numpy(gmat, add_t, sub_t, mul_t, field.q, count))


def covering_witnesses(
    matrix: np.ndarray, field: FiniteField, max_weight: int, count: int
) -> np.ndarray:
    """Per-coordinate witness search over the row space.

    Scans messages 1..count and returns, for every coordinate c, the first
    message counter whose codeword has nonzero weight <= max_weight and is
    nonzero at c (-1 when no such codeword exists in the scanned range).
    """
    gmat, add_t, sub_t, mul_t = _prepare(matrix, field)
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return np.full(matrix.shape[1], -1, dtype=np.int64)
    if count > field.q ** matrix.shape[0] - 1:
        raise ValueError("count exceeds the number of nonzero messages")
    if active_backend() == "numba":
        return _scan_witness_numba(gmat, add_t, sub_t, mul_t, field.q, count, max_weight)
    return _scan_witness_numpy(gmat, add_t, sub_t, mul_t, field.q, count, max_weight)

"""Vectorized q-table recursion for large ideals.

Same recursion as ``wgraph.compute_q_table``, with each column held as a
sorted row-index array and a dense coefficient matrix (row r holds the
coefficients of q^0, q^1, ... of one polynomial). Columns of a length level
are only read while the next level is computed, so only two levels are kept
in memory. Edge weights feed the mu-sum through a CSR adjacency that is
extended one level at a time: every x in column m of a level-l column has
length at most l - 2.

For ideals whose two widest levels do not fit in memory, ``spill`` names a
directory where each level is streamed to a pair of flat files and read back
through ``numpy.memmap``.
"""
from __future__ import annotations

import logging
import os
import tempfile

import numpy as np

from .ideal import SA, SD, IdealTable
from .wgraph import NoStrongDescent, QTable

log = logging.getLogger(__name__)

COEFF_LIMIT = 1 << 52


def _tables(table: IdealTable):
    d = len(table)
    top = max(table.gens, default=0) + 1
    desc = np.zeros((top, d), dtype=bool)
    sap = np.full((top, d), -1, dtype=np.int64)
    for s in table.gens:
        kinds = table.kinds[s]
        partners = table.partners[s]
        desc[s] = [k in (SD, "WD") for k in kinds]
        sap[s] = [p if k == SA else -1 for k, p in zip(kinds, partners)]
    return desc, sap


def _choose(table: IdealTable, k: int, policy: str) -> tuple[int, int]:
    found = [s for s in table.gens if table.kinds[s][k] == SD]
    if not found:
        raise NoStrongDescent(f"element {table.elements[k]} has no strong descent")
    s = found[0] if policy == "first" else found[-1]
    m = table.partners[s][k]
    if m < 0:
        raise NoStrongDescent(f"partner of {table.elements[k]} under s{s} is missing")
    return s, m


class _Adjacency:
    """Lower edges j -> (x, weight) with j < x, as CSR over x, grown by index ranges."""

    def __init__(self, d: int):
        self.ptr = np.zeros(d + 1, dtype=np.int64)
        self.nbr = np.zeros(0, dtype=np.int64)
        self.wts = np.zeros(0, dtype=np.int64)
        self.filled = 0  # columns [0, filled) are in the CSR

    def extend(self, upto: int, pending: dict[int, tuple[np.ndarray, np.ndarray]]) -> None:
        nbrs, wts = [self.nbr], [self.wts]
        base = int(self.ptr[self.filled])
        for x in range(self.filled, upto):
            j, w = pending.pop(x, (None, None))
            if j is not None:
                nbrs.append(j)
                wts.append(w)
                base += len(j)
            self.ptr[x + 1] = base
        self.nbr = np.concatenate(nbrs)
        self.wts = np.concatenate(wts)
        self.filled = upto


class _MemoryLevel:
    def __init__(self):
        self.cols: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    def put(self, k, rows, C):
        self.cols[k] = (rows, C)

    def get(self, m):
        return self.cols[m]

    def seal(self):
        pass

    def close(self):
        self.cols.clear()


class _DiskLevel:
    """Columns of one length level in two append-only files (int32 rows and coefficients)."""

    def __init__(self, directory: str, level: int):
        self.base = os.path.join(directory, f"level{level}")
        self.fh = (open(self.base + ".rows", "wb"), open(self.base + ".coef", "wb"))
        self.index: dict[int, tuple[int, int, int, int]] = {}
        self.roff = self.coff = 0
        self.rows = self.coef = None

    def put(self, k, rows, C):
        if len(C) and np.abs(C).max() > np.iinfo(np.int32).max:
            raise OverflowError(f"coefficient in column {k} does not fit the int32 spill format")
        n, W = C.shape
        self.fh[0].write(rows.astype(np.int32).tobytes())
        self.fh[1].write(np.ascontiguousarray(C, dtype=np.int32).tobytes())
        self.index[k] = (self.roff, n, self.coff, W)
        self.roff += n
        self.coff += n * W

    def seal(self):
        for fh in self.fh:
            fh.close()
        self.rows = np.memmap(self.base + ".rows", np.int32, "r") if self.roff else np.zeros(0, np.int32)
        self.coef = np.memmap(self.base + ".coef", np.int32, "r") if self.coff else np.zeros(0, np.int32)

    def get(self, m):
        r, n, c, W = self.index[m]
        return (np.asarray(self.rows[r:r + n], dtype=np.int64),
                np.asarray(self.coef[c:c + n * W], dtype=np.int64).reshape(n, W))

    def close(self):
        if not self.fh[0].closed:
            self.seal()
        self.rows = self.coef = None
        for ext in (".rows", ".coef"):
            os.unlink(self.base + ext)


def _column(k, m, col_m, desc_s, sap_s, adj: _Adjacency):
    rows, C = col_m
    n, W = C.shape
    parts_r = [np.array([m], dtype=np.int64)]
    parts_c = [np.ones((1, 1), dtype=np.int64)]
    if n:
        dmask = desc_s[rows]
        amask = ~dmask
        ra, Ca = rows[amask], C[amask]
        if len(ra):
            # q * q_{y,w}
            parts_r.append(ra)
            parts_c.append(np.pad(Ca, ((0, 0), (1, 0))))
        if dmask.any() and W > 1:
            # -(q_{y,w} - mu_{y,w}) / q
            parts_r.append(rows[dmask])
            parts_c.append(-C[dmask][:, 1:])
        p = sap_s[rows]
        sel = p >= 0
        if sel.any():
            # q_{sy,w} for y = s*w_i with s a strong descent of y
            parts_r.append(p[sel])
            parts_c.append(C[sel])
        if len(ra):
            # mu(y,x) q_{x,w} over x with s not in D(x)
            starts = adj.ptr[ra]
            cnt = adj.ptr[ra + 1] - starts
            total = int(cnt.sum())
            if total:
                offs = np.repeat(starts - (np.cumsum(cnt) - cnt), cnt) + np.arange(total)
                j = adj.nbr[offs]
                keep = desc_s[j]
                if keep.any():
                    src = np.repeat(np.arange(len(ra)), cnt)[keep]
                    parts_r.append(j[keep])
                    parts_c.append(Ca[src] * adj.wts[offs][keep][:, None])
    width = max(c.shape[1] for c in parts_c)
    allr = np.concatenate(parts_r)
    allc = np.zeros((len(allr), width), dtype=np.int64)
    pos = 0
    for c in parts_c:
        allc[pos:pos + len(c), :c.shape[1]] = c
        pos += len(c)
    order = np.argsort(allr, kind="stable")
    allr = allr[order]
    allc = allc[order]
    first = np.flatnonzero(np.r_[True, allr[1:] != allr[:-1]])
    rows_k = allr[first]
    C_k = np.add.reduceat(allc, first, axis=0)
    nz = C_k.any(axis=1)
    rows_k, C_k = rows_k[nz], C_k[nz]
    if len(C_k):
        used = np.flatnonzero(C_k.any(axis=0))
        C_k = C_k[:, :used[-1] + 1]
        if np.abs(C_k).max() > COEFF_LIMIT:
            raise OverflowError(f"coefficient growth in column {k} exceeds the int64 safety margin")
    else:
        C_k = C_k[:, :0]
    return rows_k, C_k


def compute_q_table_bulk(table: IdealTable, policy: str = "first", keep: str = "mu",
                         progress: int = 0, spill: str | None = None) -> QTable:
    """Drop-in replacement for ``compute_q_table`` built on numpy arrays.

    ``spill`` is a directory for the disk-backed level store (a temporary
    subdirectory is created inside it and removed afterwards).
    """
    if spill is None:
        return _run(table, policy, keep, progress, lambda level: _MemoryLevel())
    with tempfile.TemporaryDirectory(prefix="wgraph-", dir=spill) as tmp:
        return _run(table, policy, keep, progress, lambda level: _DiskLevel(tmp, level))


def _run(table, policy, keep, progress, new_level) -> QTable:
    if policy not in ("first", "last"):
        raise ValueError("policy must be 'first' or 'last'")
    if keep not in ("all", "mu"):
        raise ValueError("keep must be 'all' or 'mu'")
    d = len(table)
    desc, sap = _tables(table)
    lengths = np.asarray(table.lengths)
    adj = _Adjacency(d)
    pending: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    mu: dict[tuple[int, int], int] = {}
    kept: list | None = [None] * d if keep == "all" else None
    # length level -> column store; only levels l - 1 and l are open
    levels: dict = {}
    if d:
        levels[0] = new_level(0)
        levels[0].put(0, np.zeros(0, dtype=np.int64), np.zeros((0, 0), dtype=np.int64))
        if kept is not None:
            kept[0] = {}
    level_start = {int(l): int(np.searchsorted(lengths, l)) for l in np.unique(lengths)}
    try:
        _sweep(table, policy, progress, d, lengths, level_start, levels, new_level,
               desc, sap, adj, pending, mu, kept)
    finally:
        for store in levels.values():
            store.close()
    return QTable(kept, mu, d)


def _sweep(table, policy, progress, d, lengths, level_start, levels, new_level,
           desc, sap, adj, pending, mu, kept):
    for k in range(1, d):
        l = int(lengths[k])
        if k == level_start[l]:
            # columns of length <= l - 2 are now final; their edges enter the CSR
            adj.extend(level_start.get(l - 1, k), pending)
            for x in [x for x in levels if x < l - 1]:
                levels.pop(x).close()
            if l - 1 in levels:
                levels[l - 1].seal()
            levels[l] = new_level(l)
        s, m = _choose(table, k, policy)
        rows_k, C_k = _column(k, m, levels[l - 1].get(m), desc[s], sap[s], adj)
        levels[l].put(k, rows_k, C_k)
        if len(rows_k):
            const = C_k[:, 0] if C_k.shape[1] else np.zeros(len(rows_k), dtype=np.int64)
            nz = const != 0
            if nz.any():
                j, w = rows_k[nz], const[nz]
                pending[k] = (j, w)
                for a, b in zip(j.tolist(), w.tolist()):
                    mu[a, k] = b
        if kept is not None:
            kept[k] = {int(j): tuple(int(c) for c in np.trim_zeros(row, "b"))
                       for j, row in zip(rows_k, C_k)}
        if progress and k % progress == 0:
            log.info("bulk q-table column %d/%d (length %d), %d edges", k, d, l, len(mu))

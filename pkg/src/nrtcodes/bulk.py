"""Vectorized enumeration of linear spans and weight arrays.

Exhaustive sweeps walk full spans of up to a few hundred thousand words;
these helpers keep that fast by working on (N, width) label arrays with
field lookup tables.  All arithmetic stays exact (integer labels).
"""

from __future__ import annotations

import numpy as np

from .gf import GF


def span_array(gf: GF, rows, width: int) -> np.ndarray:
    """All q^k combinations of the given flat rows, coefficient index m of
    combination i being digit m of i in base q (so prefixes of the output
    enumerate the spans of basis prefixes)."""
    q = gf.q
    k = len(rows)
    count = q ** k
    add_t = gf.add_table
    mul_t = gf.mul_table
    out = np.zeros((count, width), dtype=np.int16)
    idx = np.arange(count)
    for m, row in enumerate(rows):
        c = (idx // q ** m) % q
        scaled = mul_t[np.asarray(row, dtype=np.intp)[None, :], c[:, None]]
        out = add_t[out, scaled]
    return out


def nrt_weights(arr: np.ndarray, n: int, s: int) -> np.ndarray:
    """NRT weight of every word in an (N, n*s) or (N, n, s) label array."""
    a = arr.reshape(arr.shape[0], n, s) != 0
    pos = np.arange(1, s + 1)
    return (a * pos).max(axis=2).sum(axis=1)


def hamming_weights(arr: np.ndarray, n: int, s: int) -> np.ndarray:
    a = arr.reshape(arr.shape[0], n, s) != 0
    return a.sum(axis=(1, 2))


def weights(arr: np.ndarray, n: int, s: int, metric: str) -> np.ndarray:
    if metric == "nrt":
        return nrt_weights(arr, n, s)
    if metric == "hamming":
        return hamming_weights(arr, n, s)
    raise ValueError(f"unknown metric {metric!r}")


def encode(arr: np.ndarray, q: int) -> np.ndarray:
    """One int64 key per word; requires q^width < 2^62."""
    flat = arr.reshape(arr.shape[0], -1).astype(np.int64)
    if q ** flat.shape[1] >= 1 << 62:
        raise ValueError("word space too large to encode in 64 bits")
    return flat @ (q ** np.arange(flat.shape[1], dtype=np.int64))


def sub_anchor(gf: GF, arr: np.ndarray, anchor) -> np.ndarray:
    """arr - anchor, broadcast over all words."""
    neg = gf.neg_table[np.asarray(anchor, dtype=np.intp)]
    flat_neg = neg.reshape(1, -1)
    return gf.add_table[arr.reshape(arr.shape[0], -1), flat_neg]

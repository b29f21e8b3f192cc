"""Sphere and ball combinatorics of the NRT metric, brute-force distance
spectra, and the closed-form spectra of MDS codes and zero-deficiency nets.

All counting is done in unbounded Python integers; the closed forms can
legitimately go negative outside the existence range (that negativity is
exactly the nonexistence certificate), so nothing here clamps or gates
on q >= n - 1.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .words import Distribution


@lru_cache(maxsize=None)
def composition_count(parts: int, total: int, bound: int) -> int:
    """Compositions of `total` into exactly `parts` parts from 1..bound."""
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts or total > parts * bound:
        return 0
    return sum(composition_count(parts - 1, total - last, bound)
               for last in range(1, bound + 1))


def weak_composition_count(parts: int, total: int, bound: int) -> int:
    """Compositions of `total` into `parts` parts from 0..bound; equals the
    binomial-weighted sum of the exact-part counts."""
    return sum(math.comb(parts, l) * composition_count(l, total, bound)
               for l in range(0, parts + 1))


def sphere_size(r: int, n: int, s: int, q: int) -> int:
    """Number of words of Mat_{n,s}(F_q) of NRT weight exactly r."""
    if not 0 <= r <= n * s:
        raise ValueError("radius out of range")
    return sum(math.comb(n, l) * composition_count(l, r, s)
               * (q - 1) ** l * q ** (r - l)
               for l in range(0, min(n, r) + 1))


def ball_size(t: int, n: int, s: int, q: int) -> int:
    return sum(sphere_size(r, n, s, q) for r in range(0, min(t, n * s) + 1))


def distance_spectrum(dist: Distribution, anchor) -> list[int]:
    """Histogram (w_0, ..., w_ns) of NRT distances from `anchor`, which
    must itself belong to the distribution."""
    from . import bulk

    space = dist.space
    anchor = space.check_word(anchor)
    arr = dist.array().reshape(len(dist), -1)
    diffs = bulk.sub_anchor(space.gf, arr, space.flatten(anchor))
    rho = bulk.nrt_weights(diffs, space.n, space.s)
    out = [0] * (space.dim + 1)
    for r in rho:
        out[int(r)] += 1
    if out[0] == 0:
        raise ValueError("anchor is not a member of the distribution")
    return out


def mds_spectrum(n: int, s: int, k: int, q: int) -> list[int]:
    """Weight spectrum of any MDS code of dimension k in Mat_{n,s}(F_q):
    w_0 = 1, zero below the minimum weight ns-k+1, then the alternating
    double sum over part counts l and inclusion depth t."""
    if not 1 <= k <= n * s:
        raise ValueError("k out of range")
    rho = n * s - k + 1
    w = [0] * (n * s + 1)
    w[0] = 1
    for r in range(rho, n * s + 1):
        total = 0
        for l in range(1, n + 1):
            sig = composition_count(l, r, s)
            if not sig:
                continue
            inner = sum((-1) ** t * math.comb(l, t) * (q ** (r - rho + 1 - t) - 1)
                        for t in range(0, r - rho + 1))
            total += math.comb(n, l) * sig * inner
        w[r] = total
    return w


def mds_spectrum_alt(n: int, s: int, k: int, q: int) -> list[int]:
    """Same spectrum via the equivalent (q-1)-factored form."""
    if not 1 <= k <= n * s:
        raise ValueError("k out of range")
    rho = n * s - k + 1
    w = [0] * (n * s + 1)
    w[0] = 1
    for r in range(rho, n * s + 1):
        total = 0
        for l in range(1, n + 1):
            sig = composition_count(l, r, s)
            if not sig:
                continue
            inner = sum((-1) ** t * math.comb(l - 1, t) * q ** (r - rho - t)
                        for t in range(0, r - rho + 1))
            total += math.comb(n, l) * sig * inner
        w[r] = (q - 1) * total
    return w


def net_spectrum(n: int, s: int, q: int) -> list[int]:
    """Spectrum of a zero-deficiency net (the k = s case), with minimum
    weight (n-1)s + 1."""
    rho = (n - 1) * s + 1
    w = [0] * (n * s + 1)
    w[0] = 1
    for r in range(rho, n * s + 1):
        sig = weak_composition_count(n, r, s)
        inner = sum((-1) ** t * math.comb(n, t) * (q ** (r - rho + 1 - t) - 1)
                    for t in range(0, r - rho + 1))
        w[r] = sig * inner
    return w


def net_spectrum_alt(n: int, s: int, q: int) -> list[int]:
    """(q-1)-factored form of the net spectrum.  The printed source of
    this variant carries a sign typo; the alternating sign is intended."""
    rho = (n - 1) * s + 1
    w = [0] * (n * s + 1)
    w[0] = 1
    for r in range(rho, n * s + 1):
        sig = weak_composition_count(n, r, s)
        inner = sum((-1) ** t * math.comb(n - 1, t) * q ** (r - rho - t)
                    for t in range(0, r - rho + 1))
        w[r] = sig * (q - 1) * inner
    return w


def net_spectrum_tail(n: int, s: int, q: int, r: int) -> int:
    """Closed tail form, valid for r >= (n-1)s + n = rho + n - 1."""
    rho = (n - 1) * s + 1
    if r < rho + n - 1 or r > n * s:
        raise ValueError("r outside the tail range")
    return weak_composition_count(n, r, s) * (q - 1) ** n * q ** (r - rho - n + 1)


def mds_first_weight(n: int, s: int, k: int, q: int) -> int:
    """Spectrum entry at the minimum weight itself."""
    rho = n * s - k + 1
    return weak_composition_count(n, rho, s) * (q - 1)


def mds_next_weight(n: int, s: int, k: int, q: int) -> int:
    """Spectrum entry one above the minimum weight (needs rho + 1 <= ns)."""
    rho = n * s - k + 1
    if rho + 1 > n * s:
        raise ValueError("spectrum has no entry above the minimum weight")
    return (q - 1) * sum(math.comb(n, l) * (q + 1 - l)
                         * composition_count(l, rho + 1, s)
                         for l in range(1, n + 1))


def net_excess_weight(n: int, s: int, q: int) -> int:
    """k = s specialization of the entry above the minimum weight; its sign
    decides whether long zero-deficiency nets can exist (negative forces
    q < n - 1 to be impossible)."""
    if s < 2:
        raise ValueError("needs s > 1 so the entry exists")
    rho = (n - 1) * s + 1
    return (q - 1) * composition_count(n, rho + 1, s) * (q - n + 1)


def nets_exist(n: int, q: int) -> bool:
    """Existence condition q >= n-1 for arbitrarily long optimum
    distributions / zero-deficiency nets in dimension n over F_q."""
    return q >= n - 1


def ball_packing_ok(count: int, t: int, n: int, s: int, q: int) -> bool:
    """Packing bound: `count` disjoint balls of radius t fit in q^(ns)."""
    if t < 0:
        raise ValueError("radius must be nonnegative")
    return count * ball_size(t, n, s, q) <= q ** (n * s)

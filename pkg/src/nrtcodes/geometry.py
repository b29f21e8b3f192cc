"""Elementary boxes, net / optimum-distribution verification, and exact
star discrepancy.

Box membership is decided purely on digits: a point lies in the box with
side exponents A and positions M iff its leading a_j radix digits agree
with those of m_j / q^(a_j) in every coordinate.  Verification sweeps
enumerate side-exponent vectors A in colex order and positions M in
mixed-radix order, so failure reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import Distribution

DISCREPANCY_EVAL_BOUND = 10_000_000


@dataclass(frozen=True)
class ElementaryBox:
    """Anchored q-adic box: coordinate j spans [m_j/q^a_j, (m_j+1)/q^a_j)."""

    a: tuple[int, ...]
    m: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.m):
            raise ValueError("side and position vectors differ in length")
        for aj, mj in zip(self.a, self.m):
            if aj < 0 or mj < 0:
                raise ValueError("negative box parameters")

    def volume(self, q: int) -> Fraction:
        return Fraction(1, q ** sum(self.a))


def _anchor_digits(q: int, a: int, m: int) -> tuple[int, ...]:
    """Leading a radix digits of m / q^a, most significant first."""
    if m >= q ** a:
        raise ValueError("box position out of range")
    return tuple(m // q ** i % q for i in range(a - 1, -1, -1))


def box_contains(box: ElementaryBox, word, q: int, s: int) -> bool:
    for row, aj, mj in zip(word, box.a, box.m):
        digits = _anchor_digits(q, aj, mj)
        for i, want in enumerate(digits):
            # eta digit i+1 of the row; digits beyond the stored depth are 0
            have = row[s - 1 - i] if i < s else 0
            if have != want:
                return False
    return True


def box_count(dist: Distribution, box: ElementaryBox) -> int:
    space = dist.space
    if len(box.a) != space.n:
        raise ValueError("box dimension mismatch")
    return sum(1 for w in dist.words()
               if box_contains(box, w, space.q, space.s))


def bounded_compositions(total: int, parts: int, bound: int):
    """All (a_1..a_parts) with sum total and 0 <= a_j <= bound, colex order
    (last coordinate varies slowest)."""
    if parts == 1:
        if 0 <= total <= bound:
            yield (total,)
        return
    for last in range(min(total, bound) + 1):
        for head in bounded_compositions(total - last, parts - 1, bound):
            yield head + (last,)


@dataclass
class BoxReport:
    """Outcome of a box-count sweep; `box` is the first offending box."""

    ok: bool
    box: ElementaryBox | None = None
    count: int | None = None
    expected: int | None = None

    def __bool__(self):
        return self.ok


def _prefix_keys(dist: Distribution, a_vec) -> "object":
    """Vector of one composite key per point, combining the leading a_j
    digits per coordinate; boxes of the family correspond to key values."""
    import numpy as np

    space = dist.space
    q = space.q
    eta = dist.eta_array()
    keys = np.zeros(len(dist), dtype=np.int64)
    for j, a in enumerate(a_vec):
        depth = min(a, space.s)
        val = np.zeros(len(dist), dtype=np.int64)
        for i in range(depth):
            val = val * q + eta[:, j, i]
        val *= q ** (a - depth)  # digits past the stored depth are zero
        keys = keys * q ** a + val
    return keys


def _family_ok(dist: Distribution, a_vec, per_box: int) -> bool:
    import numpy as np

    _, counts = np.unique(_prefix_keys(dist, a_vec), return_counts=True)
    q = dist.space.q
    total_boxes = q ** sum(a_vec)
    if per_box == 0:
        return False
    # the length check catches empty boxes of the family
    return bool((counts == per_box).all()) and len(counts) * per_box == len(dist)


def _family_witness(dist: Distribution, a_vec, per_box: int, q: int) -> BoxReport:
    from collections import Counter
    from itertools import product

    space = dist.space
    counts = Counter()
    for w in dist.words():
        key = tuple(
            tuple((row[space.s - 1 - i] if i < space.s else 0) for i in range(a))
            for row, a in zip(w, a_vec)
        )
        counts[key] += 1
    for m_vec in product(*(range(q ** a) for a in reversed(a_vec))):
        m_vec = tuple(reversed(m_vec))
        key = tuple(_anchor_digits(q, a, m) for a, m in zip(a_vec, m_vec))
        c = counts.get(key, 0)
        if c != per_box:
            return BoxReport(False, ElementaryBox(tuple(a_vec), m_vec), c, per_box)
    return BoxReport(True)


def net_report(dist: Distribution, delta: int) -> BoxReport:
    """Check the defining property of a (delta, s, n)-net in base q: every
    elementary box of volume q^(delta-s) holds exactly q^delta points.
    The net parameter s is read off from the cardinality q^s."""
    space = dist.space
    q = space.q
    count = len(dist)
    s_net = 0
    while q ** s_net < count:
        s_net += 1
    if q ** s_net != count:
        raise ValueError("not q^s points")
    if not 0 <= delta <= s_net:
        raise ValueError("deficiency out of range")
    per_box = q ** delta
    for a_vec in bounded_compositions(s_net - delta, space.n, s_net - delta):
        if not _family_ok(dist, a_vec, per_box):
            return _family_witness(dist, a_vec, per_box, q)
    return BoxReport(True)


def is_net(dist: Distribution, delta: int) -> bool:
    return net_report(dist, delta).ok


def optimum_report(dist: Distribution, k: int, depth: int | None = None) -> BoxReport:
    """Check that every elementary box with side exponents summing to k
    (each at most `depth`, default the stored digit depth) holds exactly
    one of the q^k points."""
    space = dist.space
    q = space.q
    if len(dist) != q ** k:
        raise ValueError("not q^k points")
    depth = space.s if depth is None else depth
    if not 0 <= k <= space.n * depth:
        raise ValueError("k out of range")
    for a_vec in bounded_compositions(k, space.n, depth):
        if not _family_ok(dist, a_vec, 1):
            return _family_witness(dist, a_vec, 1, q)
    return BoxReport(True)


def is_optimum(dist: Distribution, k: int, depth: int | None = None) -> bool:
    return optimum_report(dist, k, depth).ok


def check_counts(dist: Distribution, k: int) -> BoxReport:
    """Full audit of an optimum distribution: boxes with small side sum
    hold exactly q^(k - sum), all others at most one point."""
    space = dist.space
    q = space.q
    if len(dist) != q ** k:
        raise ValueError("not q^k points")
    import numpy as np

    for total in range(0, space.n * space.s + 1):
        for a_vec in bounded_compositions(total, space.n, space.s):
            if total <= k:
                if not _family_ok(dist, a_vec, q ** (k - total)):
                    return _family_witness(dist, a_vec, q ** (k - total), q)
            else:
                _, counts = np.unique(_prefix_keys(dist, a_vec), return_counts=True)
                if not (counts <= 1).all():
                    return _overfull_witness(dist, a_vec, q)
    return BoxReport(True)


def _overfull_witness(dist: Distribution, a_vec, q: int) -> BoxReport:
    from collections import Counter

    space = dist.space
    counts = Counter()
    for w in dist.words():
        key = tuple(
            tuple((row[space.s - 1 - i] if i < space.s else 0) for i in range(a))
            for row, a in zip(w, a_vec)
        )
        counts[key] += 1
    for key, c in counts.items():
        if c > 1:
            m_vec = tuple(
                sum(d * q ** (len(digs) - 1 - i) for i, d in enumerate(digs))
                for digs in key
            )
            return BoxReport(False, ElementaryBox(tuple(a_vec), m_vec), c, 1)
    return BoxReport(True)


def net_from_optimum(dist: Distribution, k: int) -> tuple[int, int, int]:
    """Net parameters (delta, s, n) = (k - s, k, n) certified for an
    optimum distribution with s <= k, re-verified by box enumeration."""
    s = dist.space.s
    if k < s:
        raise ValueError("k < s: rescale to depth k instead")
    delta = k - s
    report = net_report(dist, delta)
    if not report.ok:
        raise ValueError(f"input is not a ({delta},{k},{dist.space.n})-net: "
                         f"box {report.box} holds {report.count}")
    return (delta, k, dist.space.n)


def base_reduce_net(dist: Distribution, delta: int):
    """Re-express a (delta, s, n)-net in base p^e in base p and verify the
    (e*delta + (e-1)(n-1), e*s, n)-net property there.

    Returns (base-p distribution, delta_p, report)."""
    e = dist.space.gf.e
    n = dist.space.n
    delta_p = e * delta + (e - 1) * (n - 1)
    reduced = dist.to_base_p()
    return reduced, delta_p, net_report(reduced, delta_p)


def star_discrepancy(dist: Distribution) -> Fraction:
    """Exact star discrepancy sup |count/N - volume| over anchored boxes,
    as a Fraction.

    The supremum over the half-open boxes [0, y) is realized on the grid
    of point coordinates (and 1), comparing both the attained value at
    each grid corner and the one-sided limit from above.
    """
    space = dist.space
    n = space.n
    points = dist.points()
    count = len(points)
    if count == 0:
        raise ValueError("empty distribution")
    grids = []
    for j in range(n):
        grids.append(sorted({p[j] for p in points} | {Fraction(1)}))
    evals = count
    for g in grids:
        evals *= len(g)
    if evals > DISCREPANCY_EVAL_BOUND:
        raise ValueError("point set too large for the exact grid sweep; "
                         "sampled estimation is out of scope")

    # per dimension and grid value: bitmasks of points strictly below / not above
    strict = []
    weak = []
    for j, grid in enumerate(grids):
        sj = {}
        wj = {}
        for gv in grid:
            ms = 0
            mw = 0
            for idx, pt in enumerate(points):
                if pt[j] < gv:
                    ms |= 1 << idx
                if pt[j] <= gv:
                    mw |= 1 << idx
            sj[gv] = ms
            wj[gv] = mw
        strict.append(sj)
        weak.append(wj)

    from itertools import product

    best = Fraction(0)
    for corner in product(*grids):
        vol = Fraction(1)
        for c in corner:
            vol *= c
        m_strict = ~0
        m_weak = ~0
        for j, c in enumerate(corner):
            m_strict &= strict[j][c]
            m_weak &= weak[j][c]
        mask_all = (1 << count) - 1
        inside = (m_strict & mask_all).bit_count()
        closure = (m_weak & mask_all).bit_count()
        best = max(best,
                   abs(Fraction(inside, count) - vol),
                   abs(Fraction(closure, count) - vol))
    return best

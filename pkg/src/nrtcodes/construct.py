"""Builders for linear MDS codes and optimum distributions by Hermite-style
hyperderivative evaluation at fixed nodes.

A polynomial f of the k-dimensional space M^k is sent to the word whose
row at node beta reads (d^(s-1) f(beta), ..., d^1 f(beta), f(beta)); a
node at INF reads reversed coefficients relative to the ambient dimension
k.  The images of the monomials 1, z, ..., z^(k-1) span the code; the
same words, read as radix digits, are the points of the distribution.
"""

from __future__ import annotations

from .codes import LinearCode
from .gf import GF
from .poly import INF, binom_mod, hyper_eval
from .words import Distribution, Space, Word


def default_nodes(gf: GF, n: int) -> tuple:
    """Canonical node choice: labels 0..n-1, with INF as the extra node
    when n = q + 1.  Requires q >= n - 1 so enough nodes exist."""
    if n <= gf.q:
        return tuple(range(n))
    if n == gf.q + 1:
        return tuple(range(gf.q)) + (INF,)
    raise ValueError(f"q >= n - 1 required: F_{gf.q} has no {n} distinct nodes")


def _check_nodes(gf: GF, nodes) -> tuple:
    nodes = tuple(nodes)
    if len(set(nodes)) != len(nodes):
        raise ValueError("nodes must be pairwise distinct")
    if sum(1 for b in nodes if b == INF) > 1:
        raise ValueError("at most one node may be INF")
    for b in nodes:
        if b != INF:
            gf.check(b)
    return nodes


def evaluation_word(space: Space, f, nodes, ambient: int | None = None) -> Word:
    """Word of hyperderivative values of f at the given nodes; entry i of
    a row holds the derivative of order s - 1 - i (value itself last)."""
    gf = space.gf
    nodes = _check_nodes(gf, nodes)
    if len(nodes) != space.n:
        raise ValueError("node count must equal the number of rows")
    if ambient is None:
        ambient = space.dim
    if len(f) > ambient:
        raise ValueError("polynomial degree exceeds the ambient dimension")
    s = space.s
    return tuple(
        tuple(hyper_eval(gf, f, beta, s - 1 - i, ambient=ambient)
              for i in range(s))
        for beta in nodes
    )


def evaluation_matrix(gf: GF, nodes, s: int, k: int):
    """The (n*s) x k matrix of the coefficient-vector-to-word map: column m
    is the flattened word of the monomial z^m.  Row order matches the
    flattened word layout."""
    nodes = _check_nodes(gf, nodes)
    rows = []
    for beta in nodes:
        for i in range(s):
            d = s - 1 - i  # derivative order at this digit position
            row = []
            for m in range(k):
                if beta == INF:
                    row.append(1 if m == k - 1 - d else 0)
                else:
                    c = binom_mod(m, d, gf.p)
                    # 0^0 = 1 so constants survive at beta = 0
                    row.append(gf.mul(c, gf.pow(beta, m - d)) if m >= d else 0)
            rows.append(row)
    return rows


def _monomial_words(space: Space, k: int, nodes):
    basis = []
    for m in range(k):
        mono = [0] * m + [1]
        basis.append(evaluation_word(space, mono, nodes, ambient=k))
    return basis


def build_mds_code(space: Space, k: int, nodes=None) -> LinearCode:
    """MDS code of dimension k in Mat_{n,s}(F_q), spanned by the monomial
    evaluation words.  Needs q >= n - 1 and 1 <= k <= ns."""
    if not 1 <= k <= space.dim:
        raise ValueError("k out of range")
    if nodes is None:
        nodes = default_nodes(space.gf, space.n)
    else:
        nodes = _check_nodes(space.gf, nodes)
        if len(nodes) != space.n:
            raise ValueError("node count must equal n")
    code = LinearCode.from_words(space, _monomial_words(space, k, nodes))
    if code.k != k:
        raise AssertionError("evaluation words are dependent")
    return code


def build_optimum_distribution(space: Space, k: int, nodes=None) -> Distribution:
    """The q^k points whose digit words are exactly the codewords of
    build_mds_code, in coefficient colex order."""
    from . import bulk

    if not 1 <= k <= space.dim:
        raise ValueError("k out of range")
    if nodes is None:
        nodes = default_nodes(space.gf, space.n)
    else:
        nodes = _check_nodes(space.gf, nodes)
        if len(nodes) != space.n:
            raise ValueError("node count must equal n")
    basis = [space.flatten(w) for w in _monomial_words(space, k, nodes)]
    arr = bulk.span_array(space.gf, basis, space.dim)
    return Distribution(space, array=arr.reshape(len(arr), space.n, space.s))

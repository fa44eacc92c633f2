"""Shared fixtures and independent brute-force oracles.

The oracles here work directly with the integer matrix A and never call into
the package, so they can referee its answers.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from weylmonoid import CATALOG, build_realization, validate_gcm


def catalog_ids():
    return list(CATALOG)


@pytest.fixture(params=catalog_ids())
def catalog_name(request):
    return request.param


@pytest.fixture
def gcm(catalog_name):
    return validate_gcm(CATALOG[catalog_name])


@pytest.fixture
def real(gcm):
    return build_realization(gcm)


def realization_of(name):
    return build_realization(validate_gcm(CATALOG[name]))


# root-lattice model: W acts on Z^n = span of the α_i by s_i(α_j) = α_j - a_ij α_i


def reflect_alpha(A, beta, i):
    """s_i β in α-coordinates; β(h_i) = Σ_k β_k a_ik."""
    p = sum(b * A[i][k] for k, b in enumerate(beta))
    return tuple(b - (p if k == i else 0) for k, b in enumerate(beta))


def root_orbit(A, cap=400):
    """The real roots W·{α_i} in α-coordinates, or None once more than cap appear."""
    n = len(A)
    seen = {tuple(int(k == i) for k in range(n)) for i in range(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                g = reflect_alpha(A, beta, i)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return seen


def nullspace(M):
    """Exact nullspace basis of a rational matrix (plain Gauss-Jordan)."""
    rows = [[Fraction(x) for x in r] for r in M]
    ncols = len(rows[0]) if rows else 0
    piv = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        piv.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in piv):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for k, c in enumerate(piv):
            v[c] = -rows[k][free]
        basis.append(v)
    return basis


def oracle_type(A):
    """Finite / Affine / Indefinite for a connected GCM, from root orbits and kernels."""
    if root_orbit(A) is not None:
        return "Finite"
    ker = nullspace(A)
    if len(ker) == 1:
        v = ker[0]
        if all(x > 0 for x in v) or all(x < 0 for x in v):
            return "Affine"
    return "Indefinite"


def sub_matrix(A, idx):
    return [[A[i - 1][j - 1] for j in idx] for i in idx]


def connected(A, idx):
    idx = list(idx)
    if not idx:
        return False
    seen = {idx[0]}
    stack = [idx[0]]
    while stack:
        i = stack.pop()
        for j in idx:
            if j not in seen and A[i - 1][j - 1] != 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(idx)


def oracle_specials(A):
    """Special subsets by brute force over all subsets and their components."""
    n = len(A)
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            comps = []
            left = set(combo)
            while left:
                start = min(left)
                comp = {start}
                stack = [start]
                left.discard(start)
                while stack:
                    i = stack.pop()
                    for j in list(left):
                        if A[i - 1][j - 1] != 0:
                            left.discard(j)
                            comp.add(j)
                            stack.append(j)
                comps.append(sorted(comp))
            if all(oracle_type(sub_matrix(A, c)) != "Finite" for c in comps):
                out.append(frozenset(combo))
    return out


def brute_weyl(A, max_len):
    """Elements of W up to max_len as {matrix on Z^n: shortest length}, by BFS over words."""
    n = len(A)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def right_mul_s(m, i):
        # columns of m are images of α_j; (m s_i) α_j = m(α_j - a_ij α_i)
        cols = [tuple(m[k][j] for k in range(n)) for j in range(n)]
        new_cols = []
        for j in range(n):
            new_cols.append(tuple(cols[j][k] - A[i][j] * cols[i][k] for k in range(n)))
        return tuple(tuple(new_cols[j][k] for j in range(n)) for k in range(n))

    lengths = {ident: 0}
    frontier = [ident]
    for ell in range(1, max_len + 1):
        nxt = []
        for m in frontier:
            for i in range(n):
                y = right_mul_s(m, i)
                if y not in lengths:
                    lengths[y] = ell
                    nxt.append(y)
        frontier = nxt
    return lengths


def alpha_action(x):
    """Matrix of a library WeylElement on the root lattice, via its action on α_j."""
    r = x.realization
    cols = []
    for j in range(1, r.n + 1):
        img = x.act(r.simple_root(j))
        cols.append(tuple(int(c) for c in r.alpha_coords(img)))
    return tuple(tuple(cols[j][k] for j in range(r.n)) for k in range(r.n))

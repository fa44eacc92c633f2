"""Weyl group elements as contragredient integer-matrix pairs.

``mat_p`` acts on weight coordinates (Λ-basis) and ``mat_h`` on coweight
coordinates (h-basis); ``mat_p^T @ mat_h = 1``.  Signs of roots are read off
the coroot side: ``x α_i`` is positive iff ``x h_i`` has non-negative
coordinates, and ``x^{-1} h_i`` is row ``i`` of ``mat_p``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .errors import EqualIndices, IndexOutOfRange, RealizationMismatch, WeylMonoidError
from .gcm import GCM, infinite_part
from .realization import Realization, WeightVector

STRIP_BUDGET = 10**6

INFINITY = math.inf

_COXETER_TABLE = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True, eq=False)
class WeylElement:
    mat_p: tuple[tuple[int, ...], ...]
    mat_h: tuple[tuple[int, ...], ...]
    realization: Realization = field(repr=False)

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.mat_p == other.mat_p
            and self.realization == other.realization
        )

    def __hash__(self):
        return hash(self.mat_p)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __repr__(self):
        word = " ".join(f"s{i}" for i in self.reduced_word) or "e"
        return f"WeylElement({word})"

    @property
    def is_identity(self) -> bool:
        return self.mat_p == linalg.identity(len(self.mat_p))

    @cached_property
    def inverse(self) -> "WeylElement":
        return WeylElement(linalg.transpose(self.mat_h), linalg.transpose(self.mat_p), self.realization)

    @cached_property
    def right_descents(self) -> frozenset[int]:
        n = self.realization.n
        return frozenset(i + 1 for i in range(n) if _is_negative(self.mat_h[k][i] for k in range(n)))

    @cached_property
    def left_descents(self) -> frozenset[int]:
        n = self.realization.n
        return frozenset(i + 1 for i in range(n) if _is_negative(self.mat_p[i][:n]))

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word: repeatedly strip the smallest right descent."""
        word = []
        x = self
        for _ in range(STRIP_BUDGET):
            d = x.right_descents
            if not d:
                break
            i = min(d)
            word.append(i)
            x = x * simple_reflection(self.realization, i)
        else:
            raise WeylMonoidError("strip budget exhausted while computing a reduced word")
        word.reverse()
        return tuple(word)

    @cached_property
    def length(self) -> int:
        return len(self.reduced_word)

    def act(self, lam: WeightVector) -> WeightVector:
        return WeightVector(linalg.matvec(self.mat_p, lam.coords))

    def act_coweight(self, h: Sequence) -> tuple:
        return linalg.matvec(self.mat_h, h)


def _is_negative(coords: Iterable[int]) -> bool:
    # a real root (or coroot) has uniformly signed coordinates, so one
    # nonzero entry decides the sign
    for c in coords:
        if c:
            return c < 0
    raise WeylMonoidError("zero vector where a root was expected")


def _check_same(x: WeylElement, y: WeylElement):
    if x.realization != y.realization:
        raise RealizationMismatch("Weyl elements of different realizations")


def identity(r: Realization) -> WeylElement:
    e = linalg.identity(r.dim)
    return WeylElement(e, e, r)


def simple_reflection(r: Realization, i: int) -> WeylElement:
    r.check_index(i)
    cache = r.__dict__.setdefault("_reflections", {})
    if i not in cache:
        N = r.dim
        alpha = r.simple_roots[i - 1]
        k = i - 1
        # σ_i λ = λ - λ(h_i) α_i ;  σ_i h = h - α_i(h) h_i
        mat_p = tuple(
            tuple((1 if a == b else 0) - (alpha[a] if b == k else 0) for b in range(N))
            for a in range(N)
        )
        mat_h = tuple(
            tuple((1 if a == b else 0) - (alpha[b] if a == k else 0) for b in range(N))
            for a in range(N)
        )
        x = WeylElement(mat_p, mat_h, r)
        x.__dict__["inverse"] = x
        cache[i] = x
    return cache[i]


def from_word(r: Realization, word: Iterable[int]) -> WeylElement:
    x = identity(r)
    for i in word:
        x = x * simple_reflection(r, i)
    return x


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    _check_same(x, y)
    return WeylElement(linalg.matmul(x.mat_p, y.mat_p), linalg.matmul(x.mat_h, y.mat_h), x.realization)


def inverse(x: WeylElement) -> WeylElement:
    return x.inverse


def equals(x: WeylElement, y: WeylElement) -> bool:
    _check_same(x, y)
    return x == y


def coxeter_order(gcm: GCM, i: int, j: int):
    """m_ij from the product a_ij a_ji; ``INFINITY`` when there is no relation."""
    for k in (i, j):
        if not 1 <= k <= gcm.n:
            raise IndexOutOfRange(f"index {k} not in 1..{gcm.n}")
    if i == j:
        raise EqualIndices("coxeter_order needs i != j")
    return _COXETER_TABLE.get(gcm.a(i, j) * gcm.a(j, i), INFINITY)


def descents(x: WeylElement) -> frozenset[int]:
    return x.right_descents


def length(x: WeylElement) -> int:
    return x.length


def reduced_word(x: WeylElement) -> list[int]:
    return list(x.reduced_word)


def min_coset_rep_right(x: WeylElement, J: Iterable[int]) -> WeylElement:
    """The minimal-length element of ``x W_J``."""
    J = frozenset(J)
    r = x.realization
    for _ in range(STRIP_BUDGET):
        d = x.right_descents & J
        if not d:
            return x
        x = x * simple_reflection(r, min(d))
    raise WeylMonoidError("strip budget exhausted")


def min_coset_rep_left(x: WeylElement, J: Iterable[int]) -> WeylElement:
    """The minimal-length element of ``W_J x``."""
    J = frozenset(J)
    r = x.realization
    for _ in range(STRIP_BUDGET):
        d = x.left_descents & J
        if not d:
            return x
        x = simple_reflection(r, min(d)) * x
    raise WeylMonoidError("strip budget exhausted")


def is_in_parabolic(x: WeylElement, J: Iterable[int]) -> bool:
    return min_coset_rep_right(x, J).is_identity


def parabolic_split_right(x: WeylElement, J: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """``x = rep * u`` with ``rep`` in W^J and ``u`` in W_J."""
    rep = min_coset_rep_right(x, J)
    return rep, rep.inverse * x


def elements_up_to(r: Realization, bound: int, J: Iterable[int] | None = None) -> list[WeylElement]:
    """All elements of W_J (default W) of length <= bound, by (length, reduced word)."""
    J = r.index_set if J is None else frozenset(J)
    layers = _layers(r, J, bound)
    return [x for layer in layers[: bound + 1] for x in layer]


def _layers(r: Realization, J: frozenset[int], bound: int) -> list[list[WeylElement]]:
    cache = r.__dict__.setdefault("_balls", {})
    layers = cache.setdefault(J, [[identity(r)]])
    gens = [simple_reflection(r, i) for i in sorted(J)]
    while len(layers) <= bound and layers[-1]:
        seen = set()
        nxt = []
        for x in layers[-1]:
            for s, i in zip(gens, sorted(J)):
                if i in x.right_descents:
                    continue
                y = x * s
                if y not in seen:
                    seen.add(y)
                    y.__dict__["length"] = len(layers)
                    nxt.append(y)
        nxt.sort(key=lambda y: y.reduced_word)
        layers.append(nxt)
    return layers


def parabolic_is_finite(r: Realization, J: Iterable[int]) -> bool:
    """W_J is finite iff every component of J is of finite type."""
    return not infinite_part(r.gcm, J)


@dataclass(frozen=True)
class RealRoot:
    root: WeightVector
    alpha: tuple[int, ...]
    coroot: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.alpha)

    @property
    def positive(self) -> bool:
        return self.height > 0


def _reflect_root(r: Realization, alpha: tuple[int, ...], coroot: tuple[int, ...], j: int):
    A = r.gcm.entries
    n = r.n
    # β(h_j) = Σ_k β_k a_jk ;  α_j(h) = Σ_k (α_j)_k h_k
    pair = sum(alpha[k] * A[j - 1][k] for k in range(n))
    new_alpha = tuple(a - (pair if k == j - 1 else 0) for k, a in enumerate(alpha))
    aj = r.simple_roots[j - 1]
    hpair = sum(aj[k] * coroot[k] for k in range(r.dim))
    new_coroot = tuple(c - (hpair if k == j - 1 else 0) for k, c in enumerate(coroot))
    return new_alpha, new_coroot


def _make_root(r: Realization, alpha, coroot) -> RealRoot:
    vec = [0] * r.dim
    for k, a in enumerate(alpha):
        if a:
            for m, v in enumerate(r.simple_roots[k]):
                vec[m] += a * v
    return RealRoot(WeightVector(vec), tuple(alpha), tuple(coroot))


def _root_sort_key(rt: RealRoot):
    return (not rt.positive, abs(rt.height), tuple(-a if rt.positive else a for a in rt.alpha))


def real_roots_up_to(r: Realization, bound: int) -> list[RealRoot]:
    """Roots ``w α_i`` reachable by at most ``bound`` simple reflections, with coroots."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = r.n
    start = []
    for i in range(1, n + 1):
        a = tuple(1 if k == i - 1 else 0 for k in range(n))
        start.append((a, r.simple_coroot(i)))
    seen = {p[0]: p for p in start}
    frontier = start
    for _ in range(bound):
        nxt = []
        for alpha, coroot in frontier:
            for j in range(1, n + 1):
                na, nc = _reflect_root(r, alpha, coroot, j)
                if na not in seen:
                    seen[na] = (na, nc)
                    nxt.append((na, nc))
        if not nxt:
            break
        frontier = nxt
    return sorted((_make_root(r, a, c) for a, c in seen.values()), key=_root_sort_key)


def positive_roots_up_to_height(r: Realization, height: int) -> list[RealRoot]:
    """Positive real roots of height <= ``height``.

    Every non-simple positive real root has a simple reflection lowering its
    height, so climbing from the simple roots reaches all of them.
    """
    n = r.n
    seen = {}
    frontier = []
    for i in range(1, n + 1):
        a = tuple(1 if k == i - 1 else 0 for k in range(n))
        seen[a] = (a, r.simple_coroot(i))
        frontier.append(seen[a])
    if height < 1:
        return []
    while frontier:
        nxt = []
        for alpha, coroot in frontier:
            for j in range(1, n + 1):
                na, nc = _reflect_root(r, alpha, coroot, j)
                h = sum(na)
                if h > sum(alpha) and h <= height and na not in seen:
                    seen[na] = (na, nc)
                    nxt.append((na, nc))
        frontier = nxt
    return sorted((_make_root(r, a, c) for a, c in seen.values()), key=_root_sort_key)

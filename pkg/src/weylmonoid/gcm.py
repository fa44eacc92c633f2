"""Generalized Cartan matrices: validation, symmetrizers, component typing
and special subsets.

Index sets are 1-based throughout (``I = {1, ..., n}``) and are passed as any
iterable of ints; they are returned as ``frozenset``.
"""
from __future__ import annotations

import enum
import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from . import linalg
from .errors import IndexOutOfRange, NotConnected, NotGCM, NotSpecial, NotSymmetrizable

SPECIAL_WARN_THRESHOLD = 20


class ComponentType(enum.Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GCM:
    """A validated, symmetrizable generalized Cartan matrix.

    ``symmetrizer`` holds the diagonal of D with ``A = D B``; it is scaled
    per connected component to coprime positive integers.
    """

    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    symmetrized: tuple[tuple[Fraction, ...], ...]
    rank_l: int

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def a(self, i: int, j: int) -> int:
        """Entry a_ij, 1-based."""
        return self.entries[i - 1][j - 1]

    @cached_property
    def specials(self) -> tuple["SpecialSet", ...]:
        return tuple(enumerate_special(self))

    def __repr__(self):
        return f"GCM({[list(r) for r in self.entries]})"


@dataclass(frozen=True)
class SpecialSet:
    theta: frozenset[int]
    components: tuple[tuple[frozenset[int], ComponentType], ...]

    def __str__(self):
        return format_set(self.theta)


def format_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def subset_key(s: Iterable[int]) -> tuple:
    """Sort key: by size, then lexicographically."""
    s = sorted(s)
    return (len(s), s)


def _check_subset(gcm: GCM, J: Iterable[int]) -> frozenset[int]:
    J = frozenset(J)
    bad = [j for j in J if not (isinstance(j, int) and 1 <= j <= gcm.n)]
    if bad:
        raise IndexOutOfRange(f"indices {sorted(bad, key=str)} not in 1..{gcm.n}")
    return J


def validate_gcm(matrix) -> GCM:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotGCM("matrix must be square and nonempty")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, float) and x.is_integer():
                    continue
                raise NotGCM(f"entry {x!r} is not an integer")
    A = tuple(tuple(int(x) for x in r) for r in rows)
    for i in range(n):
        if A[i][i] != 2:
            raise NotGCM(f"diagonal entry a_{i+1}{i+1} = {A[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if A[i][j] > 0:
                raise NotGCM(f"off-diagonal entry a_{i+1}{j+1} = {A[i][j]} > 0")
            if (A[i][j] == 0) != (A[j][i] == 0):
                raise NotGCM(f"a_{i+1}{j+1} and a_{j+1}{i+1} violate the zero pattern")
    eps = _symmetrizer(A)
    B = tuple(tuple(Fraction(A[i][j], eps[i]) for j in range(n)) for i in range(n))
    return GCM(A, eps, B, linalg.rank(A))


def _symmetrizer(A) -> tuple[int, ...]:
    # A = D B with B symmetric  <=>  a_ij / e_i = a_ji / e_j
    n = len(A)
    eps: list[Fraction | None] = [None] * n
    for root in range(n):
        if eps[root] is not None:
            continue
        eps[root] = Fraction(1)
        comp = [root]
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or A[i][j] == 0:
                    continue
                want = eps[i] * Fraction(A[j][i], A[i][j])
                if eps[j] is None:
                    eps[j] = want
                    comp.append(j)
                    stack.append(j)
                elif eps[j] != want:
                    raise NotSymmetrizable(
                        f"inconsistent symmetrizer ratio around indices {i+1},{j+1}"
                    )
        lcm_den = math.lcm(*(eps[i].denominator for i in comp))
        nums = [int(eps[i] * lcm_den) for i in comp]
        g = math.gcd(*nums)
        for i, v in zip(comp, nums):
            eps[i] = Fraction(v // g)
    return tuple(int(e) for e in eps)


def components(gcm: GCM, J: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the Dynkin graph restricted to J, sorted."""
    J = _check_subset(gcm, J)
    return _components(gcm.entries, J)


def _components(A, J: frozenset[int]) -> list[frozenset[int]]:
    left = set(J)
    out = []
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
        out.append(frozenset(comp))
    out.sort(key=subset_key)
    return out


def classify_component(gcm: GCM, C: Iterable[int]) -> ComponentType:
    C = _check_subset(gcm, C)
    if len(_components(gcm.entries, C)) != 1:
        raise NotConnected(f"{format_set(C)} is not a connected subset")
    return _classify(gcm.symmetrized, tuple(sorted(C)))


@lru_cache(maxsize=None)
def _classify(B, C: tuple[int, ...]) -> ComponentType:
    sub = [[B[i - 1][j - 1] for j in C] for i in C]
    pivots, zero_block, indefinite = linalg.symmetric_inertia(sub)
    if indefinite:
        return ComponentType.INDEFINITE
    if zero_block == 0:
        return ComponentType.FINITE
    if zero_block == 1:
        return ComponentType.AFFINE
    return ComponentType.INDEFINITE


def _typed_components(gcm: GCM, J: frozenset[int]):
    return tuple((c, _classify(gcm.symmetrized, tuple(sorted(c)))) for c in _components(gcm.entries, J))


def is_special(gcm: GCM, theta: Iterable[int]) -> bool:
    theta = _check_subset(gcm, theta)
    return all(t is not ComponentType.FINITE for _, t in _typed_components(gcm, theta))


def special_set(gcm: GCM, theta: Iterable[int]) -> SpecialSet:
    """Wrap ``theta`` as a SpecialSet; raises NotSpecial if it is not special."""
    theta = _check_subset(gcm, theta)
    if not is_special(gcm, theta):
        raise NotSpecial(f"{format_set(theta)} is not special")
    return SpecialSet(theta, _typed_components(gcm, theta))


def enumerate_special(gcm: GCM) -> list[SpecialSet]:
    """All special subsets of I, sorted by (size, lex); always starts with the empty set."""
    n = gcm.n
    if n > SPECIAL_WARN_THRESHOLD:
        warnings.warn(f"enumerating special subsets of a rank-{n} matrix (2^{n} subsets)")
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            theta = frozenset(combo)
            comps = _typed_components(gcm, theta)
            # classification is memoized per component, so this is 2^n cheap lookups
            if all(t is not ComponentType.FINITE for _, t in comps):
                out.append(SpecialSet(theta, comps))
    return out


def orthogonal_complement(gcm: GCM, theta: Iterable[int]) -> frozenset[int]:
    theta = _check_subset(gcm, theta)
    return frozenset(
        i for i in gcm.index_set if all(gcm.a(i, j) == 0 for j in theta)
    )


def infinite_part(gcm: GCM, J: Iterable[int]) -> frozenset[int]:
    """J^inf: the union of the non-finite components of J."""
    J = _check_subset(gcm, J)
    out: set[int] = set()
    for c, t in _typed_components(gcm, J):
        if t is not ComponentType.FINITE:
            out |= c
    return frozenset(out)

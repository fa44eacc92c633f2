"""The simply connected minimal free realization of a GCM.

Weights are written in the basis of fundamental weights ``Λ_1..Λ_N`` and
coweights in the dual basis ``h_1..h_N`` with ``N = 2n - l``; so pairing a
weight with a coweight is the plain dot product of coordinates.  Vector
coordinates are 0-based tuples (``coords[0]`` is the ``Λ_1`` coefficient),
while simple-root and index-set labels are 1-based.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, IndexOutOfRange, RealizationMismatch
from .gcm import GCM


@dataclass(frozen=True)
class WeightVector:
    """A rational weight in fundamental-weight coordinates.

    Integral coordinates are stored as ``int`` (they compare and hash equal to
    the corresponding ``Fraction``), which keeps lattice arithmetic fast.
    """

    coords: tuple[int | Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(_normalize(c) for c in coords))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def _same_dim(self, other: "WeightVector"):
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"dimensions {len(self.coords)} and {len(other.coords)}")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._same_dim(other)
        return WeightVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        self._same_dim(other)
        return WeightVector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "WeightVector":
        return WeightVector(-a for a in self.coords)

    def __mul__(self, k) -> "WeightVector":
        return WeightVector(k * a for a in self.coords)

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return "WeightVector(" + ", ".join(str(c) for c in self.coords) + ")"


def _normalize(c):
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class Realization:
    """Lattices H, P of rank ``2n - l`` with simple roots, coroots and the form.

    Treated as an immutable value; build it with :func:`build_realization`,
    which memoizes one instance per GCM.
    """

    def __init__(self, gcm: GCM, completion_columns: Iterable[int] | None = None):
        n, l = gcm.n, gcm.rank_l
        A = gcm.entries
        self.gcm = gcm
        self.n = n
        self.dim = 2 * n - l
        if completion_columns is None:
            self.completion_columns = _completion_columns(A)
        else:
            self.completion_columns = _check_completion(A, l, completion_columns)
        N = self.dim
        roots = []
        for i in range(n):
            row = [A[j][i] for j in range(n)]
            row += [1 if i == c - 1 else 0 for c in self.completion_columns]
            roots.append(tuple(row))
        # row i: coordinates of α_{i+1} in the Λ-basis
        self.simple_roots: tuple[tuple[int, ...], ...] = tuple(roots)
        eps = gcm.symmetrizer
        gram = [[Fraction(0)] * N for _ in range(N)]
        for i in range(n):
            for j in range(N):
                v = Fraction(roots[i][j] * eps[i])
                gram[i][j] = v
                gram[j][i] = v
        self.gram_h: tuple[tuple[Fraction, ...], ...] = tuple(tuple(r) for r in gram)
        self.gram_hstar = linalg.inverse(self.gram_h)
        self._root_columns = linalg.transpose(self.simple_roots)

    def __repr__(self):
        return f"Realization({self.gcm!r}, dim={self.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Realization)
            and self.gcm.entries == other.gcm.entries
            and self.completion_columns == other.completion_columns
        )

    def __hash__(self):
        return hash((self.gcm.entries, self.completion_columns))

    @property
    def index_set(self) -> frozenset[int]:
        return self.gcm.index_set

    def check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.n):
            raise IndexOutOfRange(f"index {i!r} not in 1..{self.n}")

    def fundamental_weight(self, i: int) -> WeightVector:
        """Λ_i for ``1 <= i <= 2n - l``."""
        if not 1 <= i <= self.dim:
            raise IndexOutOfRange(f"weight index {i} not in 1..{self.dim}")
        return WeightVector(1 if k == i - 1 else 0 for k in range(self.dim))

    def simple_root(self, i: int) -> WeightVector:
        self.check_index(i)
        return WeightVector(self.simple_roots[i - 1])

    def simple_coroot(self, i: int) -> tuple[int, ...]:
        """Coordinates of ``h_i`` for ``1 <= i <= 2n - l`` (simple coroots are i <= n)."""
        if not (isinstance(i, int) and 1 <= i <= self.dim):
            raise IndexOutOfRange(f"coweight index {i!r} not in 1..{self.dim}")
        return tuple(1 if k == i - 1 else 0 for k in range(self.dim))

    def weight(self, coords: Sequence) -> WeightVector:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return WeightVector(coords)

    def alpha_coords(self, lam: WeightVector) -> list[Fraction] | None:
        """Coefficients of ``lam`` in the simple roots, or None if outside their span."""
        if len(lam) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(lam)}")
        return linalg.solve(self._root_columns, lam.coords)

    def form(self, mu: WeightVector, nu: WeightVector) -> Fraction:
        """The invariant form on h*."""
        return sum(
            (mu[i] * self.gram_hstar[i][j] * nu[j] for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    @cached_property
    def rho(self) -> WeightVector:
        """Sum of all fundamental weights; an interior point of the fundamental chamber."""
        return WeightVector([1] * self.dim)


def _completion_columns(A) -> tuple[int, ...]:
    # greedily add unit vectors e_c (lexicographically first) until the
    # columns of A^T together with them span Q^n
    n = len(A)
    basis_rows = [list(r) for r in A]  # columns of A^T
    current = linalg.rank(basis_rows)
    chosen = []
    for c in range(n):
        if current == n:
            break
        e = [1 if k == c else 0 for k in range(n)]
        if linalg.rank(basis_rows + [e]) > current:
            basis_rows.append(e)
            current += 1
            chosen.append(c + 1)
    return tuple(chosen)


def _check_completion(A, l: int, columns: Iterable[int]) -> tuple[int, ...]:
    n = len(A)
    cols = tuple(sorted(set(columns)))
    if len(cols) != n - l or any(not 1 <= c <= n for c in cols):
        raise IndexOutOfRange(f"need {n - l} distinct completion columns in 1..{n}, got {cols}")
    rows = [list(r) for r in A] + [[1 if k == c - 1 else 0 for k in range(n)] for c in cols]
    if linalg.rank(rows) != n:
        raise RealizationMismatch(f"columns {cols} do not complete the matrix to full rank")
    return cols


@lru_cache(maxsize=None)
def build_realization(gcm: GCM, completion_columns: tuple[int, ...] | None = None) -> Realization:
    """The realization of ``gcm``; ``completion_columns`` overrides the canonical choice."""
    return Realization(gcm, completion_columns)


def same_realization(*objs) -> Realization:
    """The shared realization of several objects, else RealizationMismatch."""
    first = objs[0].realization
    for o in objs[1:]:
        if o.realization != first:
            raise RealizationMismatch("objects belong to different realizations")
    return first


def pairing(lam: WeightVector, h: Sequence) -> Fraction:
    if len(lam) != len(h):
        raise DimensionMismatch(f"weight has {len(lam)} coordinates, coweight {len(h)}")
    return sum((a * b for a, b in zip(lam.coords, h)), Fraction(0))


class Dominance(enum.Enum):
    LESS_EQ = "LessEq"
    GREATER_EQ = "GreaterEq"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def dominance_compare(r: Realization, lam: WeightVector, lam2: WeightVector) -> Dominance:
    """Compare in the order ``lam <= lam2  iff  lam2 - lam`` is a non-negative integer root sum."""
    diff = lam2 - lam
    if diff.is_zero:
        return Dominance.EQUAL
    k = r.alpha_coords(diff)
    if k is None or any(c.denominator != 1 for c in k):
        return Dominance.INCOMPARABLE
    if all(c >= 0 for c in k):
        return Dominance.LESS_EQ
    if all(c <= 0 for c in k):
        return Dominance.GREATER_EQ
    return Dominance.INCOMPARABLE


def project_pJ(r: Realization, lam: WeightVector, J: Iterable[int]) -> WeightVector:
    """``sum_{j in J} lam(h_j) Λ_j``."""
    J = set(J)
    for j in J:
        r.check_index(j)
    return WeightVector(lam[k] if (k + 1) in J else 0 for k in range(r.dim))

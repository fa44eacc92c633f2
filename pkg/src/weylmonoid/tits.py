"""Tits cone geometry: chamber descent, facets, faces ``w R(Θ)`` and their
joins and intersections.

A face is stored as a pair ``(Θ, w)`` with ``Θ`` special and ``w`` the
minimal representative of ``w W_{Θ ∪ Θ^⊥}``; that pair is canonical, so face
equality is pair equality.  The face ``w R(Θ)`` is ``X ∩ {λ : λ(w h_i) = 0, i ∈ Θ}``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

from . import linalg
from .errors import DimensionMismatch, NotInConeOrUnknown, NotSpecial, RealizationMismatch
from .gcm import ComponentType, SpecialSet, _typed_components, format_set, infinite_part, is_special, orthogonal_complement, special_set
from .realization import Realization, WeightVector
from .weyl import (
    WeylElement,
    elements_up_to,
    identity,
    is_in_parabolic,
    min_coset_rep_right,
    parabolic_is_finite,
    simple_reflection,
)

DEFAULT_DESCENT_BUDGET = 10_000
DEFAULT_INTERSECT_BUDGET = 8
DEFAULT_STABILITY_WINDOW = 2
DEFAULT_CONFIRM_SAMPLE = 2


@dataclass(frozen=True)
class InCone:
    w: WeylElement
    dominant: WeightVector


@dataclass(frozen=True)
class NotInCone:
    reason: str
    component: frozenset[int]
    value: Fraction


@dataclass(frozen=True)
class Unknown:
    budget_used: int


MembershipResult = Union[InCone, NotInCone, Unknown]


class Status(enum.Enum):
    EXACT = "Exact"
    BUDGET_EXHAUSTED = "BudgetExhausted"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Facet:
    w: WeylElement
    J: frozenset[int]


@dataclass(frozen=True)
class Face:
    theta: frozenset[int]
    w: WeylElement

    @property
    def realization(self) -> Realization:
        return self.w.realization

    @property
    def special(self) -> SpecialSet:
        return special_set(self.realization.gcm, self.theta)

    @property
    def dim(self) -> int:
        return self.realization.dim - len(self.theta)

    @property
    def is_whole_cone(self) -> bool:
        return not self.theta

    @cached_property
    def constraints(self) -> tuple[tuple[int, ...], ...]:
        """Coroots ``w h_i`` (i in Θ) cutting the face out of X."""
        r = self.realization
        return tuple(self.w.act_coweight(r.simple_coroot(i)) for i in sorted(self.theta))

    def __repr__(self):
        word = " ".join(f"s{i}" for i in self.w.reduced_word) or "e"
        return f"Face({format_set(self.theta)}, {word})"


def _stabilizer_set(r: Realization, theta: frozenset[int]) -> frozenset[int]:
    return theta | orthogonal_complement(r.gcm, theta)


def make_face(theta: Iterable[int], w: WeylElement) -> Face:
    """The face ``w R(Θ)`` in canonical form."""
    r = w.realization
    theta = frozenset(theta)
    if not is_special(r.gcm, theta):
        raise NotSpecial(f"{format_set(theta)} is not special")
    return Face(theta, min_coset_rep_right(w, _stabilizer_set(r, theta)))


def standard_face(r: Realization, theta: Iterable[int]) -> Face:
    return make_face(theta, identity(r))


def whole_cone(r: Realization) -> Face:
    return Face(frozenset(), identity(r))


def translate_face(sigma: WeylElement, F: Face) -> Face:
    if sigma.realization != F.realization:
        raise RealizationMismatch("face and Weyl element of different realizations")
    return Face(F.theta, min_coset_rep_right(sigma * F.w, _stabilizer_set(F.realization, F.theta)))


def affine_kernel_coweights(r: Realization) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """For every affine component C, the positive integral coweight c with α_i(c) = 0 on C."""
    cache = r.__dict__.get("_affine_kernels")
    if cache is not None:
        return cache
    A = r.gcm.entries
    out = []
    for comp, kind in _typed_components(r.gcm, r.index_set):
        if kind is not ComponentType.AFFINE:
            continue
        idx = sorted(comp)
        # α_i(Σ k_j h_j) = Σ_j k_j a_ji: k spans the left kernel of A_C
        sub_t = [[A[j - 1][i - 1] for j in idx] for i in idx]
        (vec,) = linalg.nullspace(sub_t)
        den = math.lcm(*(v.denominator for v in vec))
        ints = [int(v * den) for v in vec]
        if ints[0] < 0:
            ints = [-v for v in ints]
        g = math.gcd(*ints)
        c = [0] * r.dim
        for j, v in zip(idx, ints):
            c[j - 1] = v // g
        out.append((comp, tuple(c)))
    r.__dict__["_affine_kernels"] = out
    return out


def to_dominant(r: Realization, lam: WeightVector, budget: int = DEFAULT_DESCENT_BUDGET) -> MembershipResult:
    """Reflect ``lam`` into the fundamental chamber.

    Applies ``σ_i`` for the smallest ``i`` with ``λ(h_i) < 0`` until none is
    left.  Affine components are decided up front with their kernel coweight;
    indefinite components can only end in ``Unknown``.
    """
    if len(lam) != r.dim:
        raise DimensionMismatch(f"expected {r.dim} coordinates, got {len(lam)}")
    n = r.n
    coords = list(lam.coords)
    for comp, c in affine_kernel_coweights(r):
        value = sum((a * b for a, b in zip(coords, c)), Fraction(0))
        if value < 0:
            return NotInCone("negative on the affine kernel coweight", comp, value)
        if value == 0 and any(coords[j - 1] != 0 for j in comp):
            return NotInCone("zero on the affine kernel coweight but not on the component", comp, value)
    w = identity(r)
    for step in range(budget + 1):
        i = next((k for k in range(n) if coords[k] < 0), None)
        if i is None:
            return InCone(w, WeightVector(coords))
        if step == budget:
            break
        alpha = r.simple_roots[i]
        t = coords[i]
        coords = [x - t * a for x, a in zip(coords, alpha)]
        w = w * simple_reflection(r, i + 1)
    return Unknown(budget)


def _require_in_cone(r: Realization, lam: WeightVector, budget: int) -> InCone:
    res = to_dominant(r, lam, budget)
    if not isinstance(res, InCone):
        raise NotInConeOrUnknown(f"{lam} is not in the Tits cone or undecided: {res}")
    return res


def facet_of(r: Realization, lam: WeightVector, budget: int = DEFAULT_DESCENT_BUDGET) -> Facet:
    res = _require_in_cone(r, lam, budget)
    J = frozenset(i + 1 for i in range(r.n) if res.dominant[i] == 0)
    return Facet(min_coset_rep_right(res.w, J), J)


def smallest_face(r: Realization, lam: WeightVector, budget: int = DEFAULT_DESCENT_BUDGET) -> Face:
    """The face of X containing ``lam`` in its relative interior."""
    facet = facet_of(r, lam, budget)
    theta = infinite_part(r.gcm, facet.J)
    return Face(theta, min_coset_rep_right(facet.w, _stabilizer_set(r, theta)))


def relint_point(F: Face) -> WeightVector:
    r = F.realization
    p = WeightVector(0 if (k + 1) in F.theta else 1 for k in range(r.dim))
    return F.w.act(p)


def face_join(F1: Face, F2: Face) -> Face:
    """The smallest face containing both."""
    if F1.realization != F2.realization:
        raise RealizationMismatch("faces of different realizations")
    if F1 == F2:
        return F1
    if F1.is_whole_cone:
        return F1
    if F2.is_whole_cone:
        return F2
    return smallest_face(F1.realization, relint_point(F1) + relint_point(F2))


def face_leq(F1: Face, F2: Face) -> bool:
    """Whether F1 is contained in F2."""
    return face_join(F1, F2) == F2


def in_face_span(F: Face, lam: WeightVector) -> bool:
    """Whether ``lam`` satisfies the linear equations of F (for lam in X: lam in F)."""
    return all(sum(a * b for a, b in zip(lam.coords, c)) == 0 for c in F.constraints)


def face_contains(F: Face, lam: WeightVector, budget: int = DEFAULT_DESCENT_BUDGET) -> bool:
    """Membership of a cone point, mediated by its smallest face."""
    return face_leq(smallest_face(F.realization, lam, budget), F)


def face_intersect(
    F1: Face,
    F2: Face,
    budget: int = DEFAULT_INTERSECT_BUDGET,
    window: int = DEFAULT_STABILITY_WINDOW,
    confirm_sample: int = DEFAULT_CONFIRM_SAMPLE,
) -> tuple[Face, Status]:
    """``F1 ∩ F2`` with a status flag.

    The result is always contained in the true intersection.  With
    ``Status.EXACT`` it is the intersection: either a closed formula applied,
    the scan was exhaustive, the result's dimension met the span bound, or the
    accumulator was stable for ``window`` length shells and no point of the
    confirmation sample escaped it.
    """
    if F1.realization != F2.realization:
        raise RealizationMismatch("faces of different realizations")
    r = F1.realization
    if F1 == F2 or F2.is_whole_cone:
        return F1, Status.EXACT
    if F1.is_whole_cone:
        return F2, Status.EXACT
    union = F1.theta | F2.theta
    # both faces are translates of standard faces by a common element
    if is_in_parabolic(F1.w.inverse * F2.w, _stabilizer_set(r, F1.theta)):
        return make_face(union, F2.w), Status.EXACT
    if is_in_parabolic(F2.w.inverse * F1.w, _stabilizer_set(r, F2.theta)):
        return make_face(union, F1.w), Status.EXACT
    return _chamber_scan(F1, F2, budget, window, confirm_sample)


def _chamber_scan(F1: Face, F2: Face, budget: int, window: int, confirm_sample: int):
    r = F1.realization
    all_constraints = list(F1.constraints) + list(F2.constraints)
    span_dim = r.dim - linalg.rank(all_constraints)
    # scan inside the face whose orthogonal parabolic is finite, if any
    home, other = F1, F2
    if not parabolic_is_finite(r, orthogonal_complement(r.gcm, F1.theta)) and parabolic_is_finite(
        r, orthogonal_complement(r.gcm, F2.theta)
    ):
        home, other = F2, F1
    perp = orthogonal_complement(r.gcm, home.theta)
    exhaustive = parabolic_is_finite(r, perp)
    v = home.w.inverse * other.w
    local = [v.act_coweight(r.simple_coroot(j)) for j in sorted(other.theta)]
    n = r.n

    # home.w^{-1}(F1 ∩ F2) = R(Θ) ∩ v R(Ξ), and R(Θ) = W_{Θ^⊥} F̄_Θ.  The closed
    # chamber piece u F̄_Θ meets {λ(c) = 0} in u F̄_K, K = Θ ∪ supp(u^{-1} c).
    acc = None
    seen = set()
    last_change = 0
    scan_bound = 10**6 if exhaustive else budget
    for u in elements_up_to(r, scan_bound, perp):
        K = set(home.theta)
        uinv = u.inverse
        for c in local:
            uc = uinv.act_coweight(c)
            K.update(k + 1 for k in range(n) if uc[k] != 0)
        cell = make_face(infinite_part(r.gcm, K), home.w * u)
        if cell in seen:
            continue
        seen.add(cell)
        joined = cell if acc is None else face_join(acc, cell)
        if joined != acc:
            acc = joined
            last_change = u.length
            if acc.dim == span_dim:
                return acc, Status.EXACT
    if exhaustive:
        return acc, Status.EXACT
    stable = budget - last_change >= window
    from .oracle import build_sample

    confirmed = True
    for lam in build_sample(r, confirm_sample).points:
        if in_face_span(acc, lam):
            continue
        if all(sum(a * b for a, b in zip(lam.coords, c)) == 0 for c in all_constraints):
            acc = face_join(acc, smallest_face(r, lam))
            confirmed = False
    if stable and confirmed:
        return acc, Status.EXACT
    return acc, Status.BUDGET_EXHAUSTED

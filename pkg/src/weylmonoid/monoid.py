"""The Weyl monoid: congruence classes ``<R>σ`` of pairs (face, Weyl element).

The product is ``(R, σ)(S, τ) = (R ∩ σS, στ)`` and ``(R, σ) ~ (R, σ')`` when
``σ'σ^{-1}`` fixes R pointwise.  For ``R = w R(Θ)`` the pointwise stabilizer
is ``w W_Θ w^{-1}``, so the class of σ is represented by ``w t`` with ``t``
the minimal element of ``W_Θ w^{-1} σ``.

As a partial map on weights, ``<R>σ`` sends λ to σλ when σλ lies in R and is
undefined otherwise (first σ, then the idempotent of R).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExhausted, RealizationMismatch
from .gcm import SpecialSet, infinite_part, orthogonal_complement, special_set
from .realization import Realization, WeightVector
from .tits import (
    DEFAULT_INTERSECT_BUDGET,
    DEFAULT_STABILITY_WINDOW,
    Face,
    Status,
    face_contains,
    face_intersect,
    make_face,
    translate_face,
    whole_cone,
)
from .weyl import (
    WeylElement,
    elements_up_to,
    identity,
    is_in_parabolic,
    min_coset_rep_left,
    min_coset_rep_right,
)

TYPE1 = "Type1"
TYPE2 = "Type2"


@dataclass(frozen=True)
class WeylMonoidElement:
    face: Face
    sigma: WeylElement

    @property
    def realization(self) -> Realization:
        return self.face.realization

    @property
    def theta(self) -> frozenset[int]:
        return self.face.theta

    def __mul__(self, other: "WeylMonoidElement") -> "WeylMonoidElement":
        prod, status = multiply(self, other)
        if status is not Status.EXACT:
            raise BudgetExhausted(f"product {self} * {other} is not certified")
        return prod

    def __str__(self):
        return element_word(self)

    def __repr__(self):
        return f"WeylMonoidElement({element_word(self)!r})"


def make_element(face: Face, sigma: WeylElement) -> WeylMonoidElement:
    """The class ``<face>σ`` with its canonical σ."""
    if face.realization != sigma.realization:
        raise RealizationMismatch("face and Weyl element of different realizations")
    t = min_coset_rep_left(face.w.inverse * sigma, face.theta)
    return WeylMonoidElement(face, face.w * t)


def unit(r: Realization) -> WeylMonoidElement:
    return WeylMonoidElement(whole_cone(r), identity(r))


def from_weyl(sigma: WeylElement) -> WeylMonoidElement:
    return WeylMonoidElement(whole_cone(sigma.realization), sigma)


def idempotent(face: Face) -> WeylMonoidElement:
    return WeylMonoidElement(face, face.w)


def multiply(
    x: WeylMonoidElement,
    y: WeylMonoidElement,
    budget: int = DEFAULT_INTERSECT_BUDGET,
    window: int = DEFAULT_STABILITY_WINDOW,
) -> tuple[WeylMonoidElement, Status]:
    if x.realization != y.realization:
        raise RealizationMismatch("elements of different realizations")
    face, status = face_intersect(x.face, translate_face(x.sigma, y.face), budget, window)
    return make_element(face, x.sigma * y.sigma), status


def equals(x: WeylMonoidElement, y: WeylMonoidElement) -> bool:
    if x.realization != y.realization:
        raise RealizationMismatch("elements of different realizations")
    return x == y


def orbit_label(x: WeylMonoidElement) -> SpecialSet:
    return special_set(x.realization.gcm, x.theta)


def is_unit(x: WeylMonoidElement) -> bool:
    return x.face.is_whole_cone


@dataclass(frozen=True)
class NormalForm:
    flavor: str
    sigma1: WeylElement
    theta: frozenset[int]
    sigma2: WeylElement

    def __str__(self):
        return _word(self.sigma1, self.theta, self.sigma2)


def normal_form(x: WeylMonoidElement, flavor: str = TYPE1) -> NormalForm:
    """``x = σ1 <R(Θ)> σ2``.

    Type1: σ1 in W^{Θ∪Θ^⊥}, σ2 in ^ΘW.  Type2: σ1 in W^Θ, σ2 in ^{Θ∪Θ^⊥}W.
    """
    theta, w = x.face.theta, x.face.w
    t = w.inverse * x.sigma
    if flavor == TYPE1:
        return NormalForm(TYPE1, w, theta, t)
    if flavor != TYPE2:
        raise ValueError(f"unknown normal form flavor {flavor!r}")
    K = theta | orthogonal_complement(x.realization.gcm, theta)
    m = min_coset_rep_left(t, K)
    # t = d m with d in W_Θ × W_{Θ^⊥}; only the W_{Θ^⊥} part of d moves across <R(Θ)>
    d = t * m.inverse
    d_perp = min_coset_rep_right(d, theta)
    return NormalForm(TYPE2, w * d_perp, theta, m)


def reassemble(nf: NormalForm) -> WeylMonoidElement:
    """``σ1 <R(Θ)> σ2 = <σ1 R(Θ)> σ1σ2``."""
    return make_element(make_face(nf.theta, nf.sigma1), nf.sigma1 * nf.sigma2)


def satisfies_flavor(nf: NormalForm) -> bool:
    r = nf.sigma1.realization
    K = nf.theta | orthogonal_complement(r.gcm, nf.theta)
    if nf.flavor == TYPE1:
        right, left = K, nf.theta
    else:
        right, left = nf.theta, K
    return not (nf.sigma1.right_descents & right) and not (nf.sigma2.left_descents & left)


@dataclass(frozen=True)
class ParabolicReport:
    member: bool
    witness: tuple[WeylElement, frozenset[int], WeylElement] | None = None


def parabolic_decompose(x: WeylMonoidElement, J: Iterable[int]) -> ParabolicReport:
    """Decide ``x ∈ Ŵ_J = ⋃_{Ξ ⊆ J^∞} W_J <R(Ξ)> W_J`` and return a witness ``(u, Ξ, v)``."""
    r = x.realization
    J = frozenset(J)
    for j in J:
        r.check_index(j)
    theta, w = x.face.theta, x.face.w
    if not theta <= infinite_part(r.gcm, J):
        return ParabolicReport(False)
    # w is minimal in w W_{Θ∪Θ^⊥}, so the coset meets W_J only if w itself is in W_J
    if not is_in_parabolic(w, J) or not is_in_parabolic(x.sigma, J):
        return ParabolicReport(False)
    return ParabolicReport(True, (w, theta, w.inverse * x.sigma))


def enumerate_elements(r: Realization, bound: int) -> list[WeylMonoidElement]:
    """All classes ``<w R(Θ)> w t`` with ``ℓ(w) + ℓ(t) <= bound``.

    Here w ranges over W^{Θ∪Θ^⊥} and t over ^ΘW; ordered by
    (|Θ|, Θ, ℓ(w) + ℓ(t), reduced words).
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    ball = elements_up_to(r, bound)
    out = []
    for sp in r.gcm.specials:
        theta = sp.theta
        K = theta | orthogonal_complement(r.gcm, theta)
        ws = [w for w in ball if not (w.right_descents & K)]
        ts = [t for t in ball if not (t.left_descents & theta)]
        items = []
        for w in ws:
            face = make_face(theta, w)
            for t in ts:
                if w.length + t.length <= bound:
                    items.append(((w.length + t.length, w.reduced_word, t.reduced_word), face, w * t))
        items.sort(key=lambda it: it[0])
        out.extend(WeylMonoidElement(face, sigma) for _, face, sigma in items)
    return out


def apply(x: WeylMonoidElement, lam: WeightVector) -> WeightVector | None:
    """``σλ`` if it lies in the face of x, else None (undefined)."""
    mu = x.sigma.act(lam)
    return mu if face_contains(x.face, mu) else None


def _word(sigma1: WeylElement, theta: frozenset[int], sigma2: WeylElement) -> str:
    parts = [f"s{i}" for i in sigma1.reduced_word]
    if theta:
        parts.append("e[" + ",".join(str(i) for i in sorted(theta)) + "]")
    parts += [f"s{i}" for i in sigma2.reduced_word]
    return " ".join(parts) or "e[]"


def element_word(x: WeylMonoidElement) -> str:
    """The Type1 normal form written as a word, e.g. ``"s2 e[1,2] s1"``."""
    nf = normal_form(x, TYPE1)
    return _word(nf.sigma1, nf.theta, nf.sigma2)

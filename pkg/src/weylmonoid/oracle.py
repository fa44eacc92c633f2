"""Brute-force model of the Weyl monoid as partial maps on a weight sample.

Membership of a cone point in ``w R(Θ)`` is tested straight from the
definition (all ``λ(w h_i)`` vanish for ``i ∈ Θ``); nothing here touches the
canonical forms or the face intersection used by :mod:`weylmonoid.monoid`.
Equality of maps is equality *on the sample*, which refutes element equality
soundly but only confirms it relative to the sample.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import SampleMismatch, SampleOverflow
from .realization import Realization, WeightVector
from .weyl import simple_reflection

DEFAULT_SAMPLE_CAP = 10**5


@dataclass(frozen=True)
class WeightSample:
    realization: Realization
    points: tuple[WeightVector, ...]
    generators: tuple[WeightVector, ...]
    orbit_length: int


def build_sample(r: Realization, L: int, cap: int = DEFAULT_SAMPLE_CAP) -> WeightSample:
    """W-orbits (words of length <= L) of the points ``p_Θ`` (Θ special) and all ``Λ_i``."""
    if L < 1:
        raise ValueError("orbit length must be >= 1")
    cache = r.__dict__.setdefault("_samples", {})
    if (L, cap) in cache:
        return cache[(L, cap)]
    gens = []
    for sp in r.gcm.specials:
        gens.append(WeightVector(0 if (k + 1) in sp.theta else 1 for k in range(r.dim)))
    for i in range(1, r.dim + 1):
        gens.append(r.fundamental_weight(i))
    gens = list(dict.fromkeys(gens))
    refl = [simple_reflection(r, i) for i in range(1, r.n + 1)]
    seen = dict.fromkeys(gens)
    frontier = list(gens)
    for _ in range(L):
        nxt = []
        for lam in frontier:
            for s in refl:
                mu = s.act(lam)
                if mu not in seen:
                    seen[mu] = None
                    nxt.append(mu)
                    if len(seen) > cap:
                        raise SampleOverflow(f"sample exceeds {cap} points")
        frontier = nxt
    sample = WeightSample(r, tuple(seen), tuple(gens), L)
    cache[(L, cap)] = sample
    return sample


@dataclass(frozen=True, eq=False)
class PartialMap:
    """A partial map tabulated on a sample; absent points are undefined."""

    sample: WeightSample
    mapping: dict = field(repr=False)
    rule: Callable[[WeightVector], WeightVector | None] = field(repr=False)

    def __call__(self, lam: WeightVector) -> WeightVector | None:
        return self.rule(lam)


def _face_rule(r: Realization, theta, w, sigma):
    coroots = [w.act_coweight(r.simple_coroot(i)) for i in sorted(theta)]

    def rule(lam: WeightVector):
        mu = sigma.act(lam)
        for c in coroots:
            if sum(a * b for a, b in zip(mu.coords, c)) != 0:
                return None
        return mu

    return rule


def _tabulate(sample: WeightSample, rule) -> PartialMap:
    mapping = {}
    for lam in sample.points:
        v = rule(lam)
        if v is not None:
            mapping[lam] = v
    return PartialMap(sample, mapping, rule)


def identity_map(sample: WeightSample) -> PartialMap:
    return _tabulate(sample, lambda lam: lam)


def to_partial_map(x, sample: WeightSample) -> PartialMap:
    """The map λ ↦ σλ, defined when σλ lies in the face of x."""
    if x.realization != sample.realization:
        raise SampleMismatch("element and sample of different realizations")
    return _tabulate(sample, _face_rule(sample.realization, x.face.theta, x.face.w, x.sigma))


def oracle_multiply(f: PartialMap, g: PartialMap) -> PartialMap:
    """``f ∘ g`` with undefined absorbing."""
    if f.sample is not g.sample:
        raise SampleMismatch("maps tabulated on different samples")

    def rule(lam):
        mid = g.rule(lam)
        return None if mid is None else f.rule(mid)

    return _tabulate(f.sample, rule)


def oracle_equal(f: PartialMap, g: PartialMap) -> bool:
    """Extensional equality on the sample (sample-relative, not a proof)."""
    if f.sample is not g.sample:
        raise SampleMismatch("maps tabulated on different samples")
    return f.mapping == g.mapping

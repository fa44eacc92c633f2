"""Index data of the orbit stratification: the closure poset of special sets,
Birkhoff strata, principal-open index sets, big-cell and slice data.

Only index combinatorics are computed.  The unipotent factors of a big cell
are infinite-dimensional; they are summarized by a count of positive real
roots up to a height bound, and that window is reported with the result.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSpecial, UnsupportedFormat
from .gcm import GCM, SpecialSet, format_set, is_special
from .monoid import WeylMonoidElement, element_word, enumerate_elements, orbit_label, parabolic_decompose
from .realization import build_realization
from .weyl import positive_roots_up_to_height


@dataclass(frozen=True)
class OrbitPoset:
    specials: tuple[SpecialSet, ...]
    hasse: tuple[tuple[int, int], ...]

    def leq(self, i: int, j: int) -> bool:
        """Whether node j lies in the closure of the orbit of node i."""
        return self.specials[i].theta <= self.specials[j].theta


@dataclass(frozen=True)
class OrbitStratum:
    theta: SpecialSet
    closure: tuple[SpecialSet, ...]
    torus_rank: int
    slice_monoid_specials: tuple[SpecialSet, ...]


@dataclass(frozen=True)
class BirkhoffStratum:
    element: WeylMonoidElement
    orbit: SpecialSet


@dataclass(frozen=True)
class BigCellData:
    theta: SpecialSet
    torus_rank: int
    torus_basis: tuple[int, ...]
    height_bound: int
    positive_root_count: int
    slice_specials: tuple[SpecialSet, ...]
    note: str = "unipotent factors are summarized by positive real roots up to height_bound"


def _require_special(gcm: GCM, theta: Iterable[int]) -> SpecialSet:
    theta = frozenset(theta)
    if not is_special(gcm, theta):
        raise NotSpecial(f"{format_set(theta)} is not special")
    return next(s for s in gcm.specials if s.theta == theta)


def orbit_poset(gcm: GCM) -> OrbitPoset:
    """Special sets ordered by inclusion, with covering pairs as Hasse edges."""
    sp = gcm.specials
    edges = []
    for i, a in enumerate(sp):
        for j, b in enumerate(sp):
            if a.theta < b.theta and not any(
                a.theta < c.theta < b.theta for c in sp
            ):
                edges.append((i, j))
    return OrbitPoset(sp, tuple(sorted(edges)))


def orbit_strata(gcm: GCM) -> list[OrbitStratum]:
    dim = 2 * gcm.n - gcm.rank_l
    out = []
    for s in gcm.specials:
        closure = tuple(x for x in gcm.specials if x.theta >= s.theta)
        slices = tuple(x for x in gcm.specials if x.theta <= s.theta)
        out.append(OrbitStratum(s, closure, dim - len(s.theta), slices))
    return out


def birkhoff_strata(gcm: GCM, bound: int) -> list[BirkhoffStratum]:
    r = build_realization(gcm)
    return [BirkhoffStratum(x, orbit_label(x)) for x in enumerate_elements(r, bound)]


def strata_counts(strata: Sequence[BirkhoffStratum]) -> list[tuple[SpecialSet, int]]:
    return list(Counter(s.orbit for s in strata).items())


def principal_open_index(gcm: GCM, theta: Iterable[int], bound: int) -> list[WeylMonoidElement]:
    """Elements of the enumeration window lying in the parabolic submonoid for Θ."""
    sp = _require_special(gcm, theta)
    r = build_realization(gcm)
    return [x for x in enumerate_elements(r, bound) if parabolic_decompose(x, sp.theta).member]


def big_cell_data(gcm: GCM, theta: Iterable[int], height_bound: int) -> BigCellData:
    sp = _require_special(gcm, theta)
    r = build_realization(gcm)
    roots = positive_roots_up_to_height(r, height_bound)
    # roots outside Σ_{j∈Θ} Z α_j
    outside = [rt for rt in roots if any(a for k, a in enumerate(rt.alpha) if (k + 1) not in sp.theta)]
    return BigCellData(
        theta=sp,
        torus_rank=r.dim - len(sp.theta),
        torus_basis=tuple(k for k in range(1, r.dim + 1) if k not in sp.theta),
        height_bound=height_bound,
        positive_root_count=len(outside),
        slice_specials=tuple(x for x in gcm.specials if x.theta <= sp.theta),
    )


def _node_label(s: SpecialSet) -> str:
    return "Θ=" + format_set(s.theta)


def emit(obj, fmt: str = "json", strata: Sequence[BirkhoffStratum] | None = None) -> str:
    """Serialize an OrbitPoset (optionally with strata counts) or a list of strata.

    DOT is only defined for posets.  Output is deterministic.
    """
    fmt = fmt.lower()
    if isinstance(obj, OrbitPoset):
        if fmt == "json":
            payload = {
                "specials": [sorted(s.theta) for s in obj.specials],
                "hasse": [list(e) for e in obj.hasse],
                "strata": [
                    {"theta": sorted(o.theta), "count": k} for o, k in strata_counts(strata or [])
                ],
            }
            return json.dumps(payload, sort_keys=True) + "\n"
        if fmt == "dot":
            lines = ["digraph orbits {"]
            for i, s in enumerate(obj.specials):
                lines.append(f'  n{i} [label="{_node_label(s)}"];')
            for i, j in obj.hasse:
                lines.append(f"  n{i} -> n{j};")
            lines.append("}")
            return "\n".join(lines) + "\n"
        raise UnsupportedFormat(f"format {fmt!r} not supported for posets")
    if isinstance(obj, (list, tuple)):
        if fmt != "json":
            raise UnsupportedFormat(f"format {fmt!r} not supported for strata lists")
        payload = [{"element": element_word(s.element), "theta": sorted(s.orbit.theta)} for s in obj]
        return json.dumps(payload, sort_keys=True) + "\n"
    raise UnsupportedFormat(f"cannot emit {type(obj).__name__}")

"""Exact combinatorics of Kac-Moody Weyl groups, Tits cone faces and the Weyl monoid."""
from __future__ import annotations

from .errors import *  # noqa: F401,F403
from .gcm import (
    GCM,
    ComponentType,
    SpecialSet,
    classify_component,
    components,
    enumerate_special,
    infinite_part,
    is_special,
    orthogonal_complement,
    validate_gcm,
)
from .realization import (
    Dominance,
    Realization,
    WeightVector,
    build_realization,
    dominance_compare,
    pairing,
    project_pJ,
)
from .weyl import (
    INFINITY,
    RealRoot,
    WeylElement,
    coxeter_order,
    descents,
    elements_up_to,
    from_word,
    is_in_parabolic,
    length,
    min_coset_rep_left,
    min_coset_rep_right,
    real_roots_up_to,
    reduced_word,
    simple_reflection,
)
from .tits import (
    Face,
    Facet,
    InCone,
    NotInCone,
    Status,
    Unknown,
    face_intersect,
    face_join,
    facet_of,
    make_face,
    relint_point,
    smallest_face,
    standard_face,
    to_dominant,
    translate_face,
    whole_cone,
)
from .monoid import (
    TYPE1,
    TYPE2,
    NormalForm,
    WeylMonoidElement,
    apply,
    equals,
    enumerate_elements,
    from_weyl,
    idempotent,
    multiply,
    normal_form,
    orbit_label,
    parabolic_decompose,
    reassemble,
    unit,
)
from .oracle import WeightSample, build_sample, oracle_equal, oracle_multiply, to_partial_map
from .strata import big_cell_data, birkhoff_strata, emit, orbit_poset, orbit_strata, principal_open_index
from .catalog import CATALOG

__version__ = "0.1.0"

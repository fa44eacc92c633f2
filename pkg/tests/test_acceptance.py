"""Acceptance criteria 1-10, each with its time limit.

Every criterion prints one ``criterion N: PASS|FAIL`` line (also under
pytest's output capture) and then asserts.  Run alone with
``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import io
import itertools
import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import brute_weyl, connected, oracle_specials, oracle_type, sub_matrix  # noqa: E402

from weylmonoid import (  # noqa: E402
    CATALOG,
    INFINITY,
    InCone,
    NormalForm,
    Status,
    TYPE1,
    TYPE2,
    WeightVector,
    build_realization,
    build_sample,
    classify_component,
    coxeter_order,
    elements_up_to,
    enumerate_elements,
    enumerate_special,
    face_intersect,
    from_weyl,
    from_word,
    idempotent,
    make_face,
    normal_form,
    oracle_equal,
    oracle_multiply,
    orbit_poset,
    orbit_strata,
    orthogonal_complement,
    parabolic_decompose,
    reassemble,
    relint_point,
    simple_reflection,
    smallest_face,
    standard_face,
    to_dominant,
    to_partial_map,
    translate_face,
    validate_gcm,
)
from weylmonoid.cli import parse_element, run  # noqa: E402
from weylmonoid.monoid import multiply, satisfies_flavor  # noqa: E402
from weylmonoid.strata import birkhoff_strata, strata_counts  # noqa: E402
from weylmonoid.weyl import identity  # noqa: E402


def _real(name):
    return build_realization(validate_gcm(CATALOG[name]))


@contextmanager
def criterion(number, limit, capsys=None):
    """Time the body, print one PASS/FAIL line, then fail on error or overrun."""
    start = time.perf_counter()
    error = None
    try:
        yield
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < limit
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s, limit {limit}s)"
    if error is not None:
        line += f" {error}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    if error is not None:
        raise error
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s > {limit}s"


def mul(x, y, failures):
    p, status = multiply(x, y)
    if status is not Status.EXACT:
        failures.append((x, y))
    return p


def test_criterion_01_coxeter_relations(capsys):
    with criterion(1, 10, capsys):
        for name in CATALOG:
            r = _real(name)
            A = r.gcm.entries
            e = identity(r)
            for i, j in itertools.permutations(range(1, r.n + 1), 2):
                m = coxeter_order(r.gcm, i, j)
                prod = A[i - 1][j - 1] * A[j - 1][i - 1]
                assert m == {0: 2, 1: 3, 2: 4, 3: 6}.get(prod, INFINITY), (name, i, j)
                p = simple_reflection(r, i) * simple_reflection(r, j)
                x = e
                for k in range(1, 13):
                    x = x * p
                    if m == INFINITY or k < m:
                        assert x != e, (name, i, j, k)
                    elif k == m:
                        assert x == e, (name, i, j, k)


def test_criterion_02_infinite_dihedral(capsys):
    with criterion(2, 10, capsys):
        r = _real("affine_A1")
        ours = elements_up_to(r, 10)
        brute = brute_weyl(CATALOG["affine_A1"], 10)
        for k in range(1, 11):
            assert sum(1 for x in ours if x.length == k) == 2, k
            assert sum(1 for v in brute.values() if v == k) == 2, k


def test_criterion_03_special_sets(capsys):
    with criterion(3, 30, capsys):
        for name, A in CATALOG.items():
            g = validate_gcm(A)
            n = g.n
            for k in range(1, n + 1):
                for C in itertools.combinations(range(1, n + 1), k):
                    if connected(A, C):
                        assert str(classify_component(g, C)) == oracle_type(sub_matrix(A, C)), (name, C)
            assert [s.theta for s in enumerate_special(g)] == oracle_specials(A), name
        expected = [frozenset(), frozenset({1, 2})]
        assert [s.theta for s in enumerate_special(validate_gcm(CATALOG["affine_A1"]))] == expected
        assert [s.theta for s in enumerate_special(validate_gcm(CATALOG["mixed_3"]))] == expected


def test_criterion_04_monoid_laws(capsys):
    with criterion(4, 300, capsys):
        rng = random.Random(20261017)
        failures = []
        for name in CATALOG:
            r = _real(name)
            els = enumerate_elements(r, 4)
            table = {(x, y): mul(x, y, failures) for x in els for y in els}
            assert not failures, (name, failures[:3])
            if name == "affine_A1":
                triples = itertools.product(els, repeat=3)
            else:
                triples = ((rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(10_000))
            for x, y, z in triples:
                xy = table[(x, y)]
                yz = table[(y, z)]
                left = table[(xy, z)] if (xy, z) in table else mul(xy, z, failures)
                right = table[(x, yz)] if (x, yz) in table else mul(x, yz, failures)
                assert left == right, (name, x, y, z)
            faces = list(dict.fromkeys(x.face for x in els))
            for R, S in itertools.product(faces, repeat=2):
                G, status = face_intersect(R, S)
                assert status is Status.EXACT
                assert mul(idempotent(R), idempotent(S), failures) == idempotent(G)
            for R in faces:
                for w in elements_up_to(r, 4):
                    conj = mul(mul(from_weyl(w), idempotent(R), failures), from_weyl(w.inverse), failures)
                    assert conj == idempotent(translate_face(w, R)), (name, R, w)
            assert not failures, (name, failures[:3])


def test_criterion_05_normal_forms(capsys):
    with criterion(5, 300, capsys):
        failures = []
        for name in CATALOG:
            r = _real(name)
            bound = 6 if name == "affine_A1" else 4
            els = enumerate_elements(r, bound)
            for flavor in (TYPE1, TYPE2):
                keys = {}
                for x in els:
                    nf = normal_form(x, flavor)
                    assert satisfies_flavor(nf), (name, flavor, x)
                    assert reassemble(nf) == x, (name, flavor, x)
                    key = (nf.sigma1, nf.theta, nf.sigma2)
                    assert key not in keys, (name, flavor, x, keys.get(key))
                    keys[key] = x
                # uniqueness from the other side: distinct admissible triples give distinct elements
                ws = elements_up_to(r, min(bound, 3))
                for sp in r.gcm.specials:
                    E = idempotent(standard_face(r, sp.theta))
                    made = {}
                    for a, b in itertools.product(ws, repeat=2):
                        cand = NormalForm(flavor, a, sp.theta, b)
                        if not satisfies_flavor(cand):
                            continue
                        x = mul(mul(from_weyl(a), E, failures), from_weyl(b), failures)
                        assert x not in made, (name, flavor, a, b, made.get(x))
                        made[x] = (a, b)
                        nf = normal_form(x, flavor)
                        assert (nf.sigma1, nf.sigma2) == (a, b)
        assert not failures


def test_criterion_06_oracle_equivalence(capsys):
    with criterion(6, 600, capsys):
        for name in CATALOG:
            r = _real(name)
            els = enumerate_elements(r, 4)
            sample = build_sample(r, 6)
            maps = {x: to_partial_map(x, sample) for x in els}
            for x, y in itertools.product(els, repeat=2):
                p, status = multiply(x, y)
                if status is Status.EXACT:
                    assert oracle_equal(to_partial_map(p, sample), oracle_multiply(maps[x], maps[y])), (name, x, y)
                assert (x == y) == oracle_equal(maps[x], maps[y]), (name, x, y)


def test_criterion_07_stratification(capsys):
    with criterion(7, 60, capsys):
        for name, A in CATALOG.items():
            g = validate_gcm(A)
            p = orbit_poset(g)
            sp = oracle_specials(A)
            assert [s.theta for s in p.specials] == sp
            covers = {
                (i, j)
                for i, a in enumerate(sp)
                for j, b in enumerate(sp)
                if a < b and not any(a < c < b for c in sp)
            }
            assert set(p.hasse) == covers, name
            for i, j in itertools.product(range(len(sp)), repeat=2):
                assert p.leq(i, j) == (sp[i] <= sp[j])
        g = validate_gcm(CATALOG["affine_A1"])
        p = orbit_poset(g)
        assert [s.theta for s in p.specials] == [frozenset(), frozenset({1, 2})] and p.hasse == ((0, 1),)
        brute = brute_weyl(CATALOG["affine_A1"], 8)
        for k in range(9):
            counts = {o.theta: c for o, c in strata_counts(birkhoff_strata(g, k))}
            w_le_k = sum(1 for v in brute.values() if v <= k)
            assert counts == {frozenset(): w_le_k, frozenset({1, 2}): 1}, k


def test_criterion_08_big_cell_indices(capsys):
    with criterion(8, 60, capsys):
        for name in CATALOG:
            r = _real(name)
            g = r.gcm
            els = enumerate_elements(r, 4)
            for sp in g.specials:
                e = idempotent(standard_face(r, sp.theta))
                hits = [x for x in els if x.theta == sp.theta and parabolic_decompose(x, sp.theta).member]
                assert hits == [e], (name, sp.theta, hits)
            for st in orbit_strata(g):
                assert st.torus_rank == 2 * g.n - g.rank_l - len(st.theta.theta)


def test_criterion_09_tits_round_trips(capsys):
    with criterion(9, 120, capsys):
        rng = random.Random(9)
        for name in CATALOG:
            r = _real(name)
            for _ in range(200):
                dom = WeightVector(rng.randint(0, 5) for _ in range(r.dim))
                w = from_word(r, [rng.randint(1, r.n) for _ in range(rng.randint(0, 10))])
                res = to_dominant(r, w.act(dom))
                assert isinstance(res, InCone) and res.dominant == dom
                assert res.w.act(dom) == w.act(dom)
            sample = build_sample(r, 3).points
            for sp in r.gcm.specials:
                R = standard_face(r, sp.theta)
                for w in elements_up_to(r, 5):
                    F = make_face(sp.theta, w)
                    assert smallest_face(r, relint_point(F)) == F, (name, F)
                p = relint_point(R)
                for u in elements_up_to(r, 6, sp.theta):
                    assert u.act(p) == p
                K = sp.theta | orthogonal_complement(r.gcm, sp.theta)
                on_R = [lam for lam in sample if all(lam[i - 1] == 0 for i in sp.theta)]
                for u in elements_up_to(r, 6, K):
                    assert translate_face(u, R) == R
                    for lam in on_R:
                        mu = u.act(lam)
                        assert all(mu[i - 1] == 0 for i in sp.theta)


def test_criterion_10_cli_round_trip(capsys):
    with criterion(10, 60, capsys):
        for name in CATALOG:
            r = _real(name)
            outs = []
            for _ in range(2):
                buf = io.StringIO()
                assert run(["enum", "--bound", "4", "--gcm", name], stdout=buf) == 0
                outs.append(buf.getvalue())
            assert outs[0] == outs[1]
            words = outs[0].splitlines()[1:]
            parsed = [parse_element(w, r)[0] for w in words]
            assert parsed == enumerate_elements(r, 4), name
            buf = io.StringIO()
            run(["strata", "--bound", "3", "--gcm", name, "--format", "json"], stdout=buf)
            buf2 = io.StringIO()
            run(["strata", "--bound", "3", "--gcm", name, "--format", "json"], stdout=buf2)
            assert buf.getvalue() == buf2.getvalue()


def _all():
    return [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]


if __name__ == "__main__":
    failed = 0
    for fn in _all():
        try:
            fn(None)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)

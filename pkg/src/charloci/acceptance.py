"""End-to-end acceptance checks binding all the modules together.

Each criterion is a plain function: it raises AssertionError on the
first mismatch and returns a small summary dict.  Every numeric
expectation is exact, and every criterion carries a wall-clock budget
in seconds.  ``run_all`` powers both the pytest acceptance suite and
the ``selftest`` subcommand.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from . import linalg
from .alexander import (
    bns_rays,
    classify_images,
    commutator_cocycle,
    finite_field_records,
    minimal_prime_characters,
    record_covers,
)
from .cohomology import (
    cocycle_value_oracle,
    enumerate_exceptional,
    fox_matrix,
    h1,
    is_coboundary,
    is_cocycle,
    probe_matrix,
)
from .errors import CharacterError
from .fields import (
    PrimeField,
    Rationals,
    RationalFunctionField,
    SimpleExtension,
)
from .orbifolds import OrbifoldSignature, crosscheck_prediction
from .poly import (
    UnivariatePolynomial,
    element_order,
    euler_phi,
    minimal_polynomial,
)
from .presentations import (
    Character,
    Presentation,
    baumslag_solitar,
    free_reduce,
    surface_group,
)
from .tree import (
    LatticeClass,
    apply_matrix,
    ball,
    base_vertex,
    busemann_upper,
    busemann_via_limit,
    classify_affine_action,
    classify_matrix,
    displacement,
    lattice_distance,
    mat_det,
)
from .valuations import PAdicValuation, PolyAdicValuation

QQ = Rationals()


def _random_rational(rng, lo=1, hi=40):
    num = rng.randint(lo, hi) * rng.choice((1, -1))
    den = rng.randint(lo, hi)
    return QQ.coerce(Fraction(num, den))


def _random_function(field, rng, terms=3):
    base = field.base
    q = base.size

    def poly():
        cs = (base.from_int(rng.randint(0, q - 1))
              for _ in range(rng.randint(1, terms)))
        return tuple(cs)

    while True:
        num, den = poly(), poly()
        if any(not c.is_zero() for c in num) and any(not c.is_zero()
                                                     for c in den):
            return field.from_fraction(num) / field.from_fraction(den)


def tree_fixtures():
    """Standard-apartment distances, unipotent fixed balls, triangular
    shifts, and the Busemann cocycle against the valuation."""
    v2 = PAdicValuation(2)
    assert lattice_distance(LatticeClass(v2, 0, 0), LatticeClass(v2, 3, 0)) == 3

    # [[1, u], [0, 1]] with v(u) = 2 fixes the apartment vertex n iff n <= 2
    g = ((QQ.one, QQ.from_int(4)), (QQ.zero, QQ.one))
    for n in range(-3, 7):
        x = LatticeClass(v2, n, 0)
        assert (apply_matrix(v2, g, x) == x) == (n <= 2), n

    # [[pi^n, u], [0, 1]] shifts vertex m to m + n whenever m + n <= v(u)
    checked = 0
    for n in range(-3, 4):
        for k in range(0, 5):
            for c in (1, 3):
                u = QQ.coerce(Fraction(c * 2 ** k))
                g = ((QQ.coerce(Fraction(2) ** n), u), (QQ.zero, QQ.one))
                for m in range(-3, 4):
                    if m + n > k:
                        continue
                    img = apply_matrix(v2, g, LatticeClass(v2, m, 0))
                    assert img == LatticeClass(v2, m + n, 0), (n, m, k, c)
                    checked += 1

    # Busemann value of [[alpha, beta], [0, 1]] is v(alpha), and the
    # horofunction limit agrees
    rng = random.Random(7)
    F3t = RationalFunctionField(PrimeField(3))
    settings = [
        (v2, lambda: _random_rational(rng)),
        (PAdicValuation(3), lambda: _random_rational(rng)),
        (PolyAdicValuation(F3t, (0, 1)), lambda: _random_function(F3t, rng)),
    ]
    for v, rand in settings:
        K = v.field
        for _ in range(50):
            a, b = rand(), rand()
            g = ((a, b), (K.zero, K.one))
            w = busemann_upper(v, g)
            assert w == v.of(a)
            assert busemann_via_limit(v, g) == w
    return {"shift_grid": checked, "busemann_samples": 150}


def affine_trichotomy():
    """The bounded / axial / fixed-end trichotomy on the soluble
    baumslag_solitar(1, 2) example."""
    P = baumslag_solitar(1, 2)
    v2 = PAdicValuation(2)
    chi = Character(P, QQ, (1, 2))
    report = classify_affine_action(chi, (QQ.one, QQ.zero), v2)
    assert report.kind == "exceptional"
    assert report.busemann_values == [0, 1]
    assert not report.coboundary

    # the same class shifted by a coboundary keeps the classification
    # data but a pure coboundary flattens to an axial action
    cob = tuple((x - 1) * QQ.one for x in chi.images)
    report = classify_affine_action(chi, cob, v2)
    assert report.kind == "axial"

    # unit character values keep the base orbit bounded
    chi3 = Character(P, QQ, (1, 3))
    report = classify_affine_action(chi3, (QQ.zero, QQ.one), v2)
    assert report.kind == "bounded-orbit"
    return {"kinds": ("exceptional", "axial", "bounded-orbit")}


def cohomology_ground_truth():
    """Exact H^1 dimensions on the two reference groups."""
    P = baumslag_solitar(1, 2)
    dims = {}
    for val in (2, 1, 3, 5, -1, Fraction(1, 2)):
        chi = Character(P, QQ, (QQ.one, QQ.coerce(Fraction(val))))
        dims[str(val)] = h1(P, chi, crosscheck=True).dim_h1
    assert dims == {"2": 1, "1": 1, "3": 0, "5": 0, "-1": 0, "1/2": 0}, dims

    S2 = surface_group(2)
    rng = random.Random(23)
    pool = [Fraction(2), Fraction(3), Fraction(5), Fraction(1, 2),
            Fraction(-1), Fraction(1, 3)]
    sampled = 0
    while sampled < 10:
        images = tuple(QQ.coerce(rng.choice(pool)) for _ in range(4))
        if all(v.is_one() for v in images):
            continue
        rep = h1(S2, Character(S2, QQ, images), crosscheck=True)
        assert rep.dim_h1 == 2, [str(v) for v in images]
        sampled += 1

    F5 = PrimeField(5)
    units = [F5.from_int(k) for k in range(1, 5)]
    nontrivial = 0
    for tup in itertools.product(units, repeat=4):
        rep = h1(S2, Character(S2, F5, tup))
        if all(v.is_one() for v in tup):
            assert rep.dim_h1 == 4
        else:
            assert rep.dim_h1 == 2, [str(v) for v in tup]
            nontrivial += 1
    trivial = h1(S2, Character(S2, QQ, (1, 1, 1, 1)))
    assert trivial.dim_h1 == 4 and trivial.trivial_character
    return {"surface_f5_nontrivial": nontrivial, "surface_q_samples": sampled}


def cocycle_oracle_equivalence():
    """Fox-calculus dimensions against the affine matrix-product system
    on seeded random presentations, plus the per-relator oracle."""
    rng = random.Random(1202)
    F5 = PrimeField(5)
    names = ("x", "y", "z")

    def random_relator(n):
        while True:
            word = tuple((rng.randrange(n), rng.choice((1, -1)))
                         for _ in range(rng.randint(1, 8)))
            word = free_reduce(word)
            if word:
                return word

    units = [F5.from_int(k) for k in range(1, 5)]
    characters = 0
    for _ in range(20):
        n = rng.randint(1, 3)
        P = Presentation(list(names[:n]),
                         [random_relator(n) for _ in range(rng.randint(0, 2))])
        for tup in itertools.product(units, repeat=n):
            try:
                chi = Character(P, F5, tup)
            except CharacterError:
                continue
            characters += 1
            rep = h1(P, chi, crosscheck=True)
            rank_fox = linalg.rank(fox_matrix(P, chi), F5)
            rank_probe = linalg.rank(probe_matrix(P, chi), F5)
            assert rank_fox == rank_probe
            assert rep.dim_h1 == n - rank_probe - rep.dim_b1
            for theta in rep.cocycle_basis:
                for rel in P.relators:
                    assert cocycle_value_oracle(chi, theta, rel).is_zero()
    assert characters > 100
    return {"presentations": 20, "characters": characters}


def rank_one_pipeline():
    """Jump ideals, records, rays and the commutator cocycle on the
    soluble reference groups."""
    from .alexander import AlexanderData, alexander_ideal_rank1, jump_locus_branch

    assert str(alexander_ideal_rank1(baumslag_solitar(1, 2))) == "T - 2"
    # H_1 of BS(1,3) is Z x Z/2; the ideal generator sits on the branch
    # with trivial torsion exponents
    data = AlexanderData(baumslag_solitar(1, 3))
    branch = jump_locus_branch(data, tuple(0 for _ in data.ab.torsion_orders))
    assert str(branch.delta) == "T - 3"

    expected = {2: ("2", [(2, (0, 1))]), 3: ("3", [(3, (0, 1))])}
    for s, (image, ray_spec) in expected.items():
        P = baumslag_solitar(1, s)
        recs = minimal_prime_characters(P)
        assert len(recs) == 1
        rec = recs[0]
        assert rec.field == QQ
        assert [str(v) for v in rec.images] == ["1", image]
        assert rec.dim_h1 == 1
        assert not rec.integral_unit and not rec.torsion
        rays = bns_rays(P, recs)
        assert [(r["p"], tuple(r["direction"])) for r in rays] == ray_spec
        assert all(r["certified"] for r in rays)

    P6 = baumslag_solitar(1, 6)
    rays = bns_rays(P6, minimal_prime_characters(P6))
    assert [(r["p"], tuple(r["direction"])) for r in rays] == \
        [(2, (0, 1)), (3, (0, 1))]

    # commutator cocycle at the pivot t
    P = baumslag_solitar(1, 2)
    chi = Character(P, QQ, (1, 2))
    theta = h1(P, chi).nontrivial_cocycle()
    g0, values = commutator_cocycle(chi, theta, g0=((1, 1),))
    assert g0 == ((1, 1),)
    assert [str(v) for v in values] == ["1", "0"]
    assert is_cocycle(P, chi, list(values))
    assert not is_coboundary(P, chi, list(values))
    for rel in P.relators:
        assert cocycle_value_oracle(chi, list(values), rel).is_zero()
    return {"groups": ("BS(1,2)", "BS(1,3)", "BS(1,6)")}


def kernel_certificates():
    """Every exceptional character found by exhaustive enumeration over
    small prime fields is covered by an emitted record in the sense of
    kernel containment on the abelianization."""
    groups = [
        ("bs12", baumslag_solitar(1, 2), True),
        ("bs13", baumslag_solitar(1, 3), True),
        ("genus2", surface_group(2), False),
        ("orb-1-2-2", OrbifoldSignature(1, [2, 2]).presentation(), False),
    ]
    counts = {}
    for p in (5, 7, 11):
        K = PrimeField(p)
        for name, P, rank_one in groups:
            exceptional = enumerate_exceptional(P, K)
            assert exceptional, (name, p)
            if rank_one:
                records = minimal_prime_characters(P)
                for images, _dim in exceptional:
                    chi = Character(P, K, images)
                    assert any(record_covers(r, chi) for r in records), \
                        (name, p, [str(v) for v in images])
            else:
                records = finite_field_records(P, K)
                by_images = {r.images: r for r in records}
                for images, _dim in exceptional:
                    chi = Character(P, K, images)
                    witness = by_images.get(images)
                    assert witness is not None and record_covers(witness, chi), \
                        (name, p, [str(v) for v in images])
            counts[f"{name}/F{p}"] = len(exceptional)
    return counts


def orbifold_grid():
    """Predictor verdicts against enumeration or sampling on the full
    signature-by-field grid."""
    grid = [
        OrbifoldSignature(1, [2]),
        OrbifoldSignature(1, [2, 2]),
        OrbifoldSignature(1, [3]),
        OrbifoldSignature(1, [2, 3]),
        OrbifoldSignature(2, []),
        OrbifoldSignature(2, [2]),
    ]
    fields = [QQ, PrimeField(2), PrimeField(3), PrimeField(5)]
    cells = 0
    for sig in grid:
        for K in fields:
            report = crosscheck_prediction(sig, K, budget=20000)
            assert report.agrees, (sig.label(), K.descriptor(),
                                   report.to_json()["contradictions"])
            cells += 1

    # the sampled slice over Q finds the order-2 torsion translate
    report = crosscheck_prediction(OrbifoldSignature(1, [2, 2]), QQ)
    found = {tuple(str(v) for v in rep.chi.images): rep.dim_h1
             for rep in report.exceptional}
    assert found.get(("1", "1", "-1", "-1")) == 2, found

    # characteristic 2 kills the cone relator: everything jumps
    report = crosscheck_prediction(OrbifoldSignature(1, [2]), PrimeField(2))
    assert report.prediction.verdict == "all-of-Hom"
    assert report.checked_count == len(report.exceptional)
    return {"cells": cells}


def isometry_brute_force():
    """Formula classification against minimum displacement over the
    ball of radius length + 3, plus the fast displacement against the
    canonical lattice computation."""
    rng = random.Random(20260819)
    v2 = PAdicValuation(2)
    F3t = RationalFunctionField(PrimeField(3))
    vt = PolyAdicValuation(F3t, (0, 1))

    def rand_q():
        k = rng.randint(-2, 2)
        unit = Fraction(rng.choice((1, 3, 5, 7, -1, -3, -5)),
                        rng.choice((1, 3, 5, 7)))
        return QQ.coerce(unit * Fraction(2) ** k)

    def rand_t():
        return _random_function(F3t, rng) * F3t.variable ** rng.randint(-2, 2)

    classes = {"hyperbolic": 0, "elliptic": 0, "inversion": 0}
    for v, rand in ((v2, rand_q), (vt, rand_t)):
        O = base_vertex(v)
        for i in range(50):
            while True:
                g = ((rand(), rand()), (rand(), rand()))
                if not mat_det(g).is_zero():
                    break
            cls = classify_matrix(v, g)
            length = cls["translationLength"]
            verts, _ = ball(v, O, length + 3)
            disps = [displacement(v, g, x) for x in verts]
            if i < 3:
                # certify the fast displacement against the canonical path
                for x in verts[:40]:
                    assert displacement(v, g, x) == \
                        lattice_distance(x, apply_matrix(v, g, x))
            m = min(disps)
            classes[cls["type"]] += 1
            if cls["type"] == "hyperbolic":
                assert length >= 1 and m == length, (cls, m)
            elif cls["type"] == "elliptic":
                assert m == 0, (cls, m)
            else:
                assert m == 1 and all(d != 0 for d in disps), (cls, m)
    assert sum(classes.values()) == 100
    assert all(classes.values()), classes
    return classes


def _torsion_order_by_division(x):
    """Order of x by exhaustive cyclotomic division against the minimal
    polynomial, scanning every order compatible with the degree."""
    m = minimal_polynomial(x, var="T")
    d = max(m.degree, 1)
    K = m.field
    for M in range(1, 2 * d * d + 3):
        if euler_phi(M) > d:
            continue
        cyc = UnivariatePolynomial(
            K, (-K.one,) + (K.zero,) * (M - 1) + (K.one,), var="T")
        if divmod(cyc, m)[1].is_zero():
            return M
    return None


def integrality_certificates():
    """Unit-integrality and torsion flags against the division oracle."""
    K3 = SimpleExtension(QQ, (1, 1, 1), "z")
    integral, torsion, order = classify_images((K3.generator,))
    assert integral and torsion and order == 3

    Kg = SimpleExtension(QQ, (-1, -1, 1), "s")
    integral, torsion, order = classify_images((Kg.generator,))
    assert integral and not torsion and order is None

    two = QQ.from_int(2)
    integral, torsion, order = classify_images((two,))
    assert not integral and not torsion and order is None

    K4 = SimpleExtension(QQ, (1, 0, 1), "i")
    K6 = SimpleExtension(QQ, (1, -1, 1), "w")
    samples = [
        (QQ.one, 1), (QQ.from_int(-1), 2), (two, None),
        (QQ.coerce(Fraction(1, 2)), None),
        (K3.generator, 3), (Kg.generator, None),
        (K4.generator, 4), (K6.generator, 6),
        (-K3.generator, 6), (K3.generator + 1, 6),
        (K3.generator - 1, None), (K4.generator * 2, None),
    ]
    for x, expect in samples:
        by_division = _torsion_order_by_division(x)
        assert by_division == expect, (str(x), by_division, expect)
        assert element_order(x) == expect, str(x)
        _, torsion, order = classify_images((x,))
        assert torsion == (expect is not None) and order == expect
    return {"samples": len(samples)}


CRITERIA = (
    ("tree-fixtures", 5.0, tree_fixtures),
    ("affine-trichotomy", 1.0, affine_trichotomy),
    ("cohomology-ground-truth", 10.0, cohomology_ground_truth),
    ("cocycle-oracle-equivalence", 30.0, cocycle_oracle_equivalence),
    ("rank-one-pipeline", 5.0, rank_one_pipeline),
    ("kernel-certificates", 60.0, kernel_certificates),
    ("orbifold-grid", 60.0, orbifold_grid),
    ("isometry-brute-force", 60.0, isometry_brute_force),
    ("integrality-certificates", 1.0, integrality_certificates),
)


def run_all(names=None):
    """Run the acceptance criteria and report per-criterion timing.

    Returns a list of {criterion, ok, seconds, budget, ...} entries; a
    criterion fails on any AssertionError, unexpected exception, or
    budget overrun.
    """
    results = []
    for name, budget, fn in CRITERIA:
        if names is not None and name not in names:
            continue
        start = time.perf_counter()
        entry = {"criterion": name, "budget": budget}
        try:
            summary = fn()
            entry["seconds"] = round(time.perf_counter() - start, 3)
            entry["summary"] = summary
            entry["ok"] = entry["seconds"] <= budget
            if not entry["ok"]:
                entry["error"] = "budget exceeded"
        except Exception as exc:  # report, never propagate
            entry["seconds"] = round(time.perf_counter() - start, 3)
            entry["ok"] = False
            entry["error"] = f"{type(exc).__name__}: {exc}"
        results.append(entry)
    return results

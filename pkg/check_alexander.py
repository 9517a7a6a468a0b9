import random
from fractions import Fraction

from charloci.alexander import (
    AlexanderData, alexander_ideal_rank1, alexander_matrix, bns_rays,
    commutator_cocycle, exceptional_rays, classify_images,
    finite_field_records, integrality_and_torsion, jump_locus_branch,
    minimal_prime_characters, record_covers, torsion_branches,
)
from charloci.cohomology import h1, fox_matrix, enumerate_exceptional
from charloci.errors import CharacterError, MathDomainError
from charloci.fields import PrimeField, Rationals, RationalFunctionField
from charloci.presentations import (
    Abelianization, Character, baumslag_solitar, parse_presentation,
)

QQ = Rationals()

# --- rank-one ideals, frozen anchors (torsion-free abelianization)
for (m, n), expect in [((1, 2), "T - 2"), ((2, 3), "2T - 3"),
                       ((3, 2), "3T - 2")]:
    delta = alexander_ideal_rank1(baumslag_solitar(m, n))
    assert str(delta) == expect, (m, n, str(delta))
print("rank-one ideal anchors pass")

# --- the matrix display
data = AlexanderData(baumslag_solitar(1, 2))
js = data.to_json()
assert js["freeRank"] == 1 and js["torsionOrders"] == []
assert js["matrix"] == [["T - 2", "0"]], js["matrix"]

# --- specialize invariant: pushing down then evaluating equals evaluating
rng = random.Random(11)
for P in [baumslag_solitar(1, 2), baumslag_solitar(2, 3),
          parse_presentation("group K\ngens a t\nrel t a t^-1 a\n")]:
    data = AlexanderData(P)
    ab = data.ab
    for field in [QQ, PrimeField(7)]:
        for _ in range(8):
            if field is QQ:
                free = [QQ.coerce(Fraction(rng.randint(1, 9), rng.randint(1, 9)))
                        for _ in ab.free_indices]
            else:
                free = [field.from_int(rng.randint(1, 6))
                        for _ in ab.free_indices]
            tors = []
            for _, d in ab.torsion:
                tors.append(field.from_int(-1) if rng.random() < 0.5
                            else field.one)
                assert tors[-1] ** d == field.one
            coords = []
            fi = ti = 0
            for d in ab.diagonal:
                if d == 0:
                    coords.append(free[fi]); fi += 1
                elif d == 1:
                    coords.append(field.one)
                else:
                    coords.append(tors[ti]); ti += 1
            images = ab.character_images(field, coords)
            chi = Character(P, field, images)
            assert data.specialize(field, free, tors) == fox_matrix(P, chi)
print("specialize invariant passes")

# --- BS(1,2) minimal primes over Q
P = baumslag_solitar(1, 2)
recs = minimal_prime_characters(P)
assert len(recs) == 1
r = recs[0]
assert r.field == QQ and [str(v) for v in r.images] == ["1", "2"]
assert r.dim_h1 == 1 and str(r.factor) == "T - 2"
assert not r.integral_unit and not r.torsion and not r.generic
rays = exceptional_rays(P, r)
assert [(e["p"], e["direction"], e["kind"]) for e in rays] == \
    [(2, [0, 1], "exceptional")]
assert all(e["certified"] for e in rays)
print("BS(1,2) record + ray pass")

# --- BS(1,6): abelianization Z x Z/5, branches over Q(zeta_5) are all
# hyperplane artifacts; the locus is the single rational point (1, 6)
P = baumslag_solitar(1, 6)
ab = Abelianization(P)
assert ab.betti_number == 1 and ab.torsion_orders == (5,)
branches = torsion_branches(AlexanderData(P))
assert [str(b.delta) for b in branches] == \
    ["T - 6", "T - 1", "T - 1", "T - 1", "T - 1"]
assert branches[1].field.degree == 4
recs = minimal_prime_characters(P)
assert len(recs) == 1, [r.to_json() for r in recs]
r = recs[0]
assert r.field == QQ and [str(v) for v in r.images] == ["1", "6"]
assert not r.torsion and not r.integral_unit
# independent check over F_11, which contains the 5th roots of unity
found = enumerate_exceptional(P, PrimeField(11))
assert sorted(tuple(str(v) for v in im) for im, _ in found) == \
    [("1", "1"), ("1", "6")]
rays = exceptional_rays(P, r)
assert [(e["p"], e["direction"]) for e in rays] == [(2, [0, 1]), (3, [0, 1])]
assert all(e["kind"] == "exceptional" and e["certified"] for e in rays)
print("BS(1,6) torsion branches + rays pass")

# --- trefoil: irreducible quadratic factor, torsion record in Q(zeta_6)
P = parse_presentation("group trefoil\ngens x y\nrel x y x y^-1 x^-1 y^-1\n")
delta = alexander_ideal_rank1(P)
assert str(delta) == "T^2 - T + 1", str(delta)
recs = minimal_prime_characters(P)
assert len(recs) == 1
r = recs[0]
assert r.field.descriptor() == "Q[T]/(T^2 - T + 1)"
assert r.integral_unit and r.torsion and r.torsion_order == 6
assert r.dim_h1 == 1
# over F_7 the quadratic splits: two rational torsion points
found = enumerate_exceptional(P, PrimeField(7))
assert sorted(tuple(str(v) for v in im) for im, _ in found) == \
    [("1", "1"), ("3", "3"), ("5", "5")]
recs7 = minimal_prime_characters(P, base=PrimeField(7))
assert len(recs7) == 2
assert sorted([str(v) for v in t.images] for t in recs7) == \
    [["3", "3"], ["5", "5"]]
assert all(t.torsion and t.integral_unit for t in recs7)
# over F_5 it stays irreducible: one record in F_25
recs5 = minimal_prime_characters(P, base=PrimeField(5))
assert len(recs5) == 1 and recs5[0].field.degree == 2
assert recs5[0].torsion and recs5[0].torsion_order == 6
print("trefoil records pass")

# --- free-by-cyclic with golden-ratio monodromy: integral unit of
# infinite order (a translate of no torsion point)
P = parse_presentation(
    "group fbc\ngens a b t\nrel t a t^-1 b^-1\nrel t b t^-1 b^-1 a^-1\n")
delta = alexander_ideal_rank1(P)
assert str(delta) == "T^2 - T - 1", str(delta)
recs = minimal_prime_characters(P)
assert len(recs) == 1
r = recs[0]
assert r.integral_unit and not r.torsion and r.dim_h1 == 1
print("free-by-cyclic record passes")

# --- BS(2,3): non-integral record, rays in both directions
P = baumslag_solitar(2, 3)
recs = minimal_prime_characters(P)
assert len(recs) == 1
r = recs[0]
assert [str(v) for v in r.images] == ["1", "3/2"]
assert not r.integral_unit and not r.torsion
rays = exceptional_rays(P, r)
assert [(e["p"], e["direction"]) for e in rays] == [(2, [0, -1]), (3, [0, 1])]
assert all(e["kind"] == "exceptional" for e in rays)
print("BS(2,3) rays pass")

# --- Klein bottle: torsion branch machinery
P = parse_presentation("group K\ngens a t\nrel t a t^-1 a\n")
ab = Abelianization(P)
assert ab.torsion_orders == (2,) and ab.betti_number == 1
branches = torsion_branches(AlexanderData(P))
assert [str(b.delta) for b in branches] == ["T + 1", "T - 1"], \
    [str(b.delta) for b in branches]
recs = minimal_prime_characters(P)
assert len(recs) == 1
r = recs[0]
assert [str(v) for v in r.images] == ["1", "-1"]
assert r.integral_unit and r.torsion and r.torsion_order == 2
assert r.dim_h1 == 1 and r.branch_exponents == (0,)
print("Klein bottle torsion record passes")

# independent oracle: enumerate over F_5 and compare
F5 = PrimeField(5)
found = enumerate_exceptional(P, F5)
# trivial plus the order-2 point
as_str = sorted(tuple(str(v) for v in images) for images, _ in found)
assert as_str == [("1", "1"), ("1", "4")], as_str
recs5 = minimal_prime_characters(P, base=F5)
assert len(recs5) == 1
assert [str(v) for v in recs5[0].images] == ["1", "4"]
assert recs5[0].torsion and recs5[0].integral_unit
print("Klein bottle F_5 oracle crosscheck passes")

# --- Z x Z/2 has no nontrivial jump: artifact roots must be dropped
P = parse_presentation("group ZxC2\ngens x u\nrel u^2\nrel x u x^-1 u^-1\n")
assert Abelianization(P).torsion_orders == (2,)
assert minimal_prime_characters(P) == []
found = enumerate_exceptional(P, F5)
assert [tuple(str(v) for v in images) for images, _ in found] == [("1", "1")]
print("Z x Z/2 artifact handling passes")

# --- Z/2 * Z: one branch vanishes identically, giving a generic record
# over Q(t) plus a hyperplane point invisible to the gcd
P = parse_presentation("group C2vZ\ngens a t\nrel a^2\nrel t a^2 t^-1 a^-2\n")
branches = torsion_branches(AlexanderData(P))
assert [b.delta if b.delta is None else str(b.delta) for b in branches] == \
    ["1", None]
recs = minimal_prime_characters(P)
assert len(recs) == 2, [r.to_json() for r in recs]
hyper = [r for r in recs if not r.generic]
gen = [r for r in recs if r.generic]
assert len(hyper) == 1 and len(gen) == 1
assert [str(v) for v in hyper[0].images] == ["-1", "1"]
assert hyper[0].torsion and hyper[0].torsion_order == 2
assert isinstance(gen[0].field, RationalFunctionField)
assert [str(v) for v in gen[0].images] == ["-1", "t"]
assert not gen[0].torsion and not gen[0].integral_unit
# brute force over F_5: the whole branch chi(a) = -1 jumps
found = enumerate_exceptional(P, PrimeField(5))
assert sorted(tuple(str(v) for v in im) for im, _ in found) == \
    [("1", "1"), ("4", "1"), ("4", "2"), ("4", "3"), ("4", "4")]
recs5 = minimal_prime_characters(P, base=PrimeField(5))
assert len(recs5) == 2
assert any(t.generic for t in recs5)
print("Z/2 * Z generic + hyperplane records pass")

# --- commutator cocycle, frozen for BS(1,2)
P = baumslag_solitar(1, 2)
chi = Character(P, QQ, (QQ.one, QQ.from_int(2)))
rep = h1(P, chi, crosscheck=True)
theta = rep.nontrivial_cocycle()
assert theta == (QQ.one, QQ.zero)
g0, values = commutator_cocycle(chi, theta)
assert g0 == ((1, 1),)
assert [str(v) for v in values] == ["1", "0"]
# explicit pivot word t^2 scales the values by chi(t^2)-1 over chi(t)-1
g0, values2 = commutator_cocycle(chi, theta, g0=((1, 2),))
assert g0 == ((1, 1), (1, 1))
assert [str(v) for v in values2] == ["3", "0"]
try:
    commutator_cocycle(chi, theta, g0=((0, 1),))
    raise SystemExit("expected CharacterError for a killed pivot")
except CharacterError:
    pass
from charloci.cohomology import is_cocycle, is_coboundary
assert is_cocycle(P, chi, list(values))
assert not is_coboundary(P, chi, list(values))
print("commutator cocycle anchor passes")

# --- mod-p matrices
data2 = alexander_matrix(baumslag_solitar(1, 2), p=2)
assert data2.characteristic == 2
assert data2.to_json()["matrix"] == [["T", "0"]]
assert str(alexander_ideal_rank1(data2)) == "T"
assert minimal_prime_characters(baumslag_solitar(1, 2),
                                base=PrimeField(2)) == []
assert enumerate_exceptional(baumslag_solitar(1, 2), PrimeField(2)) != []
data3 = alexander_matrix(baumslag_solitar(1, 2), p=3)
assert data3.to_json()["matrix"] == [["T + 1", "0"]]
try:
    data2.specialize(QQ, [QQ.from_int(2)], [])
    raise SystemExit("expected characteristic mismatch")
except MathDomainError:
    pass
print("mod-p matrix anchors pass")

# --- aggregated rays
P = baumslag_solitar(1, 6)
rays = bns_rays(P, minimal_prime_characters(P))
assert [(r["p"], tuple(r["direction"])) for r in rays] == \
    [(2, (0, 1)), (3, (0, 1))]
assert all(r["certified"] for r in rays)
print("bns_rays aggregation passes")

# --- exhaustive records and kernel certificates
P = baumslag_solitar(1, 2)
recs = minimal_prime_characters(P)
F5 = PrimeField(5)
for images, dim in enumerate_exceptional(P, F5):
    chi5 = Character(P, F5, images)
    assert any(record_covers(r, chi5) for r in recs), \
        [str(v) for v in images]
from charloci.presentations import surface_group
S2 = surface_group(2)
ff = finite_field_records(S2, F5, budget=10 ** 6)
assert len(ff) == 256  # every character of the genus-2 group jumps
assert all(r.dim_h1 in (2, 4) for r in ff)
for r in ff[:5]:
    chi5 = Character(S2, F5, r.images)
    assert record_covers(r, chi5)
assert integrality_and_torsion(ff[0]) == (ff[0].integral_unit, ff[0].torsion,
                                          ff[0].torsion_order)
print("exhaustive records and kernel certificates pass")

# classify_images sanity
ints, tors, order = classify_images((QQ.from_int(-1), QQ.one))
assert ints and tors and order == 2
ints, tors, order = classify_images((QQ.from_int(2),))
assert not ints and not tors and order is None
KT = RationalFunctionField(F5)
ints, tors, order = classify_images((KT.variable,))
assert not ints and not tors
ints, tors, order = classify_images((KT.from_fraction((F5.from_int(2),)),))
assert ints and tors and order == 4
print("classify_images passes")
print("ALL ALEXANDER CHECKS PASS")

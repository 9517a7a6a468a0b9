from fractions import Fraction

from charloci.errors import MathDomainError
from charloci.fields import PrimeField, Rationals
from charloci.orbifolds import (
    ALL_OF_HOM, FINITE_TORSION, UNSUPPORTED_GENUS_ZERO,
    OrbifoldSignature, crosscheck_prediction, direct_character_count,
    hom_group_structure, orbifold_euler_char, orbifold_presentation,
    predict_exceptional_set,
)

QQ = Rationals()
F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)

# --- Euler characteristics, frozen
sig = OrbifoldSignature(0, [2, 3, 7])
assert orbifold_euler_char(sig) == Fraction(-1, 42) and sig.is_hyperbolic
sig = OrbifoldSignature(1, [2])
assert orbifold_euler_char(sig) == Fraction(-1, 2) and sig.is_hyperbolic
sig = OrbifoldSignature(0, [2, 2])
assert orbifold_euler_char(sig) == 1 and not sig.is_hyperbolic
sig = OrbifoldSignature(1, [])
assert orbifold_euler_char(sig) == 0 and sig.is_euclidean
# monotone decreasing in each cone order and in genus
assert orbifold_euler_char(OrbifoldSignature(0, [3])) < \
    orbifold_euler_char(OrbifoldSignature(0, [2]))
assert orbifold_euler_char(OrbifoldSignature(2, [2])) < \
    orbifold_euler_char(OrbifoldSignature(1, [2]))
print("euler characteristic anchors pass")

# --- presentations, frozen
P = orbifold_presentation(OrbifoldSignature(1, [2]))
assert P.gens == ("a", "b", "x")
assert P.relators[0] == ((2, 1), (2, 1))
assert P.relators[1] == ((0, 1), (1, 1), (0, -1), (1, -1), (2, 1))
P = orbifold_presentation(OrbifoldSignature(0, [2, 3, 7]))
assert P.gens == ("x1", "x2", "x3")
assert [len(r) for r in P.relators] == [2, 3, 7, 3]
assert P.relators[3] == ((0, 1), (1, 1), (2, 1))
P = orbifold_presentation(OrbifoldSignature(2, []))
assert P.gens == ("a1", "b1", "a2", "b2") and len(P.relators) == 1
print("presentation anchors pass")

# --- character group structure
hom = hom_group_structure(OrbifoldSignature(1, [2, 2]), QQ)
assert hom.free_rank == 2 and hom.phi_orders == (2,)
assert hom.structure_label() == "(Q)*^2 x Z/2"
assert [str(v) for v in hom.generators[0].images] == ["1", "1", "-1", "-1"]
assert hom.cardinality is None
hom3 = hom_group_structure(OrbifoldSignature(1, [2, 2]), F3)
assert hom3.cardinality == 8
assert direct_character_count(
    OrbifoldSignature(1, [2, 2]).presentation(), F3) == 8
hom5 = hom_group_structure(OrbifoldSignature(1, [2, 2]), F5)
assert hom5.cardinality == 32
assert direct_character_count(
    OrbifoldSignature(1, [2, 2]).presentation(), F5) == 32
hom5 = hom_group_structure(OrbifoldSignature(2, []), F5)
assert hom5.cardinality == 256 and hom5.phi_order == 1
assert direct_character_count(
    OrbifoldSignature(2, []).presentation(), F5) == 256
# the cone generator of (1,[2]) dies in the abelianization
hom = hom_group_structure(OrbifoldSignature(1, [2]), QQ)
assert hom.phi_order == 1 and hom.structure_label() == "(Q)*^2"
hom = hom_group_structure(OrbifoldSignature(0, [2, 3, 7]), QQ)
assert hom.free_rank == 0 and hom.phi_order == 1
assert hom.structure_label() == "trivial"
print("hom structure anchors pass")

# --- verdicts
assert predict_exceptional_set(OrbifoldSignature(2, []), QQ).verdict == ALL_OF_HOM
assert predict_exceptional_set(OrbifoldSignature(1, [2, 2]), QQ).verdict == \
    FINITE_TORSION
assert predict_exceptional_set(OrbifoldSignature(1, [2]), F2).verdict == \
    ALL_OF_HOM
assert predict_exceptional_set(OrbifoldSignature(1, [2]), F3).verdict == \
    FINITE_TORSION
assert predict_exceptional_set(OrbifoldSignature(0, [2, 3, 7]), QQ).verdict == \
    UNSUPPORTED_GENUS_ZERO
for bad in [OrbifoldSignature(0, [2, 2]), OrbifoldSignature(1, [])]:
    try:
        predict_exceptional_set(bad, QQ)
        raise SystemExit("expected a non-hyperbolic rejection")
    except MathDomainError:
        pass
print("verdict anchors pass")

# --- the cross-check grid
grid = [
    OrbifoldSignature(1, [2]),
    OrbifoldSignature(1, [2, 2]),
    OrbifoldSignature(1, [3]),
    OrbifoldSignature(1, [2, 3]),
    OrbifoldSignature(2, []),
    OrbifoldSignature(2, [2]),
]
fields = [QQ, F2, F3, F5]
for sig in grid:
    for K in fields:
        report = crosscheck_prediction(sig, K, budget=20000)
        assert report.agrees, (sig.label(), K.descriptor(),
                               report.to_json()["contradictions"])
print("cross-check grid agrees everywhere")

# the sampled slice over Q of (1,[2,2]) finds the order-2 translate
report = crosscheck_prediction(OrbifoldSignature(1, [2, 2]), QQ)
assert report.mode == "union-sample" and report.checked_count == 17
found = {tuple(str(v) for v in rep.chi.images): rep.dim_h1
         for rep in report.exceptional}
assert found == {("1", "1", "1", "1"): 2, ("1", "1", "-1", "-1"): 2}, found

# char 2 kills the cone relator of (1,[2]): everything jumps
report = crosscheck_prediction(OrbifoldSignature(1, [2]), F2)
assert report.prediction.verdict == ALL_OF_HOM
assert report.mode == "exhaustive"
assert report.checked_count == 1 and len(report.exceptional) == 1

# genus 2 over F5: the whole character variety of 256 characters jumps
report = crosscheck_prediction(OrbifoldSignature(2, []), F5)
assert report.checked_count == 256 and len(report.exceptional) == 256
dims = sorted(rep.dim_h1 for rep in report.exceptional)
assert dims[:255] == [2] * 255 and dims[255] == 4
print("cross-check anchors pass")
print("ALL ORBIFOLD CHECKS PASS")

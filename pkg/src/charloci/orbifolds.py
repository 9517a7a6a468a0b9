"""Cocompact 2-orbifold groups and their rank-one jump loci.

A signature (g; m_1, ..., m_n) names the fundamental group

    < a_1, b_1, ..., a_g, b_g, x_1, ..., x_n |
      x_i^{m_i},  [a_1,b_1]...[a_g,b_g] x_1...x_n >

of a closed orientable surface of genus g with n cone points.  The
character group splits as (K*)^{2g} x Phi with Phi finite, computed from
the torsion of the abelianization and the roots of unity of the field.

``predict_exceptional_set`` classifies the exceptional locus by genus:
all of Hom for g >= 2, all of Hom for g = 1 when the characteristic
divides a cone order, a finite set of torsion characters for g = 1
otherwise.  Genus 0 is left to direct computation.

``crosscheck_prediction`` confronts the verdict with exact cohomology:
exhaustively over a finite field, and over an infinite field on the
union of a sampled free part (trivial torsion) with the fully enumerated
torsion part.  Torsion translates of positive-dimensional components do
jump off that union, so the sampled slice, not a product grid, is what
the finite-torsion verdict speaks about.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import BudgetExceededError, MathDomainError
from .alexander import classify_images
from .cohomology import h1
from .jsonio import element_json
from .poly import primitive_root_of_unity, roots_of_unity, UnivariatePolynomial
from .fields import SimpleExtension
from .presentations import Abelianization, Character, Presentation


class OrbifoldSignature:
    """Genus plus cone orders, with the exact Euler characteristic."""

    __slots__ = ("genus", "cone_orders")

    def __init__(self, genus, cone_orders=()):
        if genus < 0:
            raise MathDomainError("genus must be nonnegative")
        orders = tuple(int(m) for m in cone_orders)
        if any(m < 2 for m in orders):
            raise MathDomainError("cone orders must be at least 2")
        self.genus = int(genus)
        self.cone_orders = orders

    @property
    def euler_characteristic(self) -> Fraction:
        chi = Fraction(2 - 2 * self.genus)
        for m in self.cone_orders:
            chi -= Fraction(m - 1, m)
        return chi

    @property
    def is_hyperbolic(self) -> bool:
        return self.euler_characteristic < 0

    @property
    def is_euclidean(self) -> bool:
        return self.euler_characteristic == 0

    def label(self):
        if not self.cone_orders:
            return f"O({self.genus})"
        return f"O({self.genus};{','.join(str(m) for m in self.cone_orders)})"

    def presentation(self) -> Presentation:
        g, n = self.genus, len(self.cone_orders)
        surface = ["a", "b"] if g == 1 else \
            [name for i in range(1, g + 1) for name in (f"a{i}", f"b{i}")]
        cone = ["x"] if n == 1 else [f"x{i}" for i in range(1, n + 1)]
        gens = tuple(surface + cone)
        relators = []
        for i, m in enumerate(self.cone_orders):
            relators.append(((2 * g + i, 1),) * m)
        long = ()
        for i in range(g):
            a, b = 2 * i, 2 * i + 1
            long += ((a, 1), (b, 1), (a, -1), (b, -1))
        for i in range(n):
            long += ((2 * g + i, 1),)
        if long:
            relators.append(long)
        return Presentation(gens, relators, name=self.label())

    def to_json(self):
        return {
            "genus": self.genus,
            "coneOrders": list(self.cone_orders),
            "eulerCharacteristic": str(self.euler_characteristic),
            "hyperbolic": self.is_hyperbolic,
            "euclidean": self.is_euclidean,
        }

    def __repr__(self):
        return f"<signature {self.label()}>"


def orbifold_euler_char(sig: OrbifoldSignature) -> Fraction:
    return sig.euler_characteristic


def orbifold_presentation(sig: OrbifoldSignature) -> Presentation:
    return sig.presentation()


def _unit_roots(K, d):
    """All solutions of x^d = 1, exact over extensions too."""
    if isinstance(K, SimpleExtension):
        f = UnivariatePolynomial(
            K, [-K.one] + [K.zero] * (d - 1) + [K.one])
        out = f.roots()
        out.sort(key=lambda r: r.sort_key())
        return out
    return roots_of_unity(K, d)


class HomStructure:
    """Hom(Gamma, K*) = (K*)^{2g} x Phi, with explicit Phi generators."""

    __slots__ = ("signature", "field", "presentation", "ab", "free_rank",
                 "torsion_orders", "phi_orders", "generators", "phi_order",
                 "cardinality")

    def __init__(self, signature, field):
        self.signature = signature
        self.field = field
        P = signature.presentation()
        ab = Abelianization(P)
        self.presentation = P
        self.ab = ab
        self.free_rank = ab.betti_number
        assert self.free_rank == 2 * signature.genus
        self.torsion_orders = tuple(ab.torsion_orders)
        phi = []
        gens = []
        order = 1
        for pos, (j, d) in enumerate(ab.torsion):
            r = len(_unit_roots(field, d))
            phi.append(r)
            order *= r
            if r >= 2:
                z = primitive_root_of_unity(field, r)
                coords = [z if jj == j else field.one
                          for jj in range(len(ab.diagonal))]
                images = ab.character_images(field, coords)
                gens.append(Character(P, field, images))
        self.phi_orders = tuple(phi)
        self.generators = tuple(gens)
        self.phi_order = order
        self.cardinality = ((field.size - 1) ** self.free_rank * order
                            if field.is_finite else None)

    def structure_label(self):
        k = f"({self.field.descriptor()})*"
        parts = [f"{k}^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{r}" for r in self.phi_orders if r >= 2]
        return " x ".join(parts) if parts else "trivial"

    def to_json(self):
        return {
            "signature": self.signature.to_json(),
            "field": self.field.descriptor(),
            "freeRank": self.free_rank,
            "torsionOrders": list(self.torsion_orders),
            "phiOrders": list(self.phi_orders),
            "phiOrder": self.phi_order,
            "structure": self.structure_label(),
            "generators": [[element_json(v) for v in chi.images]
                           for chi in self.generators],
            "cardinality": self.cardinality,
        }


def hom_group_structure(sig: OrbifoldSignature, field) -> HomStructure:
    return HomStructure(sig, field)


def direct_character_count(presentation, field, budget=10 ** 6):
    """Number of characters by raw enumeration: try every unit tuple
    against every relator.  Independent of the structure computation."""
    units = [x for x in field.elements() if not x.is_zero()]
    n = len(presentation.gens)
    if len(units) ** n > budget:
        raise BudgetExceededError(
            f"{len(units) ** n} tuples exceeds the budget of {budget}")
    count = 0
    for tup in itertools.product(units, repeat=n):
        ok = True
        for rel in presentation.relators:
            acc = field.one
            for g, e in rel:
                acc = acc * (tup[g] if e == 1 else tup[g].inverse())
            if not acc.is_one():
                ok = False
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# the genus dichotomy


ALL_OF_HOM = "all-of-Hom"
FINITE_TORSION = "finite-torsion"
UNSUPPORTED_GENUS_ZERO = "unsupported-genus-zero"


class JumpLocusPrediction:
    """Predicted shape of the exceptional locus of a hyperbolic signature."""

    __slots__ = ("signature", "field", "verdict", "hom", "rationale")

    def __init__(self, signature, field, verdict, hom, rationale):
        self.signature = signature
        self.field = field
        self.verdict = verdict
        self.hom = hom
        self.rationale = tuple(rationale)

    def to_json(self):
        return {
            "signature": self.signature.to_json(),
            "field": self.field.descriptor(),
            "verdict": self.verdict,
            "hom": self.hom.to_json(),
            "rationale": list(self.rationale),
        }


def predict_exceptional_set(sig: OrbifoldSignature, field) -> JumpLocusPrediction:
    """Genus at least two: every character is exceptional.  Genus one:
    every character when the characteristic divides a cone order, else a
    finite set of torsion characters.  Genus zero: no prediction."""
    if not sig.is_hyperbolic:
        flavor = "euclidean" if sig.is_euclidean else "spherical"
        raise MathDomainError(
            f"{sig.label()} is {flavor}, not hyperbolic: "
            f"euler characteristic {sig.euler_characteristic}")
    hom = HomStructure(sig, field)
    if sig.genus == 0:
        return JumpLocusPrediction(
            sig, field, UNSUPPORTED_GENUS_ZERO, hom,
            ("genus zero is served by direct computation only",))
    if sig.genus >= 2:
        return JumpLocusPrediction(
            sig, field, ALL_OF_HOM, hom, ("genus at least two",))
    p = field.characteristic
    dividing = [m for m in sig.cone_orders if p and m % p == 0]
    if dividing:
        return JumpLocusPrediction(
            sig, field, ALL_OF_HOM, hom,
            (f"cone order {dividing[0]} vanishes mod characteristic {p}",))
    return JumpLocusPrediction(
        sig, field, FINITE_TORSION, hom,
        ("genus one with cone orders invertible in the field",))


# ---------------------------------------------------------------------------
# the cross-check harness


SAMPLE_POOL = (2, 3, 5, 1)


class CrosscheckReport:
    """Verdict versus exact cohomology on enumerated or sampled characters."""

    __slots__ = ("prediction", "mode", "checked_count", "exceptional",
                 "contradictions", "agrees")

    def __init__(self, prediction, mode, checked_count, exceptional,
                 contradictions):
        self.prediction = prediction
        self.mode = mode
        self.checked_count = checked_count
        self.exceptional = exceptional
        self.contradictions = contradictions
        self.agrees = not contradictions

    def to_json(self):
        return {
            "prediction": self.prediction.to_json(),
            "mode": self.mode,
            "checkedCount": self.checked_count,
            "exceptional": [
                {
                    "character": [element_json(v) for v in rep.chi.images],
                    "dimH1": rep.dim_h1,
                    "torsion": classify_images(rep.chi.images)[1],
                }
                for rep in self.exceptional
            ],
            "contradictions": [rep.to_json() for rep in self.contradictions],
            "agrees": self.agrees,
        }


def _coordinate_tuples(ab, field, pool, budget):
    """Coordinate assignments to check, deterministically ordered.

    Finite field: the full character group.  Infinite field: the free
    part sampled from the pool with trivial torsion, united with the
    trivial free part times the full torsion group.
    """
    torsion_opts = [_unit_roots(field, d) for _j, d in ab.torsion]
    free_count = len(ab.free_indices)
    if field.is_finite:
        units = [x for x in field.elements() if not x.is_zero()]
        units.sort(key=lambda x: x.sort_key())
        total = len(units) ** free_count
        for opts in torsion_opts:
            total *= len(opts)
        if total > budget:
            raise BudgetExceededError(
                f"{total} characters exceeds the budget of {budget}")
        free_pools = [units] * free_count
        yield from _assemble(ab, field, itertools.product(*free_pools),
                             itertools.product(*torsion_opts))
        return
    pool_values = []
    for v in pool:
        x = field.from_int(v)
        if x.is_zero():
            continue
        if x not in pool_values:
            pool_values.append(x)
    torsion_size = 1
    for opts in torsion_opts:
        torsion_size *= len(opts)
    total = len(pool_values) ** free_count + torsion_size
    if total > budget:
        raise BudgetExceededError(
            f"{total} characters exceeds the budget of {budget}")
    trivial_torsion = [tuple(field.one for _ in torsion_opts)]
    trivial_free = [(field.one,) * free_count]
    seen = set()
    for coords in itertools.chain(
            _assemble(ab, field,
                      itertools.product(*([pool_values] * free_count)),
                      trivial_torsion),
            _assemble(ab, field, trivial_free,
                      itertools.product(*torsion_opts))):
        key = tuple(coords)
        if key not in seen:
            seen.add(key)
            yield coords


def _assemble(ab, field, free_iter, torsion_iter):
    torsion_list = list(torsion_iter)
    for free in free_iter:
        for tors in torsion_list:
            coords = []
            fi = ti = 0
            for d in ab.diagonal:
                if d == 0:
                    coords.append(free[fi])
                    fi += 1
                elif d == 1:
                    coords.append(field.one)
                else:
                    coords.append(tors[ti])
                    ti += 1
            yield coords


def crosscheck_prediction(sig: OrbifoldSignature, field, budget=20000,
                          pool=SAMPLE_POOL) -> CrosscheckReport:
    """Run exact cohomology over the checked characters and compare with
    the verdict.  A contradiction is a checked character that is not
    exceptional under all-of-Hom, or an exceptional non-torsion character
    under finite-torsion."""
    pred = predict_exceptional_set(sig, field)
    P = pred.hom.presentation
    ab = pred.hom.ab
    mode = "exhaustive" if field.is_finite else "union-sample"
    checked = []
    for coords in _coordinate_tuples(ab, field, pool, budget):
        images = ab.character_images(field, coords)
        chi = Character(P, field, images)
        checked.append(h1(P, chi))
    exceptional = [rep for rep in checked if rep.exceptional]
    if pred.verdict == ALL_OF_HOM:
        contradictions = [rep for rep in checked if not rep.exceptional]
    elif pred.verdict == FINITE_TORSION:
        contradictions = [rep for rep in exceptional
                          if not classify_images(rep.chi.images)[1]]
    else:
        contradictions = []
    return CrosscheckReport(pred, mode, len(checked), exceptional,
                            contradictions)

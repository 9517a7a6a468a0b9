"""Jump loci of rank-one cohomology via the abelianized differential matrix.

The differential matrix of a presentation, pushed down to the group ring
of the abelianization, has entries that are Laurent polynomials in one
variable per free coordinate and one root-of-unity symbol per torsion
coordinate.  Specializing those symbols at a character's coordinate
values recovers the relator system at that character, so the vanishing
locus of the maximal minors is exactly the set of characters where the
twisted cohomology jumps.

With one free coordinate the machinery is complete:

* fix a torsion branch (a root-of-unity value for every torsion
  coordinate, drawn from a small cyclotomic extension of the base),
* push the matrix into k_b[T], delete the column of a generator with
  nonzero free image, and take the gcd of the maximal minors,
* each irreducible factor of that gcd cuts out one minimal prime of the
  jump locus; the attached residue field k_nu = k_b[x]/(factor) carries
  a distinguished character whose cohomology is re-verified exactly,
* a vanishing gcd means the whole branch is exceptional, recorded as a
  generic character over a rational function field.

Records carry integrality and torsion flags for the classification of
the locus into torsion translates and valuation rays; ``exceptional_rays``
certifies the rays by running the tree trichotomy at each prime.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import BudgetExceededError, CharacterError, MathDomainError, UnsupportedFieldError
from .cohomology import enumerate_exceptional, h1
from .fields import (
    PrimeField,
    RationalFunctionField,
    Rationals,
    SimpleExtension,
    is_prime,
    padd,
    pdeg,
    pgcd,
    pmonic,
    pmul,
    psub,
    ptrim,
)
from .poly import (
    UnivariatePolynomial,
    cyclotomic_polynomial,
    element_order,
    euler_phi,
    minimal_polynomial,
    primitive_root_of_unity,
)
from .presentations import (
    Abelianization,
    Character,
    commutator_word,
    fox_derivative,
    kernel_contains,
    word_mul,
)
from .tree import classify_affine_action, word_matrix
from .valuations import PAdicValuation


BRANCH_BUDGET = 10 ** 4
_CYCLOTOMIC_DEGREE_CAP = 4


class AlexanderData:
    """The abelianized differential matrix.

    ``matrix[r][i]`` is a dict mapping (free exponents, torsion exponents)
    to an integer coefficient; free exponents run over the free
    coordinates of the abelianization, torsion exponents are reduced mod
    the coordinate orders.  With p > 0 the coefficients live in F_p.
    """

    __slots__ = ("presentation", "ab", "matrix", "characteristic")

    def __init__(self, presentation, p=0):
        if p and not is_prime(p):
            raise MathDomainError(f"{p} is not prime")
        self.presentation = presentation
        self.characteristic = p
        ab = Abelianization(presentation)
        self.ab = ab
        P = presentation
        rows = []
        for rel in P.relators:
            row = []
            for i in range(len(P.gens)):
                entry = {}
                for sign, prefix in fox_derivative(rel, i):
                    key = self._class_key(prefix)
                    c = entry.get(key, 0) + sign
                    c = c % p if p else c
                    if c:
                        entry[key] = c
                    else:
                        entry.pop(key, None)
                row.append(entry)
            rows.append(row)
        self.matrix = rows

    def _class_key(self, word):
        ab = self.ab
        x = self.presentation.exponent_vector(word)
        n = len(x)
        y = [sum(ab.U[j][i] * x[i] for i in range(n)) for j in range(n)]
        free = tuple(y[j] for j in ab.free_indices)
        tors = tuple(y[j] % d for j, d in ab.torsion)
        return (free, tors)

    def entry_str(self, entry):
        ab = self.ab
        if not entry:
            return "0"
        names = (["T"] if len(ab.free_indices) == 1
                 else [f"T{k + 1}" for k in range(len(ab.free_indices))])
        tnames = [f"s{k + 1}" for k in range(len(ab.torsion))]
        parts = []
        for (free, tors) in sorted(entry, reverse=True):
            c = entry[(free, tors)]
            monos = []
            for name, e in itertools.chain(zip(names, free), zip(tnames, tors)):
                if e == 1:
                    monos.append(name)
                elif e:
                    monos.append(f"{name}^{e}")
            body = " ".join(monos)
            if not body:
                term = str(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)} {body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def specialize(self, field, free_values, torsion_values):
        """Evaluate every entry at the given coordinate values."""
        if self.characteristic and field.characteristic != self.characteristic:
            raise MathDomainError(
                f"matrix has characteristic {self.characteristic}, "
                f"field has {field.characteristic}")
        free_values = [field.coerce(v) for v in free_values]
        torsion_values = [field.coerce(v) for v in torsion_values]
        rows = []
        for row in self.matrix:
            out = []
            for entry in row:
                acc = field.zero
                for (free, tors), c in entry.items():
                    term = field.from_int(c)
                    for v, e in zip(free_values, free):
                        if e:
                            term = term * v ** e
                    for v, e in zip(torsion_values, tors):
                        if e:
                            term = term * v ** e
                    acc = acc + term
                out.append(acc)
            rows.append(out)
        return rows

    def to_json(self):
        return {
            "generators": list(self.presentation.gens),
            "characteristic": self.characteristic,
            "freeRank": len(self.ab.free_indices),
            "torsionOrders": list(self.ab.torsion_orders),
            "matrix": [[self.entry_str(e) for e in row] for row in self.matrix],
        }


def alexander_matrix(presentation, p=0):
    """Differential matrix over the group ring of the abelianization,
    with coefficients reduced mod p when p > 0."""
    return AlexanderData(presentation, p)


def _distinguished_column(ab):
    """Index of the first generator with a nonzero free image."""
    for i in range(len(ab.presentation.gens)):
        coords = ab.generator_coordinates(i)
        if any(coords[j] for j in ab.free_indices):
            return i
    raise MathDomainError("no generator has infinite order in the abelianization")


def _branch_field(base, torsion_orders, exponents):
    """Smallest supported field containing the chosen roots of unity,
    together with the root-of-unity values themselves."""
    orders = []
    for d, k in zip(torsion_orders, exponents):
        m = d // math.gcd(d, k)
        orders.append(m)
    M = 1
    for m in orders:
        M = M * m // math.gcd(M, m)
    if isinstance(base, Rationals):
        if M <= 2:
            K = base
        else:
            phi = euler_phi(M)
            if phi > _CYCLOTOMIC_DEGREE_CAP:
                raise UnsupportedFieldError(
                    f"torsion branch needs a cyclotomic extension of degree {phi}")
            K = SimpleExtension(base, cyclotomic_polynomial(M), name="z")
    elif isinstance(base, PrimeField):
        p = base.p
        if M % p == 0:
            raise MathDomainError(
                f"no {M}-th roots of unity in characteristic {p}")
        e = 1
        while (p ** e - 1) % M and e <= 4:
            e += 1
        if (p ** e - 1) % M:
            raise UnsupportedFieldError(
                f"order-{M} roots of unity need an extension of degree > 4")
        if e == 1:
            K = base
        else:
            K = _finite_extension(base, e)
    else:
        raise UnsupportedFieldError(
            f"torsion branches over {base.descriptor()} are not supported")
    zeta = primitive_root_of_unity(K, M) if M > 1 else K.one
    # coordinate j takes the d_j-th root zeta^(k_j * M / d_j)
    values = [zeta ** (k * (M // d)) for d, k in zip(torsion_orders, exponents)]
    return K, values


def _finite_extension(base, e):
    """F_{p^e} as a simple extension, deterministic modulus choice."""
    p = base.p
    for k in range(p ** e):
        digits = []
        kk = k
        for _ in range(e):
            digits.append(kk % p)
            kk //= p
        coeffs = digits + [1]
        f = UnivariatePolynomial.from_ints(base, coeffs)
        if f.is_irreducible():
            return SimpleExtension(base, f.coeffs, name="w")
    raise AssertionError("no irreducible modulus found")


class JumpLocusBranch:
    """One torsion branch: the field, the symbol values, and the gcd of
    the maximal minors in k_b[T] (None when the gcd is zero)."""

    __slots__ = ("data", "exponents", "field", "torsion_values", "delta",
                 "deleted_column")

    def __init__(self, data, exponents, field, torsion_values, delta,
                 deleted_column):
        self.data = data
        self.exponents = exponents
        self.field = field
        self.torsion_values = torsion_values
        self.delta = delta
        self.deleted_column = deleted_column

    def to_json(self):
        return {
            "torsionExponents": list(self.exponents),
            "branchField": self.field.descriptor(),
            "deletedGenerator":
                self.data.presentation.gens[self.deleted_column],
            "delta": None if self.delta is None else str(self.delta),
        }


def _laurent_entry_to_poly(field, entry, torsion_values, shift):
    """One matrix entry as a polynomial in T after the global shift."""
    coeffs = {}
    for (free, tors), c in entry.items():
        e = free[0] + shift
        term = field.from_int(c)
        for v, k in zip(torsion_values, tors):
            if k:
                term = term * v ** k
        coeffs[e] = coeffs.get(e, field.zero) + term
    if not coeffs:
        return ()
    top = max(coeffs)
    return ptrim(tuple(coeffs.get(i, field.zero) for i in range(top + 1)))


def _poly_det(field, rows):
    """Cofactor determinant of a matrix of coefficient tuples."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = ()
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = pmul(field, rows[0][j], _poly_det(field, minor))
        out = psub(field, out, term) if j % 2 else padd(field, out, term)
    return out


def jump_locus_branch(data, exponents, base=None):
    """Compute one torsion branch of the jump locus."""
    ab = data.ab
    if len(ab.free_indices) != 1:
        raise MathDomainError(
            f"rank-one locus needs exactly one free coordinate, found "
            f"{len(ab.free_indices)}")
    if base is None:
        base = PrimeField(data.characteristic) if data.characteristic else Rationals()
    elif data.characteristic and base.characteristic != data.characteristic:
        raise MathDomainError(
            f"matrix has characteristic {data.characteristic}, "
            f"base has {base.characteristic}")
    K, torsion_values = _branch_field(base, list(ab.torsion_orders), exponents)
    col = _distinguished_column(ab)
    P = data.presentation
    n = len(P.gens)
    r = len(P.relators)
    kept = [i for i in range(n) if i != col]
    # global Laurent shift: make every entry a plain polynomial
    shift = 0
    for row in data.matrix:
        for i in kept:
            for (free, _t) in row[i]:
                shift = max(shift, -free[0])
    entries = [[_laurent_entry_to_poly(K, row[i], torsion_values, shift)
                for i in kept] for row in data.matrix]
    s = min(r, n - 1)
    if s == 0 or r < n - 1:
        delta = None  # not enough relators: the ideal of maximal minors is 0
    else:
        g = ()
        for rsel in itertools.combinations(range(r), s):
            for csel in itertools.combinations(range(n - 1), s):
                sub = [[entries[i][j] for j in csel] for i in rsel]
                d = _poly_det(K, sub)
                g = pgcd(K, g, d) if g else (pmonic(K, d) if d else g)
            if pdeg(g) == 0 and g:
                break
        delta = None if not g else UnivariatePolynomial(K, g, var="T")
    if delta is not None and base == Rationals() and K == base:
        delta = _primitive_integer_form(delta)
    return JumpLocusBranch(data, tuple(exponents), K, torsion_values, delta, col)


def _primitive_integer_form(f):
    """Rescale a monic rational polynomial to a primitive integer one
    with positive leading coefficient."""
    den = 1
    for c in f.coeffs:
        den = den * c.payload.denominator // math.gcd(den, c.payload.denominator)
    ints = [int(c.payload * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return UnivariatePolynomial.from_ints(f.field, ints, var=f.var)


def alexander_ideal_rank1(data):
    """The generator of the rank-one jump ideal for a torsion-free
    abelianization with one free coordinate (None when the ideal is 0).

    Accepts a presentation or a prebuilt matrix."""
    if not isinstance(data, AlexanderData):
        data = AlexanderData(data)
    if data.ab.torsion:
        raise MathDomainError(
            "abelianization has torsion; enumerate the torsion branches instead")
    branch = jump_locus_branch(data, ())
    return branch.delta


def torsion_branches(data, base=None):
    """All torsion-exponent assignments, in lexicographic order."""
    orders = list(data.ab.torsion_orders)
    total = 1
    for d in orders:
        total *= d
    if total > BRANCH_BUDGET:
        raise BudgetExceededError(
            f"{total} torsion branches exceeds the budget of {BRANCH_BUDGET}")
    out = []
    for exps in itertools.product(*(range(d) for d in orders)):
        out.append(jump_locus_branch(data, exps, base=base))
    return out


# ---------------------------------------------------------------------------
# character records at the minimal primes


class CharacterRecord:
    """A character at a minimal prime of the jump locus, with its field,
    verified cohomology, and unit-integrality / torsion classification."""

    __slots__ = ("presentation", "field", "images", "dim_h1", "factor",
                 "branch_exponents", "integral_unit", "torsion",
                 "torsion_order", "generic")

    def __init__(self, presentation, field, images, dim_h1, factor,
                 branch_exponents, integral_unit, torsion, torsion_order,
                 generic):
        self.presentation = presentation
        self.field = field
        self.images = images
        self.dim_h1 = dim_h1
        self.factor = factor
        self.branch_exponents = branch_exponents
        self.integral_unit = integral_unit
        self.torsion = torsion
        self.torsion_order = torsion_order
        self.generic = generic

    def to_json(self):
        from .jsonio import element_json
        return {
            "field": self.field.descriptor(),
            "character": [element_json(v) for v in self.images],
            "dimH1": self.dim_h1,
            "factor": None if self.factor is None else str(self.factor),
            "torsionExponents": list(self.branch_exponents),
            "integralUnit": self.integral_unit,
            "torsion": self.torsion,
            "torsionOrder": self.torsion_order,
            "generic": self.generic,
        }


def _is_integral_unit(x):
    K = x.field
    if x.is_zero():
        return False
    if K.is_finite:
        return True
    if isinstance(K, Rationals):
        return x.payload in (1, -1)
    if isinstance(K, SimpleExtension):
        m = minimal_polynomial(x)
        if isinstance(K.base, PrimeField):
            return True
        c0 = m.coeffs[0].payload
        return (all(c.payload.denominator == 1 for c in m.coeffs)
                and abs(c0) == 1)
    if isinstance(K, RationalFunctionField):
        num, den = x.payload
        if pdeg(num) == 0 and pdeg(den) == 0:
            return _is_integral_unit(num[0] / den[0])
        return False
    raise UnsupportedFieldError(K.descriptor())


def classify_images(images):
    """(integral_unit, torsion, torsion_order) for a character's images."""
    integral = all(_is_integral_unit(v) for v in images)
    orders = []
    for v in images:
        K = v.field
        if isinstance(K, RationalFunctionField):
            num, den = v.payload
            if pdeg(num) != 0 or pdeg(den) != 0:
                return integral, False, None
            o = element_order(num[0] / den[0])
        else:
            o = element_order(v)
        if o is None:
            return integral, False, None
        orders.append(o)
    order = 1
    for o in orders:
        order = order * o // math.gcd(order, o)
    return integral, True, order


def _record_for_root(data, branch, root_field, root):
    """Build and verify the record at one root of the branch gcd."""
    ab = data.ab
    coords = []
    ti = 0
    for j, d in enumerate(ab.diagonal):
        if d == 0:
            coords.append(root)
        elif d == 1:
            coords.append(root_field.one)
        else:
            val = branch.torsion_values[ti]
            coords.append(_embed(val, root_field))
            ti += 1
    images = ab.character_images(root_field, coords)
    chi = Character(data.presentation, root_field, images)
    rep = h1(data.presentation, chi)
    integral, torsion, order = classify_images(images)
    return chi, rep, integral, torsion, order


def _embed(x, K):
    """Move a branch-field value into the record field."""
    if x.field == K:
        return x
    if isinstance(x.field, Rationals):
        if isinstance(K, RationalFunctionField):
            return K.from_fraction((x,))
        if isinstance(K, SimpleExtension) and isinstance(K.base, Rationals):
            return K.from_base_coeffs((x,))
    if isinstance(x.field, PrimeField):
        if isinstance(K, SimpleExtension) and K.base == x.field:
            return K.from_base_coeffs((x,))
        if isinstance(K, RationalFunctionField) and K.base == x.field:
            return K.from_fraction((x,))
    raise UnsupportedFieldError(
        f"cannot embed {x.field.descriptor()} into {K.descriptor()}")


def _root_record(data, branch, f, records):
    """Record the character at a root of the monic irreducible f, or
    explain why it is skipped.  Returns True when a record was added."""
    K = branch.field
    if f.degree == 1:
        root_field = K
        root = -f.coeffs[0]
        if root.is_zero():
            return False  # T | delta names a place, not a character
    else:
        if not isinstance(K, (Rationals, PrimeField)):
            raise UnsupportedFieldError(
                "a factor of degree >= 2 over an extension branch field "
                "needs a two-step tower")
        root_field = SimpleExtension(K, pmonic(K, f.coeffs), name="T")
        root = root_field.generator
    chi, rep, integral, torsion, order = _record_for_root(
        data, branch, root_field, root)
    if chi.is_trivial():
        return False  # reported through the betti number instead
    if rep.dim_h1 <= 0:
        # killing the column of g is only rank-neutral off chi(g) = 1,
        # so a root there can be an artifact of the deletion
        if chi.images[branch.deleted_column].is_one():
            return False
        raise AssertionError("jump-locus root fails cohomology verification")
    records.append(CharacterRecord(
        data.presentation, root_field, chi.images, rep.dim_h1, f,
        branch.exponents, integral, torsion, order, False))
    return True


def _hyperplane_factors(data, branch):
    """Monic irreducible f whose roots T make the deleted generator's
    image trivial: those characters are invisible to the deleted-column
    gcd and are checked one by one."""
    ab = data.ab
    K = branch.field
    coords = ab.generator_coordinates(branch.deleted_column)
    e = coords[ab.free_indices[0]]
    c = K.one
    for (j, d), val in zip(ab.torsion, branch.torsion_values):
        k = coords[j] % d
        if k:
            c = c * val ** k
    if e < 0:
        e, c = -e, c.inverse()
    target = c.inverse()
    poly = UnivariatePolynomial(
        K, (-target,) + (K.zero,) * (e - 1) + (K.one,), var="T")
    _, factors = poly.factor()
    return [f for f, _m in factors]


def minimal_prime_characters(presentation, base=None):
    """Character records at the minimal primes of the rank-one jump
    locus of nontrivial characters, across all torsion branches,
    deterministically ordered.  The trivial character jumps whenever the
    betti number is positive and is reported separately."""
    data = AlexanderData(presentation)
    if len(data.ab.free_indices) != 1:
        raise MathDomainError(
            f"rank-one locus needs exactly one free coordinate, found "
            f"{len(data.ab.free_indices)}")
    base = base if base is not None else Rationals()
    records = []
    for branch in torsion_branches(data, base=base):
        K = branch.field
        delta = branch.delta
        if delta is None:
            # zero ideal: everything off the hyperplane chi(g) = 1 jumps
            if not isinstance(K, (Rationals, PrimeField)):
                raise UnsupportedFieldError(
                    "generic records need a rational-function field over "
                    "the base, but the branch field is an extension")
            KT = RationalFunctionField(K)
            chi, rep, integral, torsion, order = _record_for_root(
                data, branch, KT, KT.variable)
            assert rep.dim_h1 > 0, "generic record failed verification"
            records.append(CharacterRecord(
                presentation, KT, chi.images, rep.dim_h1, None,
                branch.exponents, integral, torsion, order, True))
        elif delta.degree >= 1:
            _, factors = delta.factor()
            for f, _mult in factors:
                _root_record(data, branch, f.monic(), records)
        for f in _hyperplane_factors(data, branch):
            if delta is not None and delta.degree >= 1:
                _, r = divmod(delta, f)
                if r.is_zero():
                    continue  # already covered by a gcd factor
            _root_record(data, branch, f, records)
    records.sort(key=_record_sort_key)
    return records


def _record_sort_key(rec):
    fac = rec.factor
    return (
        tuple(rec.branch_exponents),
        1 if rec.generic else 0,
        0 if fac is None else fac.degree,
        () if fac is None else fac.sort_key(),
    )


# ---------------------------------------------------------------------------
# the cocycle on the derived subgroup


def commutator_cocycle(chi, theta_values, g0=None):
    """Values theta([g0, g]) for a pivot word g0 with chi(g0) != 1.

    g0 defaults to the first generator chi does not kill.  The
    translation parts are computed from the affine matrices of the
    commutator words and cross-checked against the closed form
    (1 - chi(g)) theta(g0) + (chi(g0) - 1) theta(g).
    """
    P = chi.presentation
    K = chi.field
    if g0 is None:
        pivot = next((i for i, v in enumerate(chi.images) if not v.is_one()),
                     None)
        if pivot is None:
            raise CharacterError("the trivial character has no pivot generator")
        g0 = ((pivot, 1),)
    else:
        # normalize to single-step letters
        g0 = word_mul(*(((g, 1 if e > 0 else -1),) * abs(e) for g, e in g0))
        if not g0:
            raise CharacterError("empty pivot word")
    chi0, theta0 = word_matrix(chi, theta_values, g0)[0]
    if chi0.is_one():
        raise CharacterError(
            "chi(g0) = 1: every commutator value would be a coboundary")
    values = []
    for i in range(len(P.gens)):
        w = commutator_word(g0, ((i, 1),))
        value = word_matrix(chi, theta_values, w)[0][1]
        closed = ((K.one - chi.images[i]) * theta0
                  + (chi0 - K.one) * theta_values[i])
        assert value == closed, "commutator values disagree with the closed form"
        values.append(value)
    return g0, tuple(values)


# ---------------------------------------------------------------------------
# valuation rays


def exceptional_rays(presentation, record):
    """Certified valuation rays at a rational record: for every prime in
    a numerator or denominator of the character, run the tree trichotomy
    and report the direction vector v_p(chi(g))."""
    if not isinstance(record.field, Rationals):
        raise UnsupportedFieldError(
            "valuation rays are read off rational records only")
    primes = set()
    for v in record.images:
        for part in (v.payload.numerator, v.payload.denominator):
            part = abs(part)
            d = 2
            while d * d <= part:
                if part % d == 0:
                    primes.add(d)
                    while part % d == 0:
                        part //= d
                d += 1
            if part > 1:
                primes.add(part)
    chi = Character(presentation, record.field, record.images)
    rep = h1(presentation, chi)
    theta = rep.nontrivial_cocycle()
    if theta is None:
        return []
    _, cvals = commutator_cocycle(chi, theta)
    out = []
    for p in sorted(primes):
        vp = PAdicValuation(p)
        action = classify_affine_action(chi, cvals, vp)
        out.append({
            "p": p,
            "direction": [int(x) for x in action.char_valuations],
            "kind": action.kind,
            "certified": action.kind == "exceptional",
        })
    return out


def bns_rays(presentation, records):
    """Certified valuation rays aggregated over the rational records,
    one entry per (prime, direction) pair, sorted by prime."""
    seen = {}
    for rec in records:
        if not isinstance(rec.field, Rationals):
            continue
        for ray in exceptional_rays(presentation, rec):
            if not ray["certified"]:
                continue
            key = (ray["p"], tuple(ray["direction"]))
            seen.setdefault(key, ray)
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# exhaustive records and kernel certificates


def finite_field_records(presentation, field, budget=10 ** 6):
    """One record per exceptional character over a finite field, by
    exhaustive enumeration; serves any betti number."""
    if not field.is_finite:
        raise UnsupportedFieldError("exhaustive records need a finite field")
    out = []
    for images, dim in enumerate_exceptional(presentation, field,
                                             budget=budget):
        integral, torsion, order = classify_images(images)
        out.append(CharacterRecord(
            presentation, field, images, dim, None, (), integral, torsion,
            order, False))
    return out


def integrality_and_torsion(record):
    """(integral_unit, torsion, torsion_order) recomputed from the images."""
    return classify_images(record.images)


def record_covers(record, chi):
    """True when every multiplicative relation among the record's images
    also holds among chi's: the record's kernel sits inside chi's."""
    return kernel_contains(record.images, chi.images)

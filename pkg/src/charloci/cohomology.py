"""Twisted first cohomology of a finitely presented group.

For a character chi: G -> K*, a 1-cocycle is a map theta on the
generators extended by theta(uv) = theta(u) + chi(u) theta(v); it is a
coboundary when theta(g) = mu (chi(g) - 1) for a single scalar mu.  The
space Z^1 is computed two independent ways:

* the free-differential matrix of the presentation evaluated at chi
  (rows indexed by relators, columns by generators), whose right kernel
  is Z^1, and
* a probe of the affine 2x2 matrix products over each relator, which
  rebuilds the same linear system letter by letter with no differential
  calculus at all.

The second path doubles as a verification oracle for individual
cocycles.  dim B^1 is 1 unless chi is trivial, and a character is
called exceptional when dim H^1 = dim Z^1 - dim B^1 is positive.
"""

from __future__ import annotations

from .errors import BudgetExceededError, CharacterError
from . import linalg, poly
from .presentations import Character, Abelianization, fox_derivative


def character_prefix_value(chi, word):
    return chi.evaluate(word)


def fox_matrix(presentation, chi):
    """Relators-by-generators matrix of prefix sums at chi."""
    K = chi.field
    rows = []
    for rel in presentation.relators:
        row = []
        for i in range(len(presentation.gens)):
            acc = K.zero
            for sign, prefix in fox_derivative(rel, i):
                v = chi.evaluate(prefix)
                acc = acc + v if sign > 0 else acc - v
            row.append(acc)
        rows.append(row)
    return rows


def affine_word_action(chi, theta_values, word):
    """(scale, translation) of the affine map z -> scale z + translation
    that the word acts by, letters acting as z -> chi(g) z + theta(g)."""
    K = chi.field
    a = K.one
    b = K.zero
    for g, e in word:
        if e == 1:
            ga, gb = chi.images[g], theta_values[g]
        else:
            inv = chi.images[g].inverse()
            ga, gb = inv, -(inv * theta_values[g])
        # (a, b) is the prefix map; the next letter acts first
        a, b = a * ga, a * gb + b
    return a, b


def cocycle_value_oracle(chi, theta_values, word):
    """Value of theta on a word read off the 2x2 affine matrix product,
    a code path with no Fox calculus in it.  Zero on every relator iff
    the generator values extend to a cocycle."""
    return affine_word_action(chi, theta_values, word)[1]


def cocycle_defects(presentation, chi, theta_values):
    """Translation part of every relator's affine action; all zero iff
    theta extends to a cocycle."""
    return [affine_word_action(chi, theta_values, rel)[1]
            for rel in presentation.relators]


def is_cocycle(presentation, chi, theta_values):
    return all(d.is_zero() for d in cocycle_defects(presentation, chi, theta_values))


def probe_matrix(presentation, chi):
    """The relator system rebuilt from affine products: column j is the
    defect vector of the j-th coordinate probe."""
    K = chi.field
    n = len(presentation.gens)
    cols = []
    for j in range(n):
        theta = [K.one if i == j else K.zero for i in range(n)]
        cols.append(cocycle_defects(presentation, chi, theta))
    return [[cols[j][r] for j in range(n)]
            for r in range(len(presentation.relators))]


def coboundary_values(chi, mu):
    return tuple((v - 1) * mu for v in chi.images)


def is_coboundary(presentation, chi, theta_values):
    K = chi.field
    pivot = next((i for i, v in enumerate(chi.images) if not v.is_one()), None)
    if pivot is None:
        return all(t.is_zero() for t in theta_values)
    mu = theta_values[pivot] / (chi.images[pivot] - 1)
    return all(theta_values[i] == (chi.images[i] - 1) * mu
               for i in range(len(theta_values)))


class H1Report:
    """Dimensions and a basis for the twisted cohomology at one character."""

    __slots__ = ("presentation", "chi", "dim_z1", "dim_b1", "dim_h1",
                 "cocycle_basis", "exceptional", "trivial_character")

    def __init__(self, presentation, chi, dim_z1, dim_b1, cocycle_basis):
        self.presentation = presentation
        self.chi = chi
        self.dim_z1 = dim_z1
        self.dim_b1 = dim_b1
        self.dim_h1 = dim_z1 - dim_b1
        self.cocycle_basis = cocycle_basis
        self.exceptional = self.dim_h1 > 0
        self.trivial_character = chi.is_trivial()

    def nontrivial_cocycle(self):
        """A basis cocycle that is not a coboundary, or None."""
        for theta in self.cocycle_basis:
            if not is_coboundary(self.presentation, self.chi, theta):
                return tuple(theta)
        return None

    def to_json(self):
        from .jsonio import element_json
        return {
            "field": self.chi.field.descriptor(),
            "character": {g: element_json(v) for g, v in
                          zip(self.presentation.gens, self.chi.images)},
            "dimZ1": self.dim_z1,
            "dimB1": self.dim_b1,
            "dimH1": self.dim_h1,
            "exceptional": self.exceptional,
            "trivialCharacter": self.trivial_character,
            "basis": [[element_json(t) for t in theta]
                      for theta in self.cocycle_basis],
        }


def h1(presentation, chi, crosscheck=False):
    """Cohomology report at chi; with crosscheck=True the probe matrix
    must reproduce the differential matrix exactly."""
    K = chi.field
    n = len(presentation.gens)
    M = fox_matrix(presentation, chi)
    if crosscheck:
        M2 = probe_matrix(presentation, chi)
        assert M == M2, "differential and probe systems disagree"
    basis = linalg.kernel_basis(M, K, ncols=n)
    for theta in basis:
        defects = cocycle_defects(presentation, chi, theta)
        assert all(d.is_zero() for d in defects), \
            "kernel vector fails the affine-product check"
    dim_b1 = 0 if chi.is_trivial() else 1
    return H1Report(presentation, chi, len(basis), dim_b1, basis)


def betti_number(presentation):
    return Abelianization(presentation).betti_number


def enumerate_exceptional(presentation, field, budget=10 ** 6):
    """All characters over a finite field with dim H^1 > 0, reported as
    (images, dim_h1) in a deterministic order."""
    ab = Abelianization(presentation)
    if not field.is_finite:
        raise CharacterError("character enumeration needs a finite field")
    q = field.size
    options = []
    for j, d in enumerate(ab.diagonal):
        if d == 0:
            opts = [x for x in field.elements() if not x.is_zero()]
            opts.sort(key=lambda x: x.sort_key())
        elif d == 1:
            opts = [field.one]
        else:
            opts = poly.roots_of_unity(field, d)
        options.append(opts)
    total = 1
    for opts in options:
        total *= len(opts)
        if total > budget:
            raise BudgetExceededError(
                f"{total}+ characters exceeds the budget of {budget}")
    out = []
    for choice in _product(options):
        images = ab.character_images(field, choice)
        chi = Character(presentation, field, images)
        rep = h1(presentation, chi)
        if rep.exceptional:
            out.append((images, rep.dim_h1))
    return out


def _product(options):
    if not options:
        yield ()
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield (head,) + tail

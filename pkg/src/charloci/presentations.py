"""Finite presentations, characters, and the free-differential calculus.

Words are tuples of (generator index, +1/-1) letters.  The text format
for presentations:

    group BS(1,2)          # optional name
    gens a, t
    rel t a t^-1 a^-2

Relator tokens are ``name``, ``name^k`` (k a nonzero integer), and the
commutator shorthand ``[u,v]`` with u, v simple tokens.  Parse errors
carry line and column.

The abelianization is kept as Smith data: with E the relator exponent
matrix and M its transpose (generators by relators), U M V = D gives
coordinates y = U x on the abelianization, one per generator slot.  A
slot with diagonal 0 is a free coordinate, 1 is dropped, d >= 2 is a
Z/d summand.  Characters move between generator images and coordinate
values through U and its inverse.
"""

from __future__ import annotations

import itertools

from .errors import CharacterError, MathDomainError, ParseError, UnsupportedFieldError
from . import linalg
from .fields import (
    FieldElement,
    PrimeField,
    Rationals,
    SimpleExtension,
    discrete_log,
    multiplicative_generator,
)

Word = tuple


def free_reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word_inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def word_mul(*words):
    out = ()
    for w in words:
        out = free_reduce(out + tuple(w))
    return out


def commutator_word(u, v):
    return word_mul(u, v, word_inverse(u), word_inverse(v))


def word_power(word, k):
    if k < 0:
        return word_power(word_inverse(word), -k)
    return word_mul(*([word] * k)) if k else ()


def commutator_generators(presentation):
    """The words [g_i, g_j] for all pairs i < j."""
    n = len(presentation.gens)
    return [commutator_word(((i, 1),), ((j, 1),))
            for i in range(n) for j in range(i + 1, n)]


class Presentation:
    """An ordered generating set and a list of relator words."""

    __slots__ = ("name", "gens", "relators")

    def __init__(self, gens, relators, name=None):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        self.gens = gens
        rels = []
        for w in relators:
            w = free_reduce(tuple((int(g), int(e)) for g, e in w))
            if not w:
                raise ValueError("relator reduces to the empty word")
            for g, e in w:
                if not 0 <= g < len(gens):
                    raise ValueError(f"letter index {g} out of range")
                if e not in (1, -1):
                    raise ValueError("letters must have exponent +1 or -1")
            rels.append(w)
        self.relators = tuple(rels)
        self.name = name

    def gen_index(self, name):
        try:
            return self.gens.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def gen_word(self, name, exponent=1):
        i = self.gen_index(name)
        e = 1 if exponent > 0 else -1
        return tuple((i, e) for _ in range(abs(exponent)))

    def word_str(self, word):
        if not word:
            return "1"
        parts = []
        for g, e in _merge_runs(word):
            parts.append(self.gens[g] if e == 1 else f"{self.gens[g]}^{e}")
        return " ".join(parts)

    def exponent_vector(self, word):
        out = [0] * len(self.gens)
        for g, e in word:
            out[g] += e
        return out

    def __repr__(self):
        nm = self.name or "presentation"
        return (f"<{nm}: gens {', '.join(self.gens)}; "
                f"{len(self.relators)} relator(s)>")

    def to_text(self):
        lines = []
        if self.name:
            lines.append(f"group {self.name}")
        lines.append("gens " + ", ".join(self.gens))
        for w in self.relators:
            lines.append("rel " + self.word_str(w))
        return "\n".join(lines) + "\n"


def _merge_runs(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and (out[-1][1] > 0) == (e > 0):
            out[-1][1] += e
        else:
            out.append([g, e])
    return [(g, e) for g, e in out]


# ---------------------------------------------------------------------------
# parsing


def _tokenize_line(line, lineno, col_offset=0):
    tokens = []
    i = 0
    while i < len(line):
        c = line[i]
        if c.isspace():
            i += 1
            continue
        if c == "#":
            break
        start = i
        if c == "[":
            depth = 0
            j = i
            while j < len(line):
                if line[j] == "[":
                    depth += 1
                elif line[j] == "]":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth != 0:
                raise ParseError("unbalanced '['", line=lineno, col=start + 1 + col_offset)
            tokens.append((line[i:j + 1], start + 1 + col_offset))
            i = j + 1
            continue
        j = i
        while j < len(line) and not line[j].isspace() and line[j] not in "#,":
            j += 1
        if j == i:  # a stray comma
            i += 1
            continue
        tokens.append((line[i:j], start + 1 + col_offset))
        i = j
        if i < len(line) and line[i] == ",":
            i += 1
    return tokens


def _parse_simple_token(tok, P, lineno, col):
    if "^" in tok:
        name, _, exp = tok.partition("^")
        try:
            k = int(exp)
        except ValueError:
            raise ParseError(f"bad exponent {exp!r}", line=lineno, col=col) from None
        if k == 0:
            raise ParseError("zero exponent", line=lineno, col=col)
    else:
        name, k = tok, 1
    if not name.isidentifier():
        raise ParseError(f"bad generator token {name!r}", line=lineno, col=col)
    try:
        i = P.index(name)
    except ValueError:
        raise ParseError(f"unknown generator {name!r}", line=lineno, col=col) from None
    e = 1 if k > 0 else -1
    return tuple((i, e) for _ in range(abs(k)))


def parse_word(text, gens, lineno=1, col_offset=0):
    """One line of word tokens over the given generator names."""
    gens = list(gens)
    word = ()
    for tok, col in _tokenize_line(text, lineno, col_offset):
        if tok.startswith("["):
            inner = tok[1:-1]
            halves = inner.split(",")
            if len(halves) != 2:
                raise ParseError("commutator needs exactly two entries",
                                 line=lineno, col=col)
            u = _parse_simple_token(halves[0].strip(), gens, lineno, col)
            v = _parse_simple_token(halves[1].strip(), gens, lineno, col)
            word = word_mul(word, commutator_word(u, v))
        else:
            word = word_mul(word, _parse_simple_token(tok, gens, lineno, col))
    return word


def parse_presentation(text):
    name = None
    gens = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.replace("\t", " ").split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, _, rest = line.lstrip().partition(" ")
        col = len(line) - len(line.lstrip()) + 1
        rest_offset = col - 1 + len(head) + 1
        if head == "group":
            name = rest.strip() or None
        elif head == "gens":
            if gens is not None:
                raise ParseError("duplicate gens line", line=lineno, col=col)
            gens = [t for t, _ in _tokenize_line(rest, lineno, rest_offset)]
            if not gens:
                raise ParseError("empty generator list", line=lineno, col=col)
            for g in gens:
                if not g.isidentifier():
                    raise ParseError(f"bad generator name {g!r}", line=lineno, col=col)
            if len(set(gens)) != len(gens):
                raise ParseError("duplicate generator names", line=lineno, col=col)
        elif head == "rel":
            if gens is None:
                raise ParseError("rel before gens", line=lineno, col=col)
            w = parse_word(rest, gens, lineno, rest_offset)
            if not w:
                raise ParseError("relator reduces to the empty word",
                                 line=lineno, col=col)
            relators.append(w)
        else:
            raise ParseError(f"unknown directive {head!r}", line=lineno, col=col)
    if gens is None:
        raise ParseError("missing gens line", line=1, col=1)
    return Presentation(gens, relators, name=name)


# ---------------------------------------------------------------------------
# free differential calculus


def fox_derivative(word, gen):
    """d(word)/d(gen) as a formal sum [(sign, prefix word)].

    A letter g at prefix P contributes +P; a letter g^-1 at prefix P
    contributes -(P g^-1).
    """
    out = []
    for i, (g, e) in enumerate(word):
        if g != gen:
            continue
        prefix = word[:i]
        if e == 1:
            out.append((1, free_reduce(prefix)))
        else:
            out.append((-1, free_reduce(prefix + ((g, -1),))))
    return out


# ---------------------------------------------------------------------------
# abelianization


class Abelianization:
    """Smith-form coordinates on G/[G,G]."""

    def __init__(self, presentation):
        self.presentation = presentation
        P = presentation
        n = len(P.gens)
        r = len(P.relators)
        E = [P.exponent_vector(w) for w in P.relators]
        M = [[E[k][i] for k in range(r)] for i in range(n)]
        if r == 0:
            D = [[] for _ in range(n)]
            U = linalg.identity_int(n)
            V = []
        else:
            D, U, V = linalg.smith_normal_form(M)
        self.U = U
        self.V = V
        diag = [D[j][j] if j < min(n, r) else 0 for j in range(n)]
        self.diagonal = diag
        self.W = _unimodular_inverse(U)
        self.free_indices = tuple(j for j, d in enumerate(diag) if d == 0)
        self.torsion = tuple((j, d) for j, d in enumerate(diag) if d >= 2)
        self.unit_indices = tuple(j for j, d in enumerate(diag) if d == 1)

    @property
    def betti_number(self):
        return len(self.free_indices)

    @property
    def torsion_orders(self):
        return tuple(d for _, d in self.torsion)

    def generator_coordinates(self, i):
        """y-coordinates of generator i (column i of U)."""
        return tuple(self.U[j][i] for j in range(len(self.U)))

    def coordinate_word(self, j):
        """A word mapping to the j-th coordinate generator (column j of
        the inverse of U)."""
        out = []
        for i in range(len(self.W)):
            k = self.W[i][j]
            if k:
                out.extend([(i, 1 if k > 0 else -1)] * abs(k))
        return tuple(out)

    def character_images(self, field, values):
        """Generator images of the character sending the j-th coordinate
        generator to values[j].

        Unit coordinates must be 1 and torsion coordinates must satisfy
        value^d = 1; both are enforced.
        """
        vals = [field.coerce(v) for v in values]
        if len(vals) != len(self.diagonal):
            raise CharacterError("one value per coordinate required")
        for j, d in enumerate(self.diagonal):
            if vals[j].is_zero():
                raise CharacterError("character values must be nonzero")
            if d == 1 and not vals[j].is_one():
                raise CharacterError(f"coordinate {j} is trivial in the "
                                     "abelianization; its value must be 1")
            if d >= 2 and not (vals[j] ** d).is_one():
                raise CharacterError(
                    f"coordinate {j} has order dividing {d}; "
                    f"value {vals[j]} does not")
        images = []
        for i in range(len(self.presentation.gens)):
            acc = field.one
            for j, v in enumerate(vals):
                k = self.U[j][i]
                if k:
                    acc = acc * v ** k
            images.append(acc)
        return tuple(images)

    def coordinate_values(self, images):
        """Values of a character on the coordinate generators."""
        field = images[0].field
        out = []
        for j in range(len(self.diagonal)):
            acc = field.one
            for i, im in enumerate(images):
                k = self.W[i][j]
                if k:
                    acc = acc * im ** k
            out.append(acc)
        return tuple(out)


def _unimodular_inverse(U):
    n = len(U)
    if n == 0:
        return []
    # solve U W = I over Q; entries must come out integral
    from fractions import Fraction
    A = [[Fraction(U[i][j]) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    W = [[A[i][n + j] for j in range(n)] for i in range(n)]
    out = [[int(x) for x in row] for row in W]
    assert all(x == y for row, irow in zip(W, out) for x, y in zip(row, irow)), \
        "inverse of a unimodular matrix must be integral"
    return out


# ---------------------------------------------------------------------------
# characters


class Character:
    """A homomorphism into K*, given by nonzero images of the generators;
    construction checks every relator maps to 1."""

    __slots__ = ("presentation", "field", "images")

    def __init__(self, presentation, field, images, check=True):
        images = tuple(field.coerce(v) for v in images)
        if len(images) != len(presentation.gens):
            raise CharacterError(
                f"{len(presentation.gens)} generator images required")
        if any(v.is_zero() for v in images):
            raise CharacterError("character values must be nonzero")
        if check:
            for w in presentation.relators:
                if not self._eval(field, images, w).is_one():
                    raise CharacterError(
                        f"images do not kill the relator {presentation.word_str(w)}")
        self.presentation = presentation
        self.field = field
        self.images = images

    @staticmethod
    def _eval(field, images, word):
        acc = field.one
        for g, e in word:
            v = images[g] if e == 1 else images[g].inverse()
            acc = acc * v
        return acc

    def evaluate(self, word):
        return self._eval(self.field, self.images, tuple(word))

    def is_trivial(self):
        return all(v.is_one() for v in self.images)

    def __eq__(self, other):
        return (isinstance(other, Character)
                and other.presentation is self.presentation
                and other.field == self.field
                and other.images == self.images)

    def __hash__(self):
        return hash((id(self.presentation), self.field, self.images))

    def __repr__(self):
        pairs = ", ".join(f"{g} -> {v}" for g, v in
                          zip(self.presentation.gens, self.images))
        return f"<character {pairs}>"


# ---------------------------------------------------------------------------
# multiplicative kernels: { e in Z^n : prod v_i^e_i = 1 }


def power_product(values, exponents):
    field = values[0].field
    acc = field.one
    for v, e in zip(values, exponents):
        if e:
            acc = acc * v ** e
    return acc


def _rational_exponent_rows(values):
    primes = set()
    data = []
    for v in values:
        fr = v.payload
        sign = 0 if fr > 0 else 1
        exps = {}
        for part, s in ((fr.numerator, 1), (fr.denominator, -1)):
            part = abs(part)
            d = 2
            while d * d <= part:
                while part % d == 0:
                    exps[d] = exps.get(d, 0) + s
                    part //= d
                d += 1
            if part > 1:
                exps[part] = exps.get(part, 0) + s
        data.append((sign, exps))
        primes.update(exps)
    primes = sorted(primes)
    rows = [[exps.get(p, 0) for p in primes] for _, exps in data]
    signs = [sign for sign, _ in data]
    return rows, signs


def multiplicative_kernel(values):
    """Basis of the lattice of multiplicative relations among the values.

    Supported over Q (prime factorization plus a sign-parity correction),
    over small finite fields (discrete logarithms), and over simple
    extensions whose values all lie in the base field.
    """
    values = list(values)
    if not values:
        return []
    field = values[0].field
    if any(v.is_zero() for v in values):
        raise MathDomainError("kernel of values containing zero")
    n = len(values)
    if isinstance(field, Rationals):
        rows, signs = _rational_exponent_rows(values)
        k = len(rows[0]) if rows else 0
        if k == 0:
            basis = linalg.identity_int(n)
        else:
            A = [[rows[i][p] for i in range(n)] for p in range(k)]
            basis = linalg.integer_kernel(A)
        # impose even sign parity on the sublattice
        basis = [list(b) for b in basis]
        parities = [sum(b[i] * signs[i] for i in range(n)) % 2 for b in basis]
        odd = [j for j, p in enumerate(parities) if p]
        if odd:
            star = odd[0]
            for j in odd[1:]:
                basis[j] = [x + y for x, y in zip(basis[j], basis[star])]
            basis[star] = [2 * x for x in basis[star]]
        return [_normalize_vector(b) for b in basis]
    if field.is_finite:
        g = multiplicative_generator(field)
        logs = [discrete_log(v, g) for v in values]
        M = [logs + [field.size - 1]]
        full = linalg.integer_kernel(M)
        projected = [_normalize_vector(b[:n]) for b in full]
        return [b for b in projected if any(b)]
    if isinstance(field, SimpleExtension):
        # values that all lie in the base embed there; anything else is
        # outside the multiplicative-dependence solver
        down = []
        for v in values:
            if any(not c.is_zero() for c in v.payload[1:]):
                raise UnsupportedFieldError(
                    f"multiplicative kernels over {field.descriptor()} need "
                    f"base-field values")
            down.append(v.payload[0])
        return multiplicative_kernel(down)
    raise UnsupportedFieldError(
        f"multiplicative kernels over {field.descriptor()} are not supported")


def _normalize_vector(b):
    b = list(b)
    lead = next((x for x in b if x), 0)
    if lead < 0:
        b = [-x for x in b]
    return b


def kernel_contains(values, other_values):
    """True when every multiplicative relation of ``values`` also holds
    among ``other_values`` (kernel containment checked on generators)."""
    basis = multiplicative_kernel(values)
    for b in basis:
        if not power_product(other_values, b).is_one():
            return False
    return True


# ---------------------------------------------------------------------------
# stock presentations


def baumslag_solitar(m, n):
    """<a, t | t a^m t^-1 a^-n>."""
    rel = (((1, 1),) + ((0, 1),) * m + ((1, -1),) + ((0, -1),) * n)
    return Presentation(("a", "t"), [rel], name=f"BS({m},{n})")


def free_group(rank):
    names = tuple(f"x{i + 1}" for i in range(rank)) if rank != 2 else ("a", "b")
    return Presentation(names, [], name=f"F{rank}")


def surface_group(genus):
    """Closed orientable surface of the given genus."""
    if genus < 1:
        raise MathDomainError("genus must be at least 1")
    gens = []
    for i in range(1, genus + 1):
        gens += [f"a{i}", f"b{i}"]
    rel = ()
    for i in range(genus):
        a = ((2 * i, 1),)
        b = ((2 * i + 1, 1),)
        rel = word_mul(rel, commutator_word(a, b))
    return Presentation(tuple(gens), [rel], name=f"S{genus}")

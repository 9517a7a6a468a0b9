"""The (q+1)-regular tree of lattice classes over a discretely valued field.

A vertex is the homothety class of an O_v-lattice in K^2; every class
has a unique representative spanned by the columns of

    [ pi^n  u ]
    [ 0     1 ]

with u taken modulo pi^n O_v, so a vertex is a pair (n, u) with u the
canonical reduction.  The base vertex is (0, 0) = [O_v^2].

Distances come from the elementary divisors of the transition matrix:

    d((n,u), (m,u')) = (m-n) - 2 min(m-n, v(u'-u) - n, 0).

GL_2(K) acts by mapping column spans; an element with invertible
determinant is hyperbolic, elliptic, or an inversion according to

    l(g) = max(0, v(det g) - 2 v(tr g)),

positive translation length meaning hyperbolic, and an odd v(det) with
l = 0 swapping the two endpoints of an edge.  The horofunction toward
the end of the ray (0,0), (-1,0), (-2,0), ... stabilizes at finite
depth, which gives an exact Busemann cocycle; on upper triangular
matrices it equals v(a) - v(d).

``classify_affine_action`` runs the trichotomy for the affine action
z -> chi(g) z + theta(g) of a group on the tree: orbits bounded when
v(chi(g)) = 0 for every generator, an invariant axis when theta is a
coboundary, and otherwise an action fixing exactly one end, moving
every vertex arbitrarily far, with no invariant line.
"""

from __future__ import annotations

from .errors import CharacterError, MathDomainError, UnsupportedFieldError
from .cohomology import is_coboundary, is_cocycle
from .valuations import INF


class LatticeClass:
    """Canonical vertex (n, u) of the tree attached to a valuation."""

    __slots__ = ("valuation", "n", "u")

    def __init__(self, valuation, n, u):
        self.valuation = valuation
        self.n = int(n)
        self.u = valuation.reduce_mod_power(valuation.field.coerce(u), self.n)

    def label(self):
        return f"({self.n}; {self.u})"

    def __eq__(self, other):
        return (isinstance(other, LatticeClass)
                and other.valuation == self.valuation
                and other.n == self.n and other.u == self.u)

    def __hash__(self):
        return hash((self.n, self.u))

    def __repr__(self):
        return self.label()


def base_vertex(valuation):
    return LatticeClass(valuation, 0, valuation.field.zero)


def canonical_lattice(valuation, matrix):
    """Vertex spanned by the columns of an invertible 2x2 matrix."""
    v = valuation
    K = v.field
    (a, b), (c, d) = matrix
    if (a * d - b * c).is_zero():
        raise MathDomainError("lattice basis matrix is singular")
    # make the second column the one with the lower bottom valuation
    if v.of(c) < v.of(d):
        a, b = b, a
        c, d = d, c
    # clear the bottom of the first column over O_v
    if not c.is_zero():
        f = c / d
        a = a - f * b
        c = K.zero
    # homothety by 1/d, then scale the first column by its unit part
    n = v.of(a) - v.of(d)
    u = b / d
    return LatticeClass(v, n, u)


def lattice_distance(A, B):
    if A.valuation != B.valuation:
        raise MathDomainError("vertices live in different trees")
    v = A.valuation
    shift = B.n - A.n
    mid = v.of(B.u - A.u) - A.n
    s = min(shift, mid, 0)
    return int(shift - 2 * s)


def mat_mul(X, Y):
    (a, b), (c, d) = X
    (e, f), (g, h) = Y
    return ((a * e + b * g, a * f + b * h),
            (c * e + d * g, c * f + d * h))


def mat_det(X):
    (a, b), (c, d) = X
    return a * d - b * c


def affine_matrix(chi, theta_values, g, e=1):
    """2x2 matrix of the letter g^e acting by z -> chi z + theta."""
    K = chi.field
    if e == 1:
        return ((chi.images[g], theta_values[g]), (K.zero, K.one))
    inv = chi.images[g].inverse()
    return ((inv, -(inv * theta_values[g])), (K.zero, K.one))


def word_matrix(chi, theta_values, word):
    K = chi.field
    acc = ((K.one, K.zero), (K.zero, K.one))
    for g, e in word:
        acc = mat_mul(acc, affine_matrix(chi, theta_values, g, e))
    return acc


def apply_matrix(valuation, matrix, vertex):
    v = valuation
    K = v.field
    pi = v.uniformizer
    col1 = (pi ** vertex.n, K.zero)
    col2 = (vertex.u, K.one)
    (a, b), (c, d) = matrix
    new1 = (a * col1[0] + b * col1[1], c * col1[0] + d * col1[1])
    new2 = (a * col2[0] + b * col2[1], c * col2[0] + d * col2[1])
    return canonical_lattice(v, ((new1[0], new2[0]), (new1[1], new2[1])))


def translation_length(valuation, matrix):
    vdet = valuation.of(mat_det(matrix))
    if vdet == INF:
        raise MathDomainError("singular matrix does not act on the tree")
    (a, b), (c, d) = matrix
    vtr = valuation.of(a + d)
    l = vdet - 2 * vtr
    return int(l) if l > 0 else 0


def classify_matrix(valuation, matrix):
    """Hyperbolic / elliptic / inversion, with the translation length."""
    l = translation_length(valuation, matrix)
    vdet = valuation.of(mat_det(matrix))
    if l > 0:
        kind = "hyperbolic"
    elif vdet % 2 == 0:
        kind = "elliptic"
    else:
        kind = "inversion"
    return {"type": kind, "translationLength": l, "detValuation": int(vdet)}


def busemann_upper(valuation, matrix):
    """Busemann value at the fixed end for an upper triangular matrix."""
    (a, b), (c, d) = matrix
    if not c.is_zero():
        raise MathDomainError("matrix does not stabilize the chosen end")
    return int(valuation.of(a) - valuation.of(d))


def busemann_via_limit(valuation, matrix):
    """Horofunction value lim d(g O^2, L_m) - d(O^2, L_m) along the ray
    L_m = (m, 0), m -> -infinity; stabilizes at finite depth."""
    v = valuation
    g0 = apply_matrix(v, matrix, base_vertex(v))
    vu = v.of(g0.u)
    floor = min(0, g0.n, vu if vu != INF else 0) - 1
    vals = []
    for m in (floor, floor - 1, floor - 2):
        Lm = LatticeClass(v, m, v.field.zero)
        vals.append(lattice_distance(g0, Lm) - lattice_distance(base_vertex(v), Lm))
    assert vals[0] == vals[1] == vals[2], "horofunction did not stabilize"
    return int(vals[0])


def displacement(valuation, matrix, vertex):
    """d(x, g x) read off entry valuations of B^-1 g B, where B is the
    triangular basis of x.  Avoids canonicalizing g x; agrees with
    lattice_distance(x, apply_matrix(g, x))."""
    v = valuation
    vdet = v.of(mat_det(matrix))
    if vdet == INF:
        raise MathDomainError("singular matrix does not act on the tree")
    (a, b), (c, d) = matrix
    u, n = vertex.u, vertex.n
    cu = c * u
    entries = (
        v.of(a - cu),
        v.of(cu + d),
        v.of(c) + n,
        v.of(b + (a - d) * u - cu * u) - n,
    )
    return int(vdet - 2 * min(entries))


def vertex_neighbors(valuation, vertex):
    """The q+1 adjacent vertices: q children and one parent."""
    v = valuation
    pi = v.uniformizer
    out = []
    step = pi ** vertex.n
    for c in v.residue_lifts():
        out.append(LatticeClass(v, vertex.n + 1, vertex.u + c * step))
    out.append(LatticeClass(v, vertex.n - 1, vertex.u))
    return out


def ball(valuation, center, radius):
    """Vertices and edges within the given radius, BFS order."""
    if radius < 0:
        raise MathDomainError("radius must be nonnegative")
    seen = {center: 0}
    order = [center]
    edges = []
    frontier = [center]
    for depth in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for y in vertex_neighbors(valuation, x):
                if y not in seen:
                    seen[y] = depth
                    order.append(y)
                    nxt.append(y)
                    edges.append((x, y))
        frontier = nxt
    return order, edges


def ball_dot(valuation, center, radius):
    vertices, edges = ball(valuation, center, radius)
    lines = ["graph tree {", "  node [shape=box];"]
    for x in vertices:
        lines.append(f'  "{x.label()}";')
    for x, y in edges:
        lines.append(f'  "{x.label()}" -- "{y.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


class ActionReport:
    """Outcome of the bounded / axial / fixed-end trichotomy."""

    __slots__ = ("kind", "valuation", "chi", "theta", "char_valuations",
                 "coboundary", "generator_classes", "busemann_values")

    def __init__(self, kind, valuation, chi, theta, char_valuations,
                 coboundary, generator_classes, busemann_values):
        self.kind = kind
        self.valuation = valuation
        self.chi = chi
        self.theta = theta
        self.char_valuations = char_valuations
        self.coboundary = coboundary
        self.generator_classes = generator_classes
        self.busemann_values = busemann_values

    def to_json(self):
        from .jsonio import element_json
        P = self.chi.presentation
        return {
            "kind": self.kind,
            "valuation": self.valuation.to_json(),
            "character": [element_json(x) for x in self.chi.images],
            "cocycle": [element_json(t) for t in self.theta],
            "characterValuations": [
                None if x == INF else int(x) for x in self.char_valuations],
            "cocycleIsCoboundary": self.coboundary,
            "generators": [
                {"name": g, **cls, "busemann": b}
                for g, cls, b in zip(P.gens, self.generator_classes,
                                     self.busemann_values)],
        }


def classify_affine_action(chi, theta_values, valuation):
    """Trichotomy for the affine action attached to (chi, theta).

    * every generator has unit character value: the orbit of the base
      vertex is bounded ("bounded-orbit"),
    * theta is a coboundary: the action is conjugate to the diagonal
      one and preserves an apartment ("axial"),
    * otherwise a single end is fixed and the action is unbounded with
      no invariant line ("exceptional").
    """
    P = chi.presentation
    if valuation.field != chi.field:
        raise CharacterError("valuation and character live on different fields")
    if not is_cocycle(P, chi, theta_values):
        raise CharacterError("theta does not satisfy the cocycle law")
    vchi = [valuation.of(x) for x in chi.images]
    coboundary = is_coboundary(P, chi, theta_values)
    classes = []
    busemann = []
    for i in range(len(P.gens)):
        m = affine_matrix(chi, theta_values, i)
        classes.append(classify_matrix(valuation, m))
        busemann.append(busemann_upper(valuation, m))
    if all(x == 0 for x in vchi):
        kind = "bounded-orbit"
    elif coboundary:
        kind = "axial"
    else:
        kind = "exceptional"
    return ActionReport(kind, valuation, chi, tuple(theta_values), vchi,
                        coboundary, classes, busemann)

"""Univariate polynomials over the field tower, with exact factorization.

Factorization scope (desk scale, everything exact):

* squarefree decomposition over every coefficient field in the tower
  (Yun in characteristic zero, the p-th-root variant in characteristic p),
* full factorization over prime fields and their finite extensions
  (distinct-degree plus equal-degree splitting; the random splitters are
  drawn from a generator seeded by the input, so runs are deterministic,
  and a systematic fallback enumeration kicks in if the seeded draws
  somehow fail),
* full factorization over the rationals (monic-integer reduction, CRT-free
  lift-and-recombine: factor mod p, Hensel lift, subset recombination),
* factorization over simple extensions of Q of degree <= 4 by the norm
  (resultant) reduction to the rationals.

General rational-function coefficients get squarefree decomposition only;
full factorization there raises UnsupportedFieldError.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .errors import MathDomainError, UnsupportedFieldError
from . import linalg
from .fields import (
    FieldElement,
    PrimeField,
    RationalFunctionField,
    Rationals,
    SimpleExtension,
    format_poly,
    padd,
    pconst,
    pdeg,
    pderiv,
    pdivmod,
    peval,
    pgcd,
    pint,
    pmod,
    pmonic,
    pmul,
    pneg,
    ppow_mod,
    pscale,
    psort_key,
    psub,
    ptrim,
    pX,
    pxgcd,
    multiplicative_generator,
    multiplicative_order,
)


class UnivariatePolynomial:
    """Immutable dense polynomial; ``coeffs[i]`` is the x^i coefficient."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs, var="x"):
        self.field = field
        self.coeffs = ptrim(tuple(field.coerce(c) for c in coeffs))
        if var == getattr(field, "name", None):
            var = var.upper() if var.upper() != var else var + "'"
        self.var = var

    @classmethod
    def from_ints(cls, field, ints, var="x"):
        return cls(field, [field.from_int(c) for c in ints], var)

    @classmethod
    def variable(cls, field, var="x"):
        return cls(field, (field.zero, field.one), var)

    @property
    def degree(self):
        return pdeg(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def _wrap(self, coeffs):
        return UnivariatePolynomial(self.field, coeffs, self.var)

    def _co(self, other):
        if isinstance(other, UnivariatePolynomial):
            if other.field != self.field:
                raise ValueError("polynomial field mismatch")
            return other
        if isinstance(other, (int, FieldElement)):
            return self._wrap(pconst(self.field, self.field.coerce(other)))
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self._wrap(padd(self.field, self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(pneg(self.field, self.coeffs))

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self._wrap(psub(self.field, self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self._wrap(pmul(self.field, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        q, r = pdivmod(self.field, self.coeffs, o.coeffs)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self._wrap(pconst(self.field, self.field.one))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            o = self._co(other)
            return self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __call__(self, x):
        return peval(self.field, self.coeffs, self.field.coerce(x))

    def monic(self):
        return self._wrap(pmonic(self.field, self.coeffs))

    def derivative(self):
        return self._wrap(pderiv(self.field, self.coeffs))

    def gcd(self, other):
        o = self._co(other)
        return self._wrap(pgcd(self.field, self.coeffs, o.coeffs))

    def compose(self, other):
        """self(other(x))."""
        o = self._co(other)
        acc = self._wrap(())
        for c in reversed(self.coeffs):
            acc = acc * o + self._wrap(pconst(self.field, c))
        return acc

    def sort_key(self):
        return psort_key(self.coeffs)

    def __str__(self):
        return format_poly(self.coeffs, self.var)

    def __repr__(self):
        return format_poly(self.coeffs, self.var)

    # -- factorization entry points ------------------------------------

    def squarefree_decomposition(self):
        """(unit, [(g, multiplicity)]), g monic squarefree pairwise coprime."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        unit = self.lc
        f = pmonic(self.field, self.coeffs)
        if pdeg(f) == 0:
            return unit, []
        if self.field.characteristic == 0:
            parts = _yun(self.field, f)
        else:
            parts = _squarefree_charp(self.field, f)
        parts = [(self._wrap(g), e) for g, e in parts]
        parts.sort(key=lambda ge: (ge[1], ge[0].degree, ge[0].sort_key()))
        return unit, parts

    def squarefree_part(self):
        _, parts = self.squarefree_decomposition()
        acc = self._wrap(pconst(self.field, self.field.one))
        for g, _ in parts:
            acc = acc * g
        return acc

    def factor(self):
        """(unit, [(irreducible monic, multiplicity)]), deterministic order."""
        if self.is_zero():
            raise ValueError("cannot factor the zero polynomial")
        unit = self.lc
        if self.degree == 0:
            return unit, []
        _, parts = self.squarefree_decomposition()
        out = []
        for g, e in parts:
            for h in _factor_squarefree(self.field, g.coeffs):
                out.append((self._wrap(h), e))
        out.sort(key=lambda fe: (fe[0].degree, fe[0].sort_key()))
        return unit, out

    def is_irreducible(self):
        if self.degree < 1:
            return False
        _, fs = self.factor()
        return len(fs) == 1 and fs[0][1] == 1

    def roots(self):
        """Roots in the coefficient field, sorted, via the linear factors."""
        _, fs = self.factor()
        out = [-(f.coeffs[0]) for f, _ in fs if f.degree == 1]
        out.sort(key=lambda r: r.sort_key())
        return out


# ---------------------------------------------------------------------------
# squarefree decomposition


def _yun(F, f):
    # characteristic zero, f monic
    d = pderiv(F, f)
    u = pgcd(F, f, d)
    v = pdivmod(F, f, u)[0]
    w = pdivmod(F, d, u)[0]
    out = []
    i = 1
    while pdeg(v) > 0:
        z = psub(F, w, pderiv(F, v))
        g = pgcd(F, v, z)
        if pdeg(g) > 0:
            out.append((g, i))
        v = pdivmod(F, v, g)[0]
        w = pdivmod(F, z, g)[0]
        i += 1
    return out


def _pth_root_scalar(F, c):
    p = F.characteristic
    if isinstance(F, PrimeField):
        return c
    if isinstance(F, SimpleExtension) and F.base.characteristic == p:
        # Frobenius is a bijection on a finite field
        return c ** (F.size // p)
    if isinstance(F, RationalFunctionField) and F.characteristic == p:
        num, den = c.payload
        rn = _poly_pth_root(F.base, num, p)
        rd = _poly_pth_root(F.base, den, p)
        if rn is None or rd is None:
            raise UnsupportedFieldError(
                "inseparable factor over an imperfect field; "
                "no p-th root for " + str(c))
        return F.element(F._normalize(rn, rd))
    raise UnsupportedFieldError("p-th root not available over " + F.descriptor())


def _poly_pth_root(base, cs, p):
    # p-th root of a polynomial over a finite base, None when not a power
    out = []
    for i, c in enumerate(cs):
        if i % p == 0:
            out.append(_pth_root_scalar(base, c) if not isinstance(base, PrimeField) else c)
        elif not c.is_zero():
            return None
    return ptrim(out)


def _squarefree_charp(F, f):
    # f monic, char p; standard gcd ladder with a p-th root tail
    p = F.characteristic
    out = {}

    def add(g, e):
        key = g
        out[key] = out.get(key, 0) + e

    def run(f, scale):
        d = pderiv(F, f)
        c = pgcd(F, f, d)
        w = pdivmod(F, f, c)[0]
        i = 1
        while pdeg(w) > 0:
            y = pgcd(F, w, c)
            z = pdivmod(F, w, y)[0]
            if pdeg(z) > 0:
                add(z, i * scale)
            w = y
            c = pdivmod(F, c, y)[0]
            i += 1
        if pdeg(c) > 0:
            # every exponent in c is divisible by p
            root = []
            for j in range(0, len(c), p):
                root.append(_pth_root_scalar(F, c[j]))
            bad = any(not c[j].is_zero() for j in range(len(c)) if j % p)
            if bad:
                raise UnsupportedFieldError("inseparable polynomial")
            run(ptrim(root), scale * p)

    run(f, 1)
    parts = [(g, e) for g, e in out.items()]
    return parts


# ---------------------------------------------------------------------------
# finite fields


def _int_encode(elt):
    pay = elt.payload
    if isinstance(pay, int):
        return pay
    if isinstance(pay, tuple) and pay and isinstance(pay[0], FieldElement):
        acc = 0
        for c in reversed(pay):
            acc = acc * 1000003 + _int_encode(c)
        return acc
    raise AssertionError("unexpected payload")


def _seed_for(F, cs, tag):
    acc = F.size
    for c in cs:
        acc = (acc * 1000003 + _int_encode(c)) % (2 ** 61 - 1)
    return acc * 131 + tag


def _elt_from_index(F, k):
    if isinstance(F, PrimeField):
        return F.element(k % F.p)
    p = F.base.p
    digits = []
    for _ in range(F.degree):
        digits.append(F.base.element(k % p))
        k //= p
    return F.element(tuple(digits))


def _random_poly(F, rng, deg):
    q = F.size
    cs = [_elt_from_index(F, rng.randrange(q)) for _ in range(deg + 1)]
    return ptrim(cs)


def _edf_split_attempt(F, g, d, r):
    """One gcd attempt with splitter r; returns a proper factor or None."""
    q = F.size
    p = F.characteristic
    if pdeg(r) < 1:
        return None
    if p == 2:
        k = q.bit_length() - 1  # q = 2^k
        acc = pmod(F, r, g)
        cur = acc
        for _ in range(k * d - 1):
            cur = ppow_mod(F, cur, 2, g)
            acc = padd(F, acc, cur)
        w = acc
    else:
        w = psub(F, ppow_mod(F, r, (q ** d - 1) // 2, g), pconst(F, F.one))
    h = pgcd(F, w, g)
    if 0 < pdeg(h) < pdeg(g):
        return h
    return None


def _equal_degree_factor(F, g, d):
    """Split monic g, a product of distinct irreducibles of degree d."""
    if pdeg(g) == d:
        return [g]
    rng = random.Random(_seed_for(F, g, d))
    h = None
    for _ in range(64):
        r = _random_poly(F, rng, pdeg(g) - 1)
        h = _edf_split_attempt(F, g, d, r)
        if h is not None:
            break
    if h is None:
        # systematic fallback: enumerate splitters of increasing degree
        q = F.size
        for deg in range(1, pdeg(g)):
            for ks in itertools.product(range(q), repeat=deg + 1):
                if ks[-1] == 0:
                    continue
                r = ptrim([_elt_from_index(F, k) for k in ks])
                h = _edf_split_attempt(F, g, d, r)
                if h is not None:
                    break
            if h is not None:
                break
    assert h is not None, "equal-degree splitting failed"
    rest = pdivmod(F, g, h)[0]
    return _equal_degree_factor(F, h, d) + _equal_degree_factor(F, rest, d)


def _factor_finite_squarefree(F, f):
    """Monic squarefree f over a finite field; list of monic irreducibles."""
    q = F.size
    out = []
    v = f
    h = pmod(F, pX(F), v)
    d = 0
    while pdeg(v) > 0:
        d += 1
        if 2 * d > pdeg(v):
            out.append(v)
            break
        h = ppow_mod(F, h, q, v)
        g = pgcd(F, psub(F, h, pX(F)), v)
        if pdeg(g) > 0:
            out.extend(_equal_degree_factor(F, g, d))
            v = pdivmod(F, v, g)[0]
            h = pmod(F, h, v)
    return out


# ---------------------------------------------------------------------------
# rationals: monic-integer reduction, factor mod p, Hensel, recombine


def _zp_trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _zp_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zp_trim(out)


def _zp_sub(a, b):
    n = max(len(a), len(b))
    return _zp_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                     for i in range(n)])


def _zp_mod_int(a, m):
    return _zp_trim([c % m for c in a])


def _zp_sym(a, m):
    out = []
    for c in a:
        c %= m
        if 2 * c > m:
            c -= m
        out.append(c)
    return _zp_trim(out)


def _zp_divmod_monic(a, b):
    """Division by a monic integer polynomial, staying in Z[x]."""
    assert b and b[-1] == 1
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1]
        if c:
            q[i] = c
            for j, y in enumerate(b):
                r[i + j] -= c * y
    return _zp_trim(q), _zp_trim(r)


def _to_fp(Fp, a):
    return ptrim([Fp.element(c % Fp.p) for c in a])


def _from_fp(a):
    return _zp_trim([c.payload for c in a])


def _hensel_pair(H, A0, B0, p, e):
    """Lift H = A0*B0 (mod p) to mod p^e; H, A0, B0 monic integer polys."""
    Fp = PrimeField(p)
    g, s, t = pxgcd(Fp, _to_fp(Fp, A0), _to_fp(Fp, B0))
    assert pdeg(g) == 0
    A = list(A0)
    B = list(B0)
    pk = p
    while pk < p ** e:
        err = _zp_sub(H, _zp_mul(A, B))
        err = [c // pk for c in err]
        err_p = _to_fp(Fp, err)
        # da = t*err mod A0, db = s*err + (quotient)*B0, all mod p
        te = pmul(Fp, t, err_p)
        qa, da = pdivmod(Fp, te, _to_fp(Fp, A0))
        db = padd(Fp, pmul(Fp, s, err_p), pmul(Fp, qa, _to_fp(Fp, B0)))
        da_z = _zp_sym(_from_fp(da), p)
        db_z = _zp_sym(_from_fp(db), p)
        A = _zp_trim([(A[i] if i < len(A) else 0) + pk * (da_z[i] if i < len(da_z) else 0)
                      for i in range(max(len(A), len(da_z)))])
        B = _zp_trim([(B[i] if i < len(B) else 0) + pk * (db_z[i] if i < len(db_z) else 0)
                      for i in range(max(len(B), len(db_z)))])
        pk *= p
    return A, B


def _hensel_multi(H, mods, p, e):
    """Lift the monic mod-p factor list to mod p^e (symmetric reps)."""
    if len(mods) == 1:
        return [_zp_sym(_zp_mod_int(H, p ** e), p ** e)]
    half = len(mods) // 2
    Fp = PrimeField(p)
    A0 = pconst(Fp, Fp.one)
    for ml in mods[:half]:
        A0 = pmul(Fp, A0, _to_fp(Fp, ml))
    B0 = pconst(Fp, Fp.one)
    for mr in mods[half:]:
        B0 = pmul(Fp, B0, _to_fp(Fp, mr))
    A0z = _zp_sym(_from_fp(A0), p)
    B0z = _zp_sym(_from_fp(B0), p)
    # keep the pair monic lifts of the halves
    A, B = _hensel_pair(H, A0z, B0z, p, e)
    A = _zp_sym(_zp_mod_int(A, p ** e), p ** e)
    B = _zp_sym(_zp_mod_int(B, p ** e), p ** e)
    A[-1] = 1
    B[-1] = 1
    return _hensel_multi(A, mods[:half], p, e) + _hensel_multi(B, mods[half:], p, e)


_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109)


def _factor_monic_int(H):
    """Factor a monic squarefree integer polynomial into monic integer
    irreducibles (Zassenhaus)."""
    n = len(H) - 1
    if n == 1:
        return [H]
    QF = Rationals()
    chosen = None
    for p in _SMALL_PRIMES:
        Fp = PrimeField(p)
        hp = _to_fp(Fp, H)
        if pdeg(hp) != n:
            continue
        if pdeg(pgcd(Fp, hp, pderiv(Fp, hp))) == 0:
            chosen = p
            break
    assert chosen is not None, "no good prime found"
    p = chosen
    Fp = PrimeField(p)
    _, fs = UnivariatePolynomial(Fp, _to_fp(Fp, H)).factor()
    mod_factors = [_from_fp(f.coeffs) for f, _ in fs]
    if len(mod_factors) == 1:
        return [H]
    # Landau-Mignotte style bound on factor coefficients
    norm = math.isqrt(sum(c * c for c in H)) + 1
    bound = (2 ** n) * norm
    e = 1
    pe = p
    while pe <= 2 * bound:
        pe *= p
        e += 1
    lifted = _hensel_multi(H, mod_factors, p, e)
    pe = p ** e

    result = []
    pool = list(range(len(lifted)))
    rest = H
    size = 1
    while 2 * size <= len(pool):
        found = False
        for combo in itertools.combinations(pool, size):
            prod = [1]
            for i in combo:
                prod = _zp_mul(prod, lifted[i])
            cand = _zp_sym(_zp_mod_int(prod, pe), pe)
            if cand[-1] != 1:
                continue
            q, r = _zp_divmod_monic(rest, cand)
            if not r:
                result.append(cand)
                rest = q
                pool = [i for i in pool if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if len(rest) > 1:
        result.append(rest)
    return result


def _factor_rational_squarefree(F, f):
    """Monic squarefree f over Q; list of monic coefficient tuples."""
    n = pdeg(f)
    if n == 1:
        return [f]
    # clear denominators with x -> x/d so the integer polynomial is monic
    d = 1
    for c in f:
        d = d * c.payload.denominator // math.gcd(d, c.payload.denominator)
    H = []
    for i, c in enumerate(f):
        v = c.payload * d ** (n - i)
        assert v.denominator == 1
        H.append(int(v))
    factors = _factor_monic_int(H)
    out = []
    for P in factors:
        k = len(P) - 1
        # undo the substitution: P(d*x) / d^k
        cs = [F.element(Fraction(P[i] * d ** i, d ** k)) for i in range(len(P))]
        out.append(ptrim(cs))
    return out


# ---------------------------------------------------------------------------
# simple extensions of Q: Trager's norm reduction

_TRAGER_DEGREE_CAP = 4


def _sylvester_resultant_y(QF, m_y, g_yx):
    """Res_y(m(y), g(y, x)) for m monic in y; g given as a list over powers
    of y with entries in Q[x].  Entries of the Sylvester matrix live in
    Q[x]; the determinant is taken fraction-free (Bareiss), with exact
    tuple-polynomial division."""
    dm = len(m_y) - 1
    dg = len(g_yx) - 1
    if dg < 0:
        return ()
    if dg == 0:
        # resultant = g0^dm
        out = pconst(QF, QF.one)
        for _ in range(dm):
            out = pmul(QF, out, g_yx[0])
        return out
    size = dm + dg
    # rows: dg shifted copies of m (coefficients in Q, degree-0 polys),
    # then dm shifted copies of g
    rows = []
    for s in range(dg):
        row = [()] * size
        for i, c in enumerate(m_y):
            row[s + (dm - i)] = pconst(QF, c)
        rows.append(row)
    for s in range(dm):
        row = [()] * size
        for i, cpoly in enumerate(g_yx):
            row[s + (dg - i)] = cpoly
        rows.append(row)
    # Bareiss over the domain Q[x]
    prev = pconst(QF, QF.one)
    sign = 1
    n = size
    A = rows
    for k in range(n - 1):
        if not A[k][k]:
            swap = None
            for i in range(k + 1, n):
                if A[i][k]:
                    swap = i
                    break
            if swap is None:
                return ()
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(QF, pmul(QF, A[i][j], A[k][k]),
                           pmul(QF, A[i][k], A[k][j]))
                q, r = (pdivmod(QF, num, prev) if prev != pconst(QF, QF.one)
                        else (num, ()))
                assert not r, "Bareiss division not exact"
                A[i][j] = q
            A[i][k] = ()
        prev = A[k][k]
    det = A[n - 1][n - 1]
    if sign < 0:
        det = pneg(QF, det)
    return det


def _factor_extension_squarefree(K, f):
    """Monic squarefree f over K = Q[y]/(m), degree of K at most 4."""
    if K.degree > _TRAGER_DEGREE_CAP:
        raise UnsupportedFieldError(
            f"factorization over extensions of degree > {_TRAGER_DEGREE_CAP}")
    QF = K.base
    if pdeg(f) == 1:
        return [f]
    alpha = K.generator
    for s in range(0, 10 * (K.degree + pdeg(f))):
        shift = K.from_int(s)
        # g(x) = f(x - s*alpha)
        sub = ptrim((-(shift * alpha), K.one))
        g = _compose(K, f, sub)
        # bivariate: coefficients of y^j are polynomials in x over Q
        g_yx = []
        for j in range(K.degree):
            col = [g[i].payload[j] for i in range(len(g))]
            g_yx.append(ptrim(col))
        g_yx = _btrim(g_yx)
        m_y = K.modulus
        Nx = _sylvester_resultant_y(QF, m_y, g_yx)
        if not Nx:
            continue
        dN = pderiv(QF, Nx)
        if pdeg(pgcd(QF, Nx, dN)) > 0:
            continue
        norm_factors = _factor_rational_squarefree(QF, pmonic(QF, Nx))
        out = []
        back = ptrim((shift * alpha, K.one))
        for h in sorted(norm_factors, key=psort_key):
            hK = ptrim([K.from_base_coeffs((c,)) for c in h])
            fac = pgcd(K, g, hK)
            if pdeg(fac) > 0:
                out.append(pmonic(K, _compose(K, fac, back)))
        assert sum(pdeg(x) for x in out) == pdeg(f), "norm factorization dropped a factor"
        return out
    raise AssertionError("no squarefree norm shift found")


def _btrim(cols):
    n = len(cols)
    while n and not cols[n - 1]:
        n -= 1
    return cols[:n]


def _compose(F, f, g):
    """f(g(x)) on coefficient tuples."""
    acc = ()
    for c in reversed(f):
        acc = padd(F, pmul(F, acc, g), pconst(F, c))
    return acc


# ---------------------------------------------------------------------------


def _factor_squarefree(F, f):
    if isinstance(F, PrimeField):
        return _factor_finite_squarefree(F, f)
    if isinstance(F, Rationals):
        return _factor_rational_squarefree(F, f)
    if isinstance(F, SimpleExtension):
        if F.base.is_finite:
            return _factor_finite_squarefree(F, f)
        return _factor_extension_squarefree(F, f)
    raise UnsupportedFieldError(
        f"full factorization over {F.descriptor()} is not supported")


# ---------------------------------------------------------------------------
# cyclotomic polynomials and roots of unity

_cyclotomic_cache = {}


def euler_phi(n):
    out = n
    for q in _prime_factors(n):
        out -= out // q
    return out


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def cyclotomic_polynomial(n):
    """Integer coefficient tuple of the n-th cyclotomic polynomial."""
    if n in _cyclotomic_cache:
        return _cyclotomic_cache[n]
    QF = Rationals()
    num = pint(QF, [-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = pdivmod(QF, num, pint(QF, cyclotomic_polynomial(d)))[0]
    ints = tuple(int(c.payload) for c in num)
    _cyclotomic_cache[n] = ints
    return ints


def unit_torsion_order(K):
    """Order of the (cyclic) group of roots of unity of K."""
    if isinstance(K, Rationals):
        return 2
    if K.is_finite:
        return K.size - 1
    if isinstance(K, RationalFunctionField):
        return unit_torsion_order(K.base)
    if isinstance(K, SimpleExtension):
        d = K.degree
        out = 1
        for n in range(1, 2 * d * d + 2):
            if euler_phi(n) <= d and _has_primitive_root(K, n):
                out = out * n // math.gcd(out, n)
        return out
    raise UnsupportedFieldError(K.descriptor())


def _has_primitive_root(K, n):
    if n == 1:
        return True
    if n == 2:
        return True
    phi = cyclotomic_polynomial(n)
    f = UnivariatePolynomial(K, [K.from_int(c) for c in phi])
    return any(True for _ in f.roots())


def primitive_root_of_unity(K, n):
    """An element of exact multiplicative order n."""
    if n == 1:
        return K.one
    if isinstance(K, Rationals):
        if n == 2:
            return K.from_int(-1)
        raise MathDomainError(f"no primitive {n}-th root of unity in Q")
    if K.is_finite:
        q = K.size
        if (q - 1) % n:
            raise MathDomainError(
                f"no primitive {n}-th root of unity in {K.descriptor()}")
        g = multiplicative_generator(K)
        return g ** ((q - 1) // n)
    if isinstance(K, RationalFunctionField):
        z = primitive_root_of_unity(K.base, n)
        return K.from_fraction((z,))
    if isinstance(K, SimpleExtension):
        phi = cyclotomic_polynomial(n)
        f = UnivariatePolynomial(K, [K.from_int(c) for c in phi])
        rs = f.roots()
        if not rs:
            raise MathDomainError(
                f"no primitive {n}-th root of unity in {K.descriptor()}")
        z = rs[0]
        assert z ** n == K.one
        return z
    raise UnsupportedFieldError(K.descriptor())


def roots_of_unity(K, n):
    """All solutions of x^n = 1 in K, sorted deterministically."""
    e = math.gcd(n, unit_torsion_order(K))
    z = primitive_root_of_unity(K, e)
    out = []
    cur = K.one
    for _ in range(e):
        out.append(cur)
        cur = cur * z
    out.sort(key=lambda r: r.sort_key())
    return out


def element_order(x):
    """Multiplicative order of a root of unity, None for non-torsion."""
    K = x.field
    if x.is_zero():
        return None
    if K.is_finite:
        return multiplicative_order(x)
    M = unit_torsion_order(K)
    for n in sorted(_divisors(M)):
        if x ** n == K.one:
            return n
    return None


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def minimal_polynomial(x, var="x"):
    """Minimal polynomial over the base field of a simple-extension element
    (or x - a for base-field values)."""
    K = x.field
    if isinstance(K, (Rationals, PrimeField)):
        return UnivariatePolynomial(K, (-x, K.one), var)
    if not isinstance(K, SimpleExtension):
        raise UnsupportedFieldError(
            f"minimal polynomial over {K.descriptor()} is not defined here")
    base = K.base
    d = K.degree
    powers = [K.one]
    for _ in range(d):
        powers.append(powers[-1] * x)
    for k in range(1, d + 1):
        # dependency c_0 + c_1 x + ... + c_k x^k = 0 with c_k != 0
        rows = [[powers[i].payload[j] for i in range(k + 1)] for j in range(d)]
        ker = linalg.kernel_basis(rows, base, ncols=k + 1)
        for v in ker:
            if not v[k].is_zero():
                inv = v[k].inverse()
                return UnivariatePolynomial(base, [c * inv for c in v], var)
    raise AssertionError("no minimal polynomial found")

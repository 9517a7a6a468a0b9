"""Discrete valuations: p-adic on Q, pi-adic and degree on k(t).

Every valuation here is normalized onto Z (the uniformizer has value 1)
and reports v(0) as ``INF``.  ``reduce_mod_power(x, n)`` returns the
canonical representative of x modulo pi^n * O_v, the workhorse behind
canonical lattice classes:

* p-adic:  p^k * (unit residue in [0, p^(n-k))), zero when v(x) >= n,
* pi-adic: pi^k * (polynomial residue of degree < deg pi^(n-k)),
* degree:  conjugate by t -> 1/t, reduce t-adically, conjugate back.

Residue fields are exposed as field descriptors from ``fields`` together
with lift/projection maps; neighbor enumeration in the tree needs the
residue field to be finite, everything else works over any of them.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MathDomainError, UnsupportedFieldError
from .fields import (
    FieldElement,
    PrimeField,
    RationalFunctionField,
    Rationals,
    SimpleExtension,
    format_poly,
    pconst,
    pdeg,
    pdivmod,
    peval,
    pmod,
    pmonic,
    pmul,
    ptrim,
    pxgcd,
    is_prime,
)

INF = float("inf")


class Valuation:
    """Base: a discrete valuation v on ``self.field`` with v(pi) = 1."""

    field = None
    residue_size = None  # None when the residue field is infinite

    @property
    def uniformizer(self):
        raise NotImplementedError

    def of(self, x):
        raise NotImplementedError

    def reduce_mod_power(self, x, n):
        raise NotImplementedError

    def residue(self, x):
        """Image of a v-integral element in the residue field."""
        raise NotImplementedError

    def residue_lifts(self):
        """Canonical lifts of the residue field into O_v, zero first."""
        raise UnsupportedFieldError(
            f"{self.descriptor()} has an infinite residue field")

    def descriptor(self):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def __repr__(self):
        return self.descriptor()

    def _coerce(self, x):
        return self.field.coerce(x)

    def is_unit(self, x):
        return self.of(x) == 0


class PAdicValuation(Valuation):
    """v_p on the rationals."""

    def __init__(self, p):
        if not is_prime(p):
            raise MathDomainError(f"{p} is not prime")
        self.p = p
        self.field = Rationals()
        self.residue_field = PrimeField(p)
        self.residue_size = p

    @property
    def uniformizer(self):
        return self.field.from_int(self.p)

    def of(self, x):
        x = self._coerce(x)
        fr = x.payload
        if fr == 0:
            return INF
        p = self.p
        v = 0
        num = fr.numerator
        while num % p == 0:
            num //= p
            v += 1
        den = fr.denominator
        while den % p == 0:
            den //= p
            v -= 1
        return v

    def reduce_mod_power(self, x, n):
        x = self._coerce(x)
        k = self.of(x)
        if k >= n:
            return self.field.zero
        p = self.p
        fr = x.payload / Fraction(p) ** k  # unit part
        m = p ** (n - k)
        r = fr.numerator * pow(fr.denominator, -1, m) % m
        return self.field.element(Fraction(r) * Fraction(p) ** k)

    def residue(self, x):
        x = self._coerce(x)
        if self.of(x) < 0:
            raise MathDomainError(f"{x} is not integral at p={self.p}")
        fr = x.payload
        return self.residue_field.from_int(
            fr.numerator * pow(fr.denominator, -1, self.p))

    def residue_lifts(self):
        return [self.field.from_int(k) for k in range(self.p)]

    def descriptor(self):
        return f"v_{self.p} on Q"

    def to_json(self):
        return {"kind": "p-adic", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PAdicValuation) and other.p == self.p

    def __hash__(self):
        return hash(("vp", self.p))


class PolyAdicValuation(Valuation):
    """Order of vanishing along a monic irreducible pi in k[t]."""

    def __init__(self, field, pi):
        if not isinstance(field, RationalFunctionField):
            raise UnsupportedFieldError(
                "pi-adic valuations live on rational function fields")
        self.field = field
        base = field.base
        pi = pmonic(base, ptrim(tuple(base.coerce(c) for c in pi)))
        if pdeg(pi) < 1:
            raise MathDomainError("uniformizer must be non-constant")
        from .poly import UnivariatePolynomial
        if not UnivariatePolynomial(base, pi, field.name).is_irreducible():
            raise MathDomainError(
                f"{format_poly(pi, field.name)} is reducible over {base.descriptor()}")
        self.pi = pi
        if pdeg(pi) == 1:
            self.residue_field = base
            self._root = -pi[0]  # pi = t - root
        else:
            self.residue_field = SimpleExtension(base, pi, name=field.name + "bar",
                                                 check=False)
            self._root = None
        if base.is_finite:
            self.residue_size = base.size ** pdeg(pi)

    @property
    def uniformizer(self):
        return self.field.from_fraction(self.pi)

    def _order(self, poly):
        if len(self.pi) == 2 and self.pi[0].is_zero():
            # pi = t: order is the index of the first nonzero coefficient
            for i, c in enumerate(poly):
                if not c.is_zero():
                    return i
            return 0
        base = self.field.base
        v = 0
        while True:
            q, r = pdivmod(base, poly, self.pi)
            if r:
                return v
            v += 1
            poly = q

    def of(self, x):
        x = self._coerce(x)
        num, den = x.payload
        if not num:
            return INF
        return self._order(num) - self._order(den)

    def reduce_mod_power(self, x, n):
        x = self._coerce(x)
        k = self.of(x)
        if k >= n:
            return self.field.zero
        base = self.field.base
        num, den = x.payload
        # strip pi^k, then invert the (coprime) denominator mod pi^(n-k)
        if k >= 0:
            for _ in range(k):
                num = pdivmod(base, num, self.pi)[0]
        else:
            for _ in range(-k):
                den = pdivmod(base, den, self.pi)[0]
        mod = pconst(base, base.one)
        for _ in range(n - k):
            mod = pmul(base, mod, self.pi)
        g, s, _ = pxgcd(base, den, mod)
        assert pdeg(g) == 0
        inv = pmod(base, pmul(base, s, pconst(base, g[0].inverse())), mod)
        rep = pmod(base, pmul(base, num, inv), mod)
        pik_num = pconst(base, base.one)
        pik_den = pconst(base, base.one)
        for _ in range(abs(k)):
            if k > 0:
                pik_num = pmul(base, pik_num, self.pi)
            else:
                pik_den = pmul(base, pik_den, self.pi)
        return self.field.element(
            self.field._normalize(pmul(base, rep, pik_num), pik_den))

    def residue(self, x):
        x = self._coerce(x)
        if self.of(x) < 0:
            raise MathDomainError(
                f"{x} is not integral at {format_poly(self.pi, self.field.name)}")
        base = self.field.base
        num, den = x.payload
        if self._root is not None:
            nv = peval(base, num, self._root)
            dv = peval(base, den, self._root)
            return nv / dv
        g, s, _ = pxgcd(base, den, self.pi)
        inv = pmod(base, s, self.pi)
        rep = pmod(base, pmul(base, num, inv), self.pi)
        return self.residue_field.from_base_coeffs(rep)

    def residue_lifts(self):
        if self.residue_size is None:
            raise UnsupportedFieldError(
                f"{self.descriptor()} has an infinite residue field")
        base = self.field.base
        d = pdeg(self.pi)
        out = []
        for k in range(self.residue_size):
            digits = []
            kk = k
            for _ in range(d):
                digits.append(base.element(kk % base.p))
                kk //= base.p
            out.append(self.field.from_fraction(ptrim(digits)))
        return out

    def descriptor(self):
        return f"v_({format_poly(self.pi, self.field.name)}) on {self.field.descriptor()}"

    def to_json(self):
        return {"kind": "pi-adic",
                "pi": [str(c) for c in self.pi],
                "field": self.field.descriptor()}

    def __eq__(self, other):
        return (isinstance(other, PolyAdicValuation)
                and other.field == self.field and other.pi == self.pi)

    def __hash__(self):
        return hash(("vpi", self.field, tuple(c.payload for c in self.pi)))


class DegreeValuation(Valuation):
    """v(f/g) = deg g - deg f, the place at infinity of k(t)."""

    def __init__(self, field):
        if not isinstance(field, RationalFunctionField):
            raise UnsupportedFieldError(
                "the degree valuation lives on rational function fields")
        self.field = field
        self.residue_field = field.base
        self._t_adic = PolyAdicValuation(field, (field.base.zero, field.base.one))
        if field.base.is_finite:
            self.residue_size = field.base.size

    @property
    def uniformizer(self):
        return self.field.from_fraction((self.field.base.one,), (0, 1))  # 1/t

    def of(self, x):
        x = self._coerce(x)
        num, den = x.payload
        if not num:
            return INF
        return pdeg(den) - pdeg(num)

    def _conj(self, x):
        """t -> 1/t; sends this valuation to the t-adic one."""
        num, den = x.payload
        base = self.field.base
        dn, dd = pdeg(num), pdeg(den)
        d = max(dn, dd)
        # x(1/t) = t^(d-dn) rev(num) / t^(d-dd) rev(den)
        rn = tuple(reversed(num)) if num else ()
        rd = tuple(reversed(den))
        rn = (base.zero,) * (d - dn) + rn if num else ()
        rd = (base.zero,) * (d - dd) + rd
        return self.field.element(self.field._normalize(rn, rd))

    def reduce_mod_power(self, x, n):
        x = self._coerce(x)
        return self._conj(self._t_adic.reduce_mod_power(self._conj(x), n))

    def residue(self, x):
        x = self._coerce(x)
        v = self.of(x)
        if v < 0:
            raise MathDomainError(f"{x} is not integral at infinity")
        if v > 0:
            return self.residue_field.zero
        num, den = x.payload
        return num[-1] / den[-1]

    def residue_lifts(self):
        if self.residue_size is None:
            raise UnsupportedFieldError(
                f"{self.descriptor()} has an infinite residue field")
        return [self.field.from_fraction((self.field.base.element(k),))
                for k in range(self.field.base.p)]

    def descriptor(self):
        return f"v_deg on {self.field.descriptor()}"

    def to_json(self):
        return {"kind": "degree", "field": self.field.descriptor()}

    def __eq__(self, other):
        return isinstance(other, DegreeValuation) and other.field == self.field

    def __hash__(self):
        return hash(("vdeg", self.field))

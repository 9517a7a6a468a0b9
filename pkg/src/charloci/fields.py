"""Exact arithmetic over a small tower of fields.

Supported fields:

* ``Rationals()``                 arbitrary-precision fractions,
* ``PrimeField(p)``               integers mod a prime p,
* ``SimpleExtension(K, m)``       K[x]/(m), m monic irreducible over K,
* ``RationalFunctionField(K)``    K(t), reduced ratios of polynomials.

Extension and function-field bases are the rationals or a prime field;
towers deeper than one extension step are out of scope.

Every element is held in a canonical form (fractions in lowest terms,
least non-negative residues, remainders of degree < deg m, coprime
numerator/denominator with monic denominator), so ``==`` on elements is
equality in the field and elements are usable as dict keys.  Elements and
field descriptors are immutable; all operations are pure.

Low-level polynomial arithmetic on coefficient tuples lives here because
the extension and function fields need it for their own element ops.  The
public polynomial interface (classes, factorization) is in ``poly``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnsupportedFieldError


class FieldElement:
    """A value together with the field it lives in.

    Arithmetic dispatches to the field descriptor; ints coerce via
    ``from_int`` so expressions like ``x + 1`` work.  Mixing elements of
    structurally different fields raises ValueError.
    """

    __slots__ = ("field", "payload")

    def __init__(self, field, payload):
        self.field = field
        self.payload = payload

    def _co(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(
                    f"field mismatch: {self.field.descriptor()} vs {other.field.descriptor()}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, o.payload))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, self.field._neg(o.payload)))

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(o.payload, self.field._neg(self.payload)))

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, o.payload))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.field, self.field._inv(self.payload))

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.payload == other.payload
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.payload))

    def is_zero(self):
        return self.field._is_zero(self.payload)

    def is_one(self):
        return self.payload == self.field.one.payload

    def __str__(self):
        return self.field._str(self.payload)

    def __repr__(self):
        return self.field._str(self.payload)

    def sort_key(self):
        """Total order key, stable across runs, for deterministic output."""
        return self.field._sort_key(self.payload)


class Field:
    """Base descriptor.  Subclasses implement payload-level ops."""

    characteristic = 0
    is_finite = False
    size = None  # number of elements when finite

    def element(self, payload):
        return FieldElement(self, payload)

    @property
    def zero(self):
        z = getattr(self, "_zero_cache", None)
        if z is None:
            z = self.element(self._zero_payload())
            self._zero_cache = z
        return z

    @property
    def one(self):
        o = getattr(self, "_one_cache", None)
        if o is None:
            o = self.element(self._one_payload())
            self._one_cache = o
        return o

    def from_int(self, n):
        return self.element(self._from_int(n))

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError(
                    f"field mismatch: {self.descriptor()} vs {x.field.descriptor()}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction) and isinstance(self, Rationals):
            return self.element(x)
        raise TypeError(f"cannot coerce {x!r} into {self.descriptor()}")

    def elements(self):
        raise UnsupportedFieldError(f"{self.descriptor()} is not finite")

    def descriptor(self):
        raise NotImplementedError

    def __repr__(self):
        return self.descriptor()

    def _is_zero(self, a):
        return a == self._zero_payload()


class Rationals(Field):
    characteristic = 0

    def _zero_payload(self):
        return Fraction(0)

    def _one_payload(self):
        return Fraction(1)

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _str(self, a):
        return str(a)

    def _sort_key(self, a):
        return (0, a.numerator, a.denominator)

    def descriptor(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


def is_prime(n):
    # deterministic Miller-Rabin, valid far beyond desk scale
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField(Field):
    is_finite = True

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.size = p

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1 % self.p

    def _from_int(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _str(self, a):
        return str(a)

    def _sort_key(self, a):
        return (0, a)

    def elements(self):
        for k in range(self.p):
            yield self.element(k)

    def descriptor(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


# ---------------------------------------------------------------------------
# polynomial arithmetic on coefficient tuples
#
# A polynomial over a field F is a tuple of FieldElements, index = degree,
# no trailing zeros; () is the zero polynomial.

def ptrim(cs):
    cs = tuple(cs)
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return cs[:n]


def pdeg(a):
    return len(a) - 1  # zero polynomial gets -1


def pint(F, ints):
    """Polynomial from integer coefficients, low degree first."""
    return ptrim(tuple(F.from_int(c) for c in ints))


def pconst(F, c):
    c = F.coerce(c)
    return () if c.is_zero() else (c,)


def pX(F):
    return (F.zero, F.one)


def _pwrap(F, ints):
    """Reduced int payloads back to a trimmed coefficient tuple."""
    n = len(ints)
    while n and not ints[n - 1]:
        n -= 1
    return tuple(FieldElement(F, v) for v in ints[:n])


def padd(F, a, b):
    if isinstance(F, PrimeField):
        p = F.p
        if len(a) < len(b):
            a, b = b, a
        out = [x.payload for x in a]
        for i, y in enumerate(b):
            out[i] = (out[i] + y.payload) % p
        return _pwrap(F, out)
    n = max(len(a), len(b))
    out = []
    z = F.zero
    for i in range(n):
        x = a[i] if i < len(a) else z
        y = b[i] if i < len(b) else z
        out.append(x + y)
    return ptrim(out)


def pneg(F, a):
    return tuple(-c for c in a)


def psub(F, a, b):
    if isinstance(F, PrimeField):
        p = F.p
        out = [x.payload for x in a]
        if len(out) < len(b):
            out.extend([0] * (len(b) - len(out)))
        for i, y in enumerate(b):
            out[i] = (out[i] - y.payload) % p
        return _pwrap(F, out)
    return padd(F, a, pneg(F, b))


def pscale(F, a, c):
    if c.is_zero():
        return ()
    return tuple(x * c for x in a)


def pmul(F, a, b):
    if not a or not b:
        return ()
    if isinstance(F, PrimeField):
        p = F.p
        A = [x.payload for x in a]
        B = [y.payload for y in b]
        out = [0] * (len(A) + len(B) - 1)
        for i, x in enumerate(A):
            if x:
                for j, y in enumerate(B):
                    out[i + j] += x * y
        return _pwrap(F, [v % p for v in out])
    z = F.zero
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return ptrim(out)


def pmul_xk(F, a, k):
    if not a:
        return ()
    return (F.zero,) * k + tuple(a)


def pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if isinstance(F, PrimeField):
        p = F.p
        r = [x.payload for x in a]
        B = [y.payload for y in b]
        nb = len(B)
        q = [0] * max(0, len(r) - nb + 1)
        inv_lc = pow(B[-1], -1, p)
        for i in range(len(r) - nb, -1, -1):
            c = r[i + nb - 1] * inv_lc % p
            if c:
                q[i] = c
                for j, y in enumerate(B):
                    if y:
                        r[i + j] = (r[i + j] - c * y) % p
        return _pwrap(F, q), _pwrap(F, r)
    r = list(a)
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    inv_lc = b[-1].inverse()
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv_lc
        if not c.is_zero():
            q[i] = c
            for j, y in enumerate(b):
                r[i + j] = r[i + j] - c * y
    return ptrim(q), ptrim(r)


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F, a):
    if not a:
        return ()
    lc = a[-1]
    if lc.is_one():
        return a
    return pscale(F, a, lc.inverse())


def pgcd(F, a, b):
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def pxgcd(F, a, b):
    """Extended gcd: returns (g, s, t), g monic, s*a + t*b = g."""
    r0, r1 = a, b
    s0, s1 = pconst(F, F.one), ()
    t0, t1 = (), pconst(F, F.one)
    while r1:
        q, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(F, s0, pmul(F, q, s1))
        t0, t1 = t1, psub(F, t0, pmul(F, q, t1))
    if not r0:
        return (), s0, t0
    lc = r0[-1]
    if not lc.is_one():
        inv = lc.inverse()
        r0 = pscale(F, r0, inv)
        s0 = pscale(F, s0, inv)
        t0 = pscale(F, t0, inv)
    return r0, s0, t0


def pderiv(F, a):
    return ptrim(tuple(a[i] * i for i in range(1, len(a))))


def peval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def ppow_mod(F, a, e, m):
    result = pmod(F, pconst(F, F.one), m)
    base = pmod(F, a, m)
    while e:
        if e & 1:
            result = pmod(F, pmul(F, result, base), m)
        base = pmod(F, pmul(F, base, base), m)
        e >>= 1
    return result


def format_poly(a, var):
    """Human form, descending degree: ``x^2 - x - 1``."""
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c.is_zero():
            continue
        s = str(c)
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        if i == 0:
            term = f"({mag})" if " " in mag else mag
        else:
            needs_parens = "/" in mag or " " in mag
            xv = var if i == 1 else f"{var}^{i}"
            if mag == "1":
                term = xv
            elif needs_parens:
                term = f"({mag}){xv}"
            else:
                term = f"{mag}{xv}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


def psort_key(a):
    return (len(a),) + tuple(c.sort_key() for c in a)


# ---------------------------------------------------------------------------


class SimpleExtension(Field):
    """K[x]/(m) for monic irreducible m over K, K the rationals or a prime
    field.  Payloads are fixed-length tuples of base elements (coefficients
    of 1, x, ..., x^(d-1)), so structural equality is field equality."""

    def __init__(self, base, modulus, name="x", check=True):
        if not isinstance(base, (Rationals, PrimeField)):
            raise UnsupportedFieldError(
                "extension base must be Q or a prime field (single-step tower)")
        modulus = ptrim(tuple(base.coerce(c) for c in modulus))
        if pdeg(modulus) < 2:
            raise ValueError("extension modulus must have degree >= 2")
        modulus = pmonic(base, modulus)
        self.base = base
        self.modulus = modulus
        self.degree = pdeg(modulus)
        self.name = name
        self.characteristic = base.characteristic
        if base.is_finite:
            self.is_finite = True
            self.size = base.size ** self.degree
        if check:
            from . import poly  # deferred, poly imports this module
            if not poly.UnivariatePolynomial(base, modulus, name).is_irreducible():
                raise ValueError(
                    f"modulus {format_poly(modulus, name)} is reducible over {base.descriptor()}")

    def _pad(self, cs):
        cs = tuple(cs)
        return cs + (self.base.zero,) * (self.degree - len(cs))

    def _zero_payload(self):
        return self._pad(())

    def _one_payload(self):
        return self._pad((self.base.one,))

    def _from_int(self, n):
        return self._pad(pconst(self.base, self.base.from_int(n)))

    def from_base_coeffs(self, coeffs):
        """Element from base-field coefficients (low degree first)."""
        cs = ptrim(tuple(self.base.coerce(c) for c in coeffs))
        if pdeg(cs) >= self.degree:
            cs = pmod(self.base, cs, self.modulus)
        return self.element(self._pad(cs))

    @property
    def generator(self):
        """The class of x."""
        return self.from_base_coeffs((0, 1))

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        prod = pmul(self.base, ptrim(a), ptrim(b))
        return self._pad(pmod(self.base, prod, self.modulus))

    def _inv(self, a):
        g, s, _ = pxgcd(self.base, ptrim(a), self.modulus)
        assert pdeg(g) == 0, "modulus not irreducible"
        return self._pad(pmod(self.base, s, self.modulus))

    def _is_zero(self, a):
        return all(c.is_zero() for c in a)

    def _str(self, a):
        return format_poly(ptrim(a), self.name)

    def _sort_key(self, a):
        return (1,) + tuple(c.sort_key() for c in a)

    def elements(self):
        if not self.is_finite:
            raise UnsupportedFieldError(f"{self.descriptor()} is not finite")
        p = self.base.p
        for k in range(self.size):
            digits = []
            kk = k
            for _ in range(self.degree):
                digits.append(kk % p)
                kk //= p
            yield self.element(tuple(self.base.element(d) for d in digits))

    def descriptor(self):
        return f"{self.base.descriptor()}[{self.name}]/({format_poly(self.modulus, self.name)})"

    def __eq__(self, other):
        return (isinstance(other, SimpleExtension)
                and other.base == self.base
                and other.name == self.name
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.base, self.name,
                     tuple(c.payload for c in self.modulus)))


class RationalFunctionField(Field):
    """K(t): payload (num, den), coefficient tuples over K with den monic
    and gcd(num, den) = 1; zero is ((), (1,))."""

    def __init__(self, base, name="t"):
        if not isinstance(base, (Rationals, PrimeField)):
            raise UnsupportedFieldError(
                "function-field base must be Q or a prime field")
        self.base = base
        self.name = name
        self.characteristic = base.characteristic

    def _normalize(self, num, den):
        num = ptrim(num)
        den = ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (self.base.one,))
        # strip the common power of the variable
        on = next(i for i, c in enumerate(num) if not c.is_zero())
        od = next(i for i, c in enumerate(den) if not c.is_zero())
        k = on if on < od else od
        if k:
            num = num[k:]
            den = den[k:]
        # a monomial side shares no further factor with the other
        if not (all(c.is_zero() for c in num[:-1])
                or all(c.is_zero() for c in den[:-1])):
            g = pgcd(self.base, num, den)
            if pdeg(g) > 0:
                num = pdivmod(self.base, num, g)[0]
                den = pdivmod(self.base, den, g)[0]
        lc = den[-1]
        if not lc.is_one():
            inv = lc.inverse()
            num = pscale(self.base, num, inv)
            den = pscale(self.base, den, inv)
        return (num, den)

    def from_fraction(self, num, den=(1,)):
        num = tuple(self.base.coerce(c) for c in num)
        den = tuple(self.base.coerce(c) for c in den)
        return self.element(self._normalize(num, den))

    @property
    def variable(self):
        return self.from_fraction((0, 1))

    def _zero_payload(self):
        return ((), (self.base.one,))

    def _one_payload(self):
        return ((self.base.one,), (self.base.one,))

    def _from_int(self, n):
        return (pconst(self.base, self.base.from_int(n)), (self.base.one,))

    def _add(self, a, b):
        n1, d1 = a
        n2, d2 = b
        num = padd(self.base, pmul(self.base, n1, d2), pmul(self.base, n2, d1))
        return self._normalize(num, pmul(self.base, d1, d2))

    def _neg(self, a):
        return (pneg(self.base, a[0]), a[1])

    def _mul(self, a, b):
        return self._normalize(pmul(self.base, a[0], b[0]),
                               pmul(self.base, a[1], b[1]))

    def _inv(self, a):
        return self._normalize(a[1], a[0])

    def _is_zero(self, a):
        return not a[0]

    def _str(self, a):
        num, den = a
        if pdeg(den) == 0 and den[0].is_one():
            return format_poly(num, self.name)
        ns = format_poly(num, self.name)
        ds = format_poly(den, self.name)
        return f"({ns})/({ds})"

    def _sort_key(self, a):
        return (2, psort_key(a[0]), psort_key(a[1]))

    def descriptor(self):
        return f"{self.base.descriptor()}({self.name})"

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.base == self.base and other.name == self.name)

    def __hash__(self):
        return hash(("rf", self.base, self.name))


# ---------------------------------------------------------------------------
# finite multiplicative structure

FINITE_UNIT_BUDGET = 10 ** 6


def _require_small_finite(F):
    if not F.is_finite:
        raise UnsupportedFieldError(f"{F.descriptor()} is not finite")
    if F.size > FINITE_UNIT_BUDGET:
        raise UnsupportedFieldError(
            f"finite field of size {F.size} exceeds the unit-group budget")


def _factor_int(n):
    """Prime factorization by trial division (desk scale), dict p -> e."""
    assert n >= 1
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_generator(F):
    """Smallest generator of the cyclic unit group of a finite field,
    in enumeration order."""
    _require_small_finite(F)
    q = F.size
    primes = list(_factor_int(q - 1))
    for x in F.elements():
        if x.is_zero():
            continue
        if q == 2:
            return x
        if all((x ** ((q - 1) // r)) != F.one for r in primes):
            return x
    raise AssertionError("no generator found")


def multiplicative_order(x):
    F = x.field
    _require_small_finite(F)
    if x.is_zero():
        raise ZeroDivisionError("zero has no multiplicative order")
    n = F.size - 1
    order = n
    for r, e in _factor_int(n).items():
        for _ in range(e):
            if (x ** (order // r)) == F.one:
                order //= r
            else:
                break
    return order


def discrete_log(x, g):
    """log_g(x) in the unit group, baby-step giant-step."""
    F = x.field
    _require_small_finite(F)
    if x.is_zero():
        raise ZeroDivisionError("discrete log of zero")
    n = F.size - 1
    if n == 0 or x == F.one:
        return 0
    m = 1
    while m * m < n:
        m += 1
    table = {}
    cur = F.one
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * g
    step = (g ** m).inverse()
    cur = x
    for i in range(m + 1):
        if cur in table:
            return (i * m + table[cur]) % n
        cur = cur * step
    raise ValueError("element not in the group generated by g")


QQ = Rationals()

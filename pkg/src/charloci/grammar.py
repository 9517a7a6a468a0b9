"""Shared text grammars: field descriptors, elements, valuations, characters.

Descriptors: ``Q``, ``F<p>``, ``Q[x]/(<poly>)``, ``F<p>[x]/(<poly>)``,
``Q(t)``, ``F<p>(t)``; the bracketed or parenthesized name fixes the
variable, polynomials use integer (over F_p) or rational (over Q)
coefficients and ``^`` for powers.

Valuations: ``p:<prime>`` on Q, ``pi:<poly>`` and ``deg`` on k(t).

Characters: ``name=value,name=value`` with one entry per generator.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import MathDomainError, ParseError
from .fields import PrimeField, RationalFunctionField, Rationals, SimpleExtension
from .presentations import Character
from .valuations import DegreeValuation, PAdicValuation, PolyAdicValuation

_FIELD_RE = re.compile(
    r"^\s*(?:Q|F(?P<p>\d+))\s*"
    r"(?:\[\s*(?P<extvar>[A-Za-z_]\w*)\s*\]\s*/\s*\(\s*(?P<modulus>.+?)\s*\)"
    r"|\(\s*(?P<ffvar>[A-Za-z_]\w*)\s*\))?\s*$")


def parse_field(text: str):
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"bad field descriptor {text!r}")
    p = m.group("p")
    base = Rationals() if p is None else _prime_field(p, text)
    if m.group("extvar"):
        var = m.group("extvar")
        coeffs = parse_polynomial(m.group("modulus"), var, base)
        try:
            return SimpleExtension(base, coeffs, name=var)
        except ValueError as exc:
            raise MathDomainError(str(exc)) from exc
    if m.group("ffvar"):
        return RationalFunctionField(base, name=m.group("ffvar"))
    return base


def _prime_field(digits, text):
    try:
        return PrimeField(int(digits))
    except ValueError as exc:
        raise MathDomainError(f"bad field descriptor {text!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# polynomials with one variable


def _split_terms(s):
    terms = []
    cur = ""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "+-^*/(":
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    terms.append(cur)
    return terms


def parse_polynomial(text, var, base):
    """Coefficient list (constant first) of a polynomial in ``var`` with
    coefficients parsed over ``base``."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    frac = r"\d+(?:/\d+)?" if isinstance(base, Rationals) else r"\d+"
    pat = re.compile(
        rf"^(?P<sign>-?)(?P<coef>{frac})?"
        rf"(?:\*?(?P<var>{re.escape(var)})(?:\^(?P<exp>\d+))?)?$")
    coeffs = {}
    for term in _split_terms(s):
        m = pat.match(term)
        if m is None or (m.group("coef") is None and m.group("var") is None):
            raise ParseError(
                f"bad polynomial term {term!r} (variable {var!r})")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("var") is not None:
            e = int(m.group("exp")) if m.group("exp") else 1
        coeffs[e] = coeffs.get(e, 0) + c
    deg = max(coeffs)
    out = []
    for i in range(deg + 1):
        c = coeffs.get(i, Fraction(0))
        if isinstance(base, Rationals):
            out.append(base.coerce(c))
        else:
            if c.denominator != 1:
                raise ParseError(f"non-integer coefficient {c} over "
                                 f"{base.descriptor()}")
            out.append(base.from_int(c.numerator))
    return tuple(out)


# ---------------------------------------------------------------------------
# elements


def parse_element(field, text: str):
    s = text.strip()
    if not s:
        raise ParseError("empty element")
    if isinstance(field, Rationals):
        try:
            return field.coerce(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {s!r}: {exc}") from exc
    if isinstance(field, PrimeField):
        try:
            return field.from_int(int(s))
        except ValueError as exc:
            raise ParseError(f"bad residue {s!r}: {exc}") from exc
    if isinstance(field, SimpleExtension):
        coeffs = parse_polynomial(s, field.name, field.base)
        if len(coeffs) > field.degree:
            raise ParseError(
                f"degree {len(coeffs) - 1} expression exceeds the extension "
                f"degree {field.degree}; reduce mod the modulus first")
        return field.from_base_coeffs(coeffs)
    if isinstance(field, RationalFunctionField):
        return _parse_function(field, s)
    raise ParseError(f"no element grammar for {field.descriptor()}")


def _parse_function(field, s):
    num, den = _split_fraction(s)
    ncs = parse_polynomial(_strip_parens(num), field.name, field.base)
    if den is None:
        return field.from_fraction(ncs)
    dcs = parse_polynomial(_strip_parens(den), field.name, field.base)
    try:
        return field.from_fraction(ncs, dcs)
    except ZeroDivisionError as exc:
        raise MathDomainError("zero denominator") from exc


def _split_fraction(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            num, den = s[:i].strip(), s[i + 1:].strip()
            for side in (num, den):
                # a bare multi-term side is ambiguous: (t+1)/2 vs t+(1/2)
                if side == _strip_parens(side) and \
                        len(_split_terms(side.replace(" ", ""))) > 1:
                    raise ParseError(
                        f"parenthesize the fraction parts: {s!r}")
            return num, den
    return s, None


def _strip_parens(s):
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(s) - 1:
                    return s
        s = s[1:-1].strip()
    return s


# ---------------------------------------------------------------------------
# valuations


def parse_valuation(field, text: str):
    s = text.strip()
    if s == "deg":
        return DegreeValuation(field)
    head, sep, rest = s.partition(":")
    if not sep:
        raise ParseError(f"bad valuation {text!r}; use p:<prime>, "
                         f"pi:<poly> or deg")
    if head == "p":
        if not isinstance(field, Rationals):
            raise MathDomainError(
                f"p-adic valuations live on Q, not {field.descriptor()}")
        try:
            p = int(rest)
        except ValueError as exc:
            raise ParseError(f"bad prime {rest!r}") from exc
        return PAdicValuation(p)
    if head == "pi":
        if not isinstance(field, RationalFunctionField):
            raise MathDomainError(
                f"pi-adic valuations live on rational function fields, "
                f"not {field.descriptor()}")
        coeffs = parse_polynomial(rest.strip(), field.name, field.base)
        return PolyAdicValuation(field, coeffs)
    raise ParseError(f"bad valuation {text!r}; use p:<prime>, pi:<poly> or deg")


# ---------------------------------------------------------------------------
# characters


def parse_assignments(presentation, field, text: str):
    """name=value,... with every generator assigned exactly once."""
    assignments = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise ParseError(f"bad character entry {part!r}; use name=value")
        name = name.strip()
        if name not in presentation.gens:
            raise ParseError(f"unknown generator {name!r}; have "
                             f"{', '.join(presentation.gens)}")
        if name in assignments:
            raise ParseError(f"generator {name!r} assigned twice")
        assignments[name] = parse_element(field, value)
    missing = [g for g in presentation.gens if g not in assignments]
    if missing:
        raise ParseError(f"missing images for {', '.join(missing)}")
    return tuple(assignments[g] for g in presentation.gens)


def parse_character(presentation, field, text: str) -> Character:
    return Character(presentation, field,
                     parse_assignments(presentation, field, text))

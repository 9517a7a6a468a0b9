from fractions import Fraction

from charloci.errors import MathDomainError, ParseError
from charloci.fields import PrimeField, RationalFunctionField, Rationals, SimpleExtension
from charloci.grammar import (
    parse_character, parse_element, parse_field, parse_polynomial,
    parse_valuation,
)
from charloci.jsonio import dumps, element_json
from charloci.presentations import baumslag_solitar
from charloci.valuations import DegreeValuation, PAdicValuation, PolyAdicValuation

QQ = Rationals()

# --- field descriptors round-trip
for text, expect in [
    ("Q", "Q"),
    ("F5", "F5"),
    ("F2", "F2"),
    ("Q(t)", "Q(t)"),
    ("F3(s)", "F3(s)"),
    ("Q[x]/(x^2 - x - 1)", "Q[x]/(x^2 - x - 1)"),
    ("Q[z]/(z^2+z+1)", "Q[z]/(z^2 + z + 1)"),
    ("F2[w]/(w^2 + w + 1)", "F2[w]/(w^2 + w + 1)"),
]:
    K = parse_field(text)
    assert K.descriptor() == expect, (text, K.descriptor())
    assert parse_field(K.descriptor()) == K
for bad in ["", "Z", "Q[x]", "F4", "Q[x]/(x+1)", "Q[x]/(x^2-1)", "F6(t)"]:
    try:
        parse_field(bad)
        raise SystemExit(f"expected rejection of {bad!r}")
    except (ParseError, MathDomainError):
        pass
print("field descriptor grammar passes")

# --- polynomial parsing details
F3 = PrimeField(3)
cs = parse_polynomial("2t^3 - t + 5", "t", QQ)
assert [c.payload for c in cs] == [Fraction(5), Fraction(-1), Fraction(0),
                                   Fraction(2)]
cs = parse_polynomial("1/2x^2+3", "x", QQ)
assert [c.payload for c in cs] == [Fraction(3), Fraction(0), Fraction(1, 2)]
cs = parse_polynomial("x - x", "x", QQ)
assert all(c.is_zero() for c in cs)
try:
    parse_polynomial("y + 1", "x", QQ)
    raise SystemExit("expected a variable mismatch error")
except ParseError:
    pass
try:
    parse_polynomial("1/2", "t", F3)
    raise SystemExit("expected an integrality error")
except ParseError:
    pass
print("polynomial grammar passes")

# --- elements
assert str(parse_element(QQ, "5/6")) == "5/6"
assert str(parse_element(QQ, "-3")) == "-3"
assert str(parse_element(PrimeField(7), "10")) == "3"
K = parse_field("Q[x]/(x^2 - x - 1)")
x = parse_element(K, "x")
assert x == K.generator
assert parse_element(K, "2x - 1") == K.from_int(2) * x - K.one
KT = parse_field("F5(t)")
t = parse_element(KT, "t")
assert t == KT.variable
f = parse_element(KT, "(t+1)/(t-1)")
assert f * parse_element(KT, "t-1") == parse_element(KT, "t+1")
half = parse_element(parse_field("Q(t)"), "1/2")
assert half.payload == ((Fraction(1, 2),), (Fraction(1),)) or \
    half == parse_field("Q(t)").from_fraction((QQ.coerce(Fraction(1, 2)),))
for bad in ["", "t+1/2"]:
    try:
        parse_element(KT, bad)
        raise SystemExit(f"expected rejection of {bad!r}")
    except ParseError:
        pass
try:
    parse_element(KT, "1/(t-t)")
    raise SystemExit("expected zero denominator rejection")
except MathDomainError:
    pass
# element encodings over the wire
assert element_json(parse_element(QQ, "5/6")) == "5/6"
assert element_json(x) == ["0", "1"]
assert element_json(f) == {"num": ["1", "1"], "den": ["4", "1"]}
print("element grammar passes")

# --- valuations
v = parse_valuation(QQ, "p:2")
assert isinstance(v, PAdicValuation) and v.p == 2
try:
    parse_valuation(QQ, "p:4")
    raise SystemExit("expected prime rejection")
except MathDomainError:
    pass
v = parse_valuation(KT, "pi:t")
assert isinstance(v, PolyAdicValuation)
v = parse_valuation(KT, "pi:t^2+t+1")
assert isinstance(v, PolyAdicValuation) and v.residue_field.degree == 2
v = parse_valuation(KT, "deg")
assert isinstance(v, DegreeValuation)
try:
    parse_valuation(QQ, "deg")
    raise SystemExit("expected field mismatch")
except MathDomainError:
    pass
try:
    parse_valuation(KT, "p:2")
    raise SystemExit("expected field mismatch")
except MathDomainError:
    pass
print("valuation grammar passes")

# --- characters
P = baumslag_solitar(1, 2)
chi = parse_character(P, QQ, "t=2,a=1")
assert [str(v) for v in chi.images] == ["1", "2"]
chi = parse_character(P, QQ, " a = 1 , t = 1/2 ")
assert [str(v) for v in chi.images] == ["1", "1/2"]
for bad, exc in [("t=2", ParseError), ("t=2,a=1,t=3", ParseError),
                 ("t=2,b=1", ParseError), ("t=0,a=1", MathDomainError),
                 ("t=3,a=2", MathDomainError)]:
    try:
        parse_character(P, QQ, bad)
        raise SystemExit(f"expected rejection of {bad!r}")
    except exc:
        pass
print("character grammar passes")

# --- deterministic json
assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "b": 1,\n  "a": [\n    1,\n    2\n  ]\n}'
print("ALL GRAMMAR CHECKS PASS")

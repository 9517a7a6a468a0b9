"""Deterministic JSON emission.

Field elements go over the wire exactly: decimal strings for rationals
and prime-field residues, coefficient lists (constant first) for
extension elements, {"num", "den"} coefficient lists for function-field
elements.  Dict key order is insertion order everywhere, so identical
inputs serialize to identical bytes.
"""

from __future__ import annotations

import json
import sys

from .fields import PrimeField, RationalFunctionField, Rationals, SimpleExtension


def element_json(x):
    K = x.field
    if isinstance(K, (Rationals, PrimeField)):
        return str(x)
    if isinstance(K, SimpleExtension):
        return [element_json(c) for c in x.payload]
    if isinstance(K, RationalFunctionField):
        num, den = x.payload
        return {
            "num": [element_json(c) for c in num],
            "den": [element_json(c) for c in den],
        }
    return str(x)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def emit(obj, stream=None):
    stream = stream if stream is not None else sys.stdout
    stream.write(dumps(obj) + "\n")


def error_json(exc) -> dict:
    return {"error": type(exc).__name__, "message": str(exc)}

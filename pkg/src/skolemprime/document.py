"""JSON sequence documents with exact numerics.

Every number is a JSON string ("-3", "5/7") or a JSON integer.  Floats and
booleans are rejected with the path of the offending value, never coerced.
Serialization always writes strings, so serialize -> parse -> serialize is
byte-identical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidArgumentError
from .lrs import ExpPolySequence, RecurrenceSpec, to_exp_poly
from .number_field import FieldElement, NumberField

SCHEMA = "skolemprime.sequence/1"
_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class DocumentError(InvalidArgumentError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class SequenceDocument:
    field: NumberField
    terms: Optional[ExpPolySequence] = None
    recurrence: Optional[RecurrenceSpec] = None
    roots: Optional[tuple] = None       # ((FieldElement, multiplicity), ...)

    def sequence(self) -> ExpPolySequence:
        """The exponential-polynomial form, solving for it when given a recurrence."""
        if self.terms is not None:
            return self.terms
        if self.roots is None:
            raise DocumentError("$.recurrence.roots",
                                "roots are required to convert a recurrence")
        return to_exp_poly(self.recurrence, self.field, self.roots)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _rational(x, path) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise DocumentError(path, f"{type(x).__name__} literal {x!r}; use an exact string")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.fullmatch(x.strip()):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError:
            raise DocumentError(path, "zero denominator") from None
    raise DocumentError(path, f"expected an exact rational, got {x!r}")


def _integer(x, path) -> int:
    r = _rational(x, path)
    if r.denominator != 1:
        raise DocumentError(path, f"expected an integer, got {x!r}")
    return int(r)


def _list(x, path):
    if not isinstance(x, list):
        raise DocumentError(path, f"expected a list, got {type(x).__name__}")
    return x


def _object(x, path, allowed):
    if not isinstance(x, dict):
        raise DocumentError(path, f"expected an object, got {type(x).__name__}")
    extra = set(x) - set(allowed)
    if extra:
        raise DocumentError(path, f"unknown keys {sorted(extra)}")
    return x


def _require(obj, key, path):
    if key not in obj:
        raise DocumentError(path, f"missing key {key!r}")
    return obj[key]


def _element(K, x, path) -> FieldElement:
    coords = [_rational(c, f"{path}[{i}]") for i, c in enumerate(_list(x, path))]
    if len(coords) > K.degree:
        raise DocumentError(path, f"{len(coords)} coordinates for a degree-{K.degree} field")
    return K.element(coords)


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except DocumentError:
        raise
    except InvalidArgumentError as exc:
        raise DocumentError(path, str(exc)) from None


def parse_document(data) -> SequenceDocument:
    """Validate a decoded JSON object and build the document."""
    doc = _object(data, "$", {"schema", "field", "terms", "recurrence"})
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise DocumentError("$.schema", f"unsupported schema {schema!r}, expected {SCHEMA!r}")
    fobj = _object(_require(doc, "field", "$"), "$.field", {"poly", "galois"})
    poly = [_integer(c, f"$.field.poly[{i}]")
            for i, c in enumerate(_list(_require(fobj, "poly", "$.field"), "$.field.poly"))]
    galois = fobj.get("galois", False)
    if not isinstance(galois, bool):
        raise DocumentError("$.field.galois", "expected true or false")
    K = _wrap("$.field.poly", NumberField, tuple(poly), galois)

    has_terms, has_rec = "terms" in doc, "recurrence" in doc
    if has_terms == has_rec:
        raise DocumentError("$", "exactly one of 'terms' and 'recurrence' must be present")
    if has_terms:
        terms = []
        for i, t in enumerate(_list(doc["terms"], "$.terms")):
            p = f"$.terms[{i}]"
            t = _object(t, p, {"lambda", "A"})
            lam = _element(K, _require(t, "lambda", p), f"{p}.lambda")
            A = tuple(_element(K, a, f"{p}.A[{j}]")
                      for j, a in enumerate(_list(_require(t, "A", p), f"{p}.A")))
            terms.append((lam, A))
        seq = _wrap("$.terms", ExpPolySequence, K, tuple(terms))
        return SequenceDocument(K, terms=seq)

    rec = _object(doc["recurrence"], "$.recurrence", {"coeffs", "initial", "roots"})
    coeffs = [_rational(c, f"$.recurrence.coeffs[{i}]")
              for i, c in enumerate(_list(_require(rec, "coeffs", "$.recurrence"),
                                          "$.recurrence.coeffs"))]
    initial = [_rational(c, f"$.recurrence.initial[{i}]")
               for i, c in enumerate(_list(_require(rec, "initial", "$.recurrence"),
                                           "$.recurrence.initial"))]
    spec = _wrap("$.recurrence", RecurrenceSpec, coeffs, initial)
    roots = None
    if "roots" in rec:
        roots = []
        for i, r in enumerate(_list(rec["roots"], "$.recurrence.roots")):
            p = f"$.recurrence.roots[{i}]"
            r = _object(r, p, {"lambda", "multiplicity"})
            lam = _element(K, _require(r, "lambda", p), f"{p}.lambda")
            mult = _integer(_require(r, "multiplicity", p), f"{p}.multiplicity")
            roots.append((lam, mult))
        roots = tuple(roots)
    return SequenceDocument(K, recurrence=spec, roots=roots)


def loads(text: str) -> SequenceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return parse_document(data)


def load(path) -> SequenceDocument:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _coords(el: FieldElement) -> list:
    return [str(c) for c in el.coords]


def to_data(doc: SequenceDocument) -> dict:
    K = doc.field
    out = {"schema": SCHEMA,
           "field": {"poly": [str(c) for c in K.defining_poly], "galois": K.galois_claimed}}
    if doc.terms is not None:
        out["terms"] = [{"lambda": _coords(lam), "A": [_coords(a) for a in A]}
                        for lam, A in doc.terms.terms]
    else:
        rec = {"coeffs": [str(c) for c in doc.recurrence.coeffs],
               "initial": [str(c) for c in doc.recurrence.initial]}
        if doc.roots is not None:
            rec["roots"] = [{"lambda": _coords(lam), "multiplicity": str(k)}
                            for lam, k in doc.roots]
        out["recurrence"] = rec
    return out


def dumps(doc: SequenceDocument) -> str:
    return json.dumps(to_data(doc), indent=2) + "\n"


def dump(doc: SequenceDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))

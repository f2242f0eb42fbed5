"""JSON element literals for the module models.

    theta     {"q-1": "1+x", "q": ["0", "1"], "order": 16, "bound": 2}
    ew        {"k-1": "1", "k": ["0", "2"], "order": 16}
    prufer    {"f": "1+x+x^2", "level": 2, "residue": "x"}
    rational  {"num": "x", "den": "1+x"}
    laurent   {"principal": ["1"], "tail": ["0", "1"], "order": 8}

A missing "order" means the element is exact (finitely supported).  Every
model's ``to_json`` output parses back to an equal value.
"""

from __future__ import annotations

import json

from .field import Field
from .laurent import LaurentSeriesElement, RationalFunc, parse_poly
from .models.ew import EWElement
from .models.prufer import prufer_element
from .models.theta import ThetaElement

MODULES = ("theta", "ew", "prufer", "rational", "laurent")


class LiteralError(ValueError):
    pass


def _load(text):
    if isinstance(text, dict):
        return text
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LiteralError(f"invalid JSON literal: {exc}") from None
    if not isinstance(data, dict):
        raise LiteralError("element literal must be a JSON object")
    return data


def _keys(data: dict, allowed: set, required: set = frozenset()):
    extra = set(data) - allowed
    if extra:
        raise LiteralError(f"unknown keys {sorted(extra)}; expected some of {sorted(allowed)}")
    missing = set(required) - set(data)
    if missing:
        raise LiteralError(f"missing keys {sorted(missing)}")


def _order(data: dict):
    order = data.get("order")
    exact = data.get("exact", order is None)
    if order is not None and not isinstance(order, int):
        raise LiteralError("order must be an integer")
    return order, bool(exact)


def _list(data: dict, key: str) -> list:
    val = data.get(key, [])
    if not isinstance(val, list):
        raise LiteralError(f"{key!r} must be a list")
    return val


def parse_theta(text, field: Field) -> ThetaElement:
    data = _load(text)
    _keys(data, {"q-1", "q", "order", "exact", "bound"})
    order, exact = _order(data)
    head = parse_poly(str(data.get("q-1", "0")), field)
    tail = [parse_poly(str(q), field) for q in _list(data, "q")]
    return ThetaElement(field, head, tail, order, exact, data.get("bound"))


def parse_ew(text, field: Field) -> EWElement:
    data = _load(text)
    _keys(data, {"k-1", "k", "order", "exact"})
    order, exact = _order(data)
    return EWElement(field, field(str(data.get("k-1", "0"))), [field(str(k)) for k in _list(data, "k")],
                     order, exact)


def parse_prufer(text, field: Field, acknowledge_unverified: bool = False):
    data = _load(text)
    _keys(data, {"f", "level", "residue"}, {"f"})
    f = parse_poly(str(data["f"]), field)
    level = data.get("level", 1)
    if not isinstance(level, int):
        raise LiteralError("level must be an integer")
    return prufer_element(f, level, str(data.get("residue", "0")), acknowledge_unverified)


def parse_rational(text, field: Field) -> RationalFunc:
    data = _load(text)
    _keys(data, {"num", "den"}, {"num"})
    return RationalFunc(parse_poly(str(data["num"]), field), parse_poly(str(data.get("den", "1")), field))


def parse_laurent_series(text, field: Field) -> LaurentSeriesElement:
    data = _load(text)
    _keys(data, {"principal", "tail", "order", "exact"})
    order, exact = _order(data)
    return LaurentSeriesElement(field, [field(str(k)) for k in _list(data, "principal")],
                                [field(str(k)) for k in _list(data, "tail")], order, exact)


_PARSERS = {
    "theta": parse_theta,
    "ew": parse_ew,
    "prufer": parse_prufer,
    "rational": parse_rational,
    "laurent": parse_laurent_series,
}


def parse_element(module: str, text, field: Field):
    if module not in _PARSERS:
        raise LiteralError(f"unknown module {module!r}; expected one of {', '.join(MODULES)}")
    return _PARSERS[module](text, field)


def dumps(obj) -> str:
    """Compact JSON text; key order is the (deterministic) construction order."""
    return json.dumps(obj, separators=(",", ":"))

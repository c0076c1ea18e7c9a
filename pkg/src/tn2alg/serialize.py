"""
JSON encodings for elements and tensors.

An element is an array of {"family": "L|H|G|Q", "index": int, "coeff": "p/q"}
and a rank-k tensor is an array of {"slots": [generator, ...], "coeff": "p/q"}
where each slot is a {"family", "index"} object.  Coefficient strings are
exact rationals with no decimal point ("3", "-1/2"); terms are emitted in
canonical sorted order so that dumps are deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import AlgebraSpec, Element, Generator
from .tensors import Tensor2, Tensor3


class FormatError(ValueError):
    """Malformed JSON payload for an element or tensor."""


def _coeff_to_str(coeff: Fraction) -> str:
    return str(coeff)


def _coeff_from_str(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or "." in text:
        raise FormatError("coefficients must be exact rational strings, got %r" % (text,))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError("bad coefficient %r: %s" % (text, exc))


def _generator_to_dict(gen: Generator) -> dict:
    return {"family": gen.family, "index": gen.index}


def _generator_from_dict(data) -> Generator:
    try:
        family = data["family"]
        index = data["index"]
    except (TypeError, KeyError):
        raise FormatError("generator needs 'family' and 'index', got %r" % (data,))
    if not isinstance(index, int) or isinstance(index, bool):
        raise FormatError("generator index must be an integer, got %r" % (index,))
    return Generator(family, index)


def element_to_obj(elt: Element) -> list:
    return [
        {"family": g.family, "index": g.index, "coeff": _coeff_to_str(c)}
        for g, c in elt.sorted_terms()
    ]


def element_from_obj(algebra: AlgebraSpec, data) -> Element:
    if not isinstance(data, list):
        raise FormatError("element payload must be a list of terms")
    acc = {}
    for item in data:
        gen = _generator_from_dict(item)
        try:
            algebra.check_generator(gen)
        except ValueError as exc:
            raise FormatError(str(exc))
        coeff = _coeff_from_str(item.get("coeff", "1"))
        acc[gen] = acc.get(gen, 0) + coeff
    return Element(algebra, acc)


def _tensor_to_obj(t) -> list:
    return [
        {"slots": [_generator_to_dict(g) for g in slots], "coeff": _coeff_to_str(c)}
        for slots, c in t.sorted_terms()
    ]


def tensor2_to_obj(t: Tensor2) -> list:
    return _tensor_to_obj(t)


def tensor3_to_obj(t: Tensor3) -> list:
    return _tensor_to_obj(t)


def _tensor_from_obj(algebra, data, rank, cls):
    if not isinstance(data, list):
        raise FormatError("tensor payload must be a list of terms")
    acc = {}
    for item in data:
        try:
            raw_slots = item["slots"]
        except (TypeError, KeyError):
            raise FormatError("tensor term needs 'slots', got %r" % (item,))
        if not isinstance(raw_slots, list) or len(raw_slots) != rank:
            raise FormatError("expected %d slots, got %r" % (rank, raw_slots))
        slots = tuple(_generator_from_dict(s) for s in raw_slots)
        for gen in slots:
            try:
                algebra.check_generator(gen)
            except ValueError as exc:
                raise FormatError(str(exc))
        coeff = _coeff_from_str(item.get("coeff", "1"))
        acc[slots] = acc.get(slots, 0) + coeff
    return cls(algebra, acc)


def tensor2_from_obj(algebra: AlgebraSpec, data) -> Tensor2:
    return _tensor_from_obj(algebra, data, 2, Tensor2)


def tensor3_from_obj(algebra: AlgebraSpec, data) -> Tensor3:
    return _tensor_from_obj(algebra, data, 3, Tensor3)


def load_tensor2(path, algebra: AlgebraSpec) -> Tensor2:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FormatError("invalid JSON in %s: %s" % (path, exc))
    return tensor2_from_obj(algebra, data)


def dump_tensor2(path, t: Tensor2):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(tensor2_to_obj(t), handle, indent=2, sort_keys=True)
        handle.write("\n")

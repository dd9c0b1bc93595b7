"""Context JSON.

A context is an object such as::

    {"ring": {"kind": "gfp", "p": 5}, "k": 2,
     "a": [["0", "0"], ["0", "1"]], "v": [["0", "-1"], ["1", "0"]], ...}

Scalars are strings (``"-3"``, ``"2/7"``) or integers.  Which matrix keys
are read depends on the inverse kind: ``a b c v w`` for ``bc``, ``hybrid``
and ``annihilator``; ``a d v w`` for ``along-d``; ``a v w e f`` for
``bott-duffin``.  Missing ``v`` or ``w`` default to the identity.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import WBCError
from .ring import Matrix, RingSpec
from .weighted import KINDS, BottDuffinContext, WeightedContext

SLOTS = {"bc": "abcvw", "hybrid": "abcvw", "annihilator": "abcvw",
         "along-d": "advw", "bott-duffin": "avwef"}


class InputError(WBCError, ValueError):
    """Malformed context JSON."""


def read_json(source: str) -> dict:
    """Parse ``source`` as inline JSON or, failing that, as a path to a JSON file."""
    text = source.strip()
    if not text.startswith("{"):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("a context must be a JSON object")
    return obj


def parse_ring(obj) -> RingSpec:
    try:
        if isinstance(obj, str):
            return RingSpec.parse(obj)
        return RingSpec.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad ring {obj!r}: {exc}") from None


def parse_matrices(obj: dict, slots: str) -> tuple[RingSpec, int, dict]:
    if "ring" not in obj:
        raise InputError("context lacks 'ring'")
    ring = parse_ring(obj["ring"])
    k = obj.get("k")
    out = {}
    for s in slots:
        if s not in obj:
            if s in "vw":
                continue
            raise InputError(f"context lacks matrix '{s}'")
        try:
            m = Matrix(ring, obj[s])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"matrix '{s}': {exc}") from None
        if k is None:
            k = m.k
        if m.k != int(k):
            raise InputError(f"matrix '{s}' is {m.k}x{m.k}, expected k={k}")
        out[s] = m
    if k is None:
        raise InputError("cannot infer k")
    k = int(k)
    for s in "vw":
        if s in slots and s not in out:
            out[s] = Matrix.identity(ring, k)
    return ring, k, out


def load_context(obj: dict, kind: str):
    """Build the context object an inverse of ``kind`` is computed against.

    ``along-d`` yields a :class:`WeightedContext` with ``b = c = d``.
    """
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    _, _, m = parse_matrices(obj, SLOTS[kind])
    if kind == "bott-duffin":
        return BottDuffinContext(m["a"], m["v"], m["w"], m["e"], m["f"])
    if kind == "along-d":
        return WeightedContext(m["a"], m["d"], m["d"], m["v"], m["w"])
    return WeightedContext(m["a"], m["b"], m["c"], m["v"], m["w"])


def context_to_json(ctx, kind: str) -> dict:
    obj = {"ring": ctx.ring.to_json(), "k": ctx.k}
    if kind == "bott-duffin":
        names = {"a": ctx.a, "v": ctx.v, "w": ctx.w, "e": ctx.e, "f": ctx.f}
    elif kind == "along-d":
        names = {"a": ctx.a, "d": ctx.b, "v": ctx.v, "w": ctx.w}
    else:
        names = {"a": ctx.a, "b": ctx.b, "c": ctx.c, "v": ctx.v, "w": ctx.w}
    obj.update({n: m.entries_json() for n, m in names.items()})
    return obj

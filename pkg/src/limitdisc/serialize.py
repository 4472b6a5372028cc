"""JSON encodings of maps, discs, generator files, words and reports."""

from __future__ import annotations

import json
import math
from pathlib import Path

from .classify import Classification, WordSpec
from .errors import InputError, ParseError
from .mobius import INF, Disc, MobiusMap, make_mobius
from .tangency import TANGENCY_TOL, GeneratorSet, TangencyData, TangencyGraph


def num(x):
    """Float for JSON; non-finite values become strings so output stays strict JSON."""
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def point_to_json(z):
    if z is INF:
        return "inf"
    z = complex(z)
    return [num(z.real), num(z.imag)]


def point_from_json(v):
    if v == "inf":
        return INF
    if isinstance(v, (int, float)):
        return complex(v)
    try:
        re, im = v
        return complex(float(re), float(im))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"expected [re, im] or 'inf', got {v!r}") from exc


def mobius_to_json(f: MobiusMap) -> dict:
    return {k: point_to_json(getattr(f, k)) for k in "abcd"}


def mobius_from_json(obj: dict) -> MobiusMap:
    try:
        return make_mobius(*(point_from_json(obj[k]) for k in "abcd"))
    except KeyError as exc:
        raise ParseError(f"map entry {exc} missing") from None


def disc_to_json(D: Disc) -> dict:
    return {"center": point_to_json(D.center), "radius": num(D.radius)}


def disc_from_json(obj: dict) -> Disc:
    return Disc(point_from_json(obj["center"]), float(obj["radius"]))


def _read(source):
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source} is not valid JSON: {exc}") from exc


def load_generators(source, tol=None) -> GeneratorSet:
    """Generator file {"generators": [{"name", "a", "b", "c", "d"}, ...], "tol"?}."""
    doc = _read(source)
    gens = doc.get("generators") if isinstance(doc, dict) else None
    if not isinstance(gens, list) or not gens:
        raise ParseError("generator file needs a nonempty 'generators' list")
    items = []
    for i, g in enumerate(gens):
        if not isinstance(g, dict) or "name" not in g:
            raise ParseError(f"generator #{i} needs a name and entries a, b, c, d")
        items.append((str(g["name"]), mobius_from_json(g)))
    if tol is None:
        tol = float(doc.get("tol", TANGENCY_TOL))
    return GeneratorSet(items, tol)


def generators_to_json(F: GeneratorSet) -> dict:
    return {
        "generators": [{"name": n, **mobius_to_json(f)} for n, f, _ in F],
        "tol": F.tol,
    }


def load_word(source, F: GeneratorSet) -> WordSpec:
    doc = _read(source)
    if not isinstance(doc, dict) or not ("prefix" in doc or "period" in doc):
        raise ParseError("word file needs 'prefix' and/or 'period' name lists")
    w = WordSpec.from_names(F, doc.get("prefix", []), doc.get("period", []))
    if not w.prefix and not w.period:
        raise InputError("word is empty")
    return w


def tangency_to_json(d: TangencyData) -> dict:
    return {
        "tangent": d.tangent,
        "alpha": point_to_json(d.alpha),
        "beta": point_to_json(d.beta),
        "gamma": num(d.gamma),
        "image_disc": disc_to_json(d.image),
    }


def graph_to_json(G: TangencyGraph, rho: float) -> dict:
    return {
        "vertices": list(G.names),
        "edges": [list(e) for e in G.edges()],
        "adjacency": G.adjacency.tolist(),
        "tol": G.tol,
        "spectral_radius": num(rho),
    }


def classification_to_json(c: Classification) -> dict:
    return {
        "verdict": c.verdict.value,
        "limit_tangent": c.limit_tangent,
        "tail_start": c.tail_start,
        "gamma_period_product": num(c.gamma_period_product),
        "borderline": c.borderline,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False)

"""Fractional hypertree width toolkit.

Hypergraphs, instances and decompositions are plain dicts in the same JSON
shapes the command-line tool reads and writes. Rational results come back as
``fractions.Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterator, Optional, Union

from . import _core
from ._core import ResourceLimitError

__all__ = [
    "ResourceLimitError",
    "rho_star",
    "alpha_star",
    "fractional_edge_cover",
    "edge_cover_number",
    "exact_width",
    "validate",
    "army_width",
    "general_wins",
    "decompose_by_separators",
    "solve",
    "enumerate_by_cover",
    "brute_force_solutions",
    "enumerate_all",
    "project_solutions",
    "generate_tight",
    "generate_hn",
    "generate_matching",
    "generate_universal",
    "generate_path",
    "generate_cycle",
    "generate_random",
]

Doc = Union[dict, str]
Budget = Union[Fraction, int, str]


def _text(doc: Doc) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def _opt(doc: Optional[Doc]) -> Optional[str]:
    return None if doc is None else _text(doc)


def _budget(r: Budget) -> str:
    f = Fraction(r)
    return f"{f.numerator}/{f.denominator}"


def _weights(witness: list) -> list:
    return [(entry["edge"], Fraction(entry["weight"])) for entry in witness]


def rho_star(h: Doc) -> Fraction:
    return Fraction(json.loads(_core.rho_star(_text(h)))["value"])


def fractional_edge_cover(h: Doc, target: Optional[list] = None) -> tuple[Fraction, list]:
    """Optimal value and a witness as ``[(edge, weight), ...]``; target defaults to all vertices."""
    text = _text(h)
    out = json.loads(_core.rho_star(text) if target is None else _core.fractional_edge_cover(text, list(target)))
    return Fraction(out["value"]), _weights(out["witness"])


def alpha_star(h: Doc) -> tuple[Fraction, dict]:
    out = json.loads(_core.alpha_star(_text(h)))
    return Fraction(out["value"]), {v: Fraction(w) for v, w in out["witness"].items()}


def edge_cover_number(h: Doc, target: Optional[list] = None) -> tuple[int, list]:
    """Minimum number of edges covering ``target`` (default: every vertex) and the edges used."""
    text = _text(h)
    if target is None:
        doc = json.loads(text)
        target = doc.get("vertices") or list(dict.fromkeys(v for e in doc["edges"] for v in e))
    out = json.loads(_core.edge_cover_number(text, list(target)))
    return out["value"], out["witness"]


def exact_width(h: Doc, measure: str = "fhw") -> tuple[Fraction, dict]:
    """Exact tree width ("tree"), ghw ("ghw") or fhw ("fhw") with a witness decomposition."""
    out = json.loads(_core.exact_width(_text(h), measure))
    return Fraction(out["value"]), out["decomposition"]


def validate(h: Doc, decomposition: Doc) -> dict:
    report = json.loads(_core.validate(_text(h), _text(decomposition)))
    report["width"] = Fraction(report["width"])
    return report


def army_width(h: Doc) -> Fraction:
    return Fraction(_core.army_width(_text(h)))


def general_wins(h: Doc, budget: Budget) -> bool:
    return _core.general_wins(_text(h), _budget(budget))


def decompose_by_separators(h: Doc, budget: Budget) -> Optional[dict]:
    out = _core.decompose_by_separators(_text(h), _budget(budget))
    return None if out is None else json.loads(out)


def solve(instance: Doc, decomposition: Optional[Doc] = None) -> Optional[dict]:
    out = _core.solve(_text(instance), _opt(decomposition))
    return None if out is None else json.loads(out)


def enumerate_by_cover(instance: Doc) -> list:
    return [json.loads(s) for s in _core.enumerate_by_cover(_text(instance))]


def brute_force_solutions(instance: Doc) -> list:
    return [json.loads(s) for s in _core.brute_force_solutions(_text(instance))]


def enumerate_all(instance: Doc, decomposition: Optional[Doc] = None) -> Iterator[dict]:
    """Lazily yields every solution in lexicographic order."""
    for s in _core.enumerate_all(_text(instance), _opt(decomposition)):
        yield json.loads(s)


def project_solutions(instance: Doc, variables: list, decomposition: Optional[Doc] = None) -> Iterator[dict]:
    """Lazily yields each distinct restriction of a solution to ``variables``."""
    for s in _core.project_solutions(_text(instance), list(variables), _opt(decomposition)):
        yield json.loads(s)


def generate_tight(h: Doc, n0: int) -> dict:
    return json.loads(_core.generate_tight(_text(h), n0))


def generate_hn(n: int) -> dict:
    return json.loads(_core.generate_hn(n))


def generate_matching(k: int) -> dict:
    return json.loads(_core.generate_matching(k))


def generate_universal(n: int) -> dict:
    return json.loads(_core.generate_universal(n))


def generate_path(n: int) -> dict:
    return json.loads(_core.generate_path(n))


def generate_cycle(n: int) -> dict:
    return json.loads(_core.generate_cycle(n))


def generate_random(seed: int, num_vars: int, domain_size: int, num_constraints: int, max_arity: int,
                    tuple_density: float) -> dict:
    return json.loads(_core.generate_random(seed, num_vars, domain_size, num_constraints, max_arity, tuple_density))

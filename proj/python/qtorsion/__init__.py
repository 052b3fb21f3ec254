"""Exact torsion of chain maps over Q and Q(t).

Complexes and maps are the JSON documents used by the command-line tool,
given either as a dict or as a path to a file. Scalars come back as their
canonical strings ("1/2", "1/(t-1)").
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Union

from . import _core
from ._core import QTorsionError

Document = Union[dict, str, os.PathLike]

QTorsionError.message = property(lambda e: e.args[0])
QTorsionError.code = property(lambda e: e.args[1])
QTorsionError.degree = property(lambda e: e.args[2])

__all__ = [
    "QTorsionError",
    "dual",
    "generate",
    "homology",
    "induced_maps",
    "is_quasi_isomorphism",
    "order_of_homology",
    "rational",
    "rational_function",
    "run_cli",
    "smith_normal_form",
    "torsion",
    "torsion_acyclic",
    "torsion_over_ufd",
    "torsion_self_map",
    "turaev_torsion",
    "validate",
]


def _load(doc: Document) -> tuple[str, str]:
    """JSON text plus the directory that relative references resolve against."""
    if isinstance(doc, dict):
        return json.dumps(doc), ""
    path = Path(doc)
    return path.read_text(encoding="utf-8"), str(path.parent)


def rational(text: str) -> str:
    return _core.rational(text)


def rational_function(text: str) -> str:
    return _core.rational_function(text)


def validate(doc: Document) -> None:
    """Raises QTorsionError unless doc is a valid complex or chain map."""
    text, base = _load(doc)
    if "source" in json.loads(text):
        _core.validate_map(text, base)
    else:
        _core.validate_complex(text)


def homology(complex_doc: Document) -> list[dict[str, Any]]:
    return json.loads(_core.homology(_load(complex_doc)[0]))


def induced_maps(map_doc: Document) -> list[list[list[str]]]:
    return json.loads(_core.induced_maps(*_load(map_doc)))


def is_quasi_isomorphism(map_doc: Document) -> bool:
    return _core.is_quasi_isomorphism(*_load(map_doc))


def torsion(map_doc: Document) -> str:
    return _core.torsion(*_load(map_doc))


def torsion_self_map(map_doc: Document) -> str:
    return _core.torsion_self_map(*_load(map_doc))


def torsion_acyclic(complex_doc: Document) -> str:
    return _core.torsion_acyclic(_load(complex_doc)[0])


def dual(doc: Document) -> dict:
    return json.loads(_core.dual(*_load(doc)))


def smith_normal_form(matrix: list[list[str]]) -> dict[str, Any]:
    """U, U^-1, V, D with U A V = D over Q[t]; entries are polynomial strings."""
    return json.loads(_core.smith_normal_form(json.dumps(matrix)))


def order_of_homology(complex_doc: Document, degree: int) -> str:
    return _core.order_of_homology(_load(complex_doc)[0], degree)


def turaev_torsion(complex_doc: Document) -> str:
    """Alternating product of homology orders; meaningful up to a nonzero rational."""
    return _core.turaev_torsion(_load(complex_doc)[0])


def torsion_over_ufd(map_doc: Document) -> str:
    return _core.torsion_over_ufd(*_load(map_doc))


def generate(seed: int, length: int = 2, max_dim: int = 4, profile: str = "iso", field: str = "Q") -> dict:
    return json.loads(_core.generate(seed, length, max_dim, profile, field))


def run_cli(*args: str) -> tuple[int, str, str]:
    """Runs one command line in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))

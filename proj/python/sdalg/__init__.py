"""Exact checks for self-distributive algebras, bialgebras and Yang-Baxter operators."""

import json

from ._core import (
    EnumerationIncomplete,
    ParseError,
    check_magma,
    enumerate_racks,
    known_axioms,
    run,
    ybe,
)
from ._core import check_bialgebra as _check_bialgebra


def _text(structure):
    return structure if isinstance(structure, str) else json.dumps(structure)


def check_bialgebra(structure, axioms=(), ring=None):
    """Axiom reports for a bialgebra given as a dict or JSON text."""
    ring_text = None if ring is None else _text(ring)
    return json.loads(_check_bialgebra(_text(structure), list(axioms), ring_text))


def construct(kind, source, ring=None):
    """Builds a structure with the command-line constructors and returns it as a dict."""
    args = [] if ring is None else ["--ring", _text(ring)]
    code, out, err = run(args + ["construct", kind, source])
    if code != 0:
        raise ValueError(err.strip())
    return json.loads(out)


def classify(type_, a=None):
    """Machine-readable classification report; the exit code says whether it matched the reference lists."""
    args = ["classify", "--type", str(type_), "--json"]
    if a is not None:
        args += ["--a", str(a)]
    code, out, err = run(args)
    if code == 3:
        raise EnumerationIncomplete(err.strip())
    if code == 2:
        raise ValueError(err.strip())
    return code, json.loads(out)


__all__ = [
    "EnumerationIncomplete",
    "ParseError",
    "check_bialgebra",
    "check_magma",
    "classify",
    "construct",
    "enumerate_racks",
    "known_axioms",
    "run",
    "ybe",
]

"""Gorenstein-projective checks for finite EI categories.

Categories, posets, modules and specs are plain dicts in the same JSON
formats the command line tool reads and writes.
"""

import json

from . import _core
from ._core import EigprojError

__all__ = [
    "EigprojError",
    "analyze",
    "column",
    "digest",
    "enumerate_posets",
    "generate",
    "gproj",
    "gpt_closed",
    "poset_gpt",
    "random_spec",
    "tensor",
    "validate",
]


def _enc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate(category):
    """List of violation messages; empty for a valid category."""
    return json.loads(_core.validate(_enc(category)))


def analyze(category, fields=(2,), audit=False):
    return json.loads(_core.analyze(_enc(category), list(fields), audit))


def gpt_closed(category, p, audit=False):
    return json.loads(_core.gpt_closed(_enc(category), p, audit))


def poset_gpt(poset):
    return json.loads(_core.poset_gpt(_enc(poset)))


def column(category, q, p):
    return json.loads(_core.column(_enc(category), q, p))


def tensor(category, a, b):
    return json.loads(_core.tensor(_enc(category), _enc(a), _enc(b)))


def gproj(category, module):
    return json.loads(_core.gproj(_enc(category), _enc(module)))


def generate(spec):
    return json.loads(_core.generate(_enc(spec)))


def random_spec(seed):
    return json.loads(_core.random_spec(seed))


def digest(category):
    return _core.digest(_enc(category))


def enumerate_posets(n):
    return [json.loads(p) for p in _core.enumerate_posets(n)]

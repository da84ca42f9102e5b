"""Exact decision procedures and point constructions for toric pairs."""

import json as _json

from . import _core
from ._core import ComputationDefect, InputError

__all__ = [
    "ComputationDefect",
    "InputError",
    "approximate",
    "classify_thinness",
    "decide_m_approx",
    "enumerate",
    "example",
    "invariants",
    "is_m_point",
    "pi1",
    "run_cli",
    "snf",
    "validate_fan",
]


def _arg(x):
    # dicts/lists become inline JSON; strings pass through (path, JSON or builtin name)
    return x if isinstance(x, str) else _json.dumps(x)


def _mults(m):
    return m if isinstance(m, str) else ",".join("inf" if v in (None, float("inf"), "inf") else str(v) for v in m)


def run_cli(*args):
    """Run the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])


def validate_fan(fan):
    return _json.loads(_core.validate_fan(_arg(fan)))


def invariants(fan, cond):
    return _json.loads(_core.invariants(_arg(fan), _arg(cond)))


def decide_m_approx(fan, cond, field="q", T_nonempty=True):
    return _json.loads(_core.decide_m_approx(_arg(fan), _arg(cond), _arg(field), T_nonempty))


def classify_thinness(fan, cond, field="q", excluded_places=0, b_equals_c=False):
    return _json.loads(_core.classify_thinness(_arg(fan), _arg(cond), _arg(field), excluded_places, b_equals_c))


def pi1(fan, m, characteristic=0):
    return _json.loads(_core.pi1(_arg(fan), _mults(m), characteristic))


def is_m_point(fan, cond, point, excluded=()):
    if not isinstance(point, (str, dict)):
        point = {"coords": [str(c) for c in point]}
    return _json.loads(_core.is_m_point(_arg(fan), _arg(cond), _arg(point), [str(p) for p in excluded]))


def enumerate(fan, cond, height, toric=False, threads=1):
    return _json.loads(_core.enumerate(_arg(fan), _arg(cond), height, toric, threads))


def approximate(fan, cond, targets, seed=0):
    return _json.loads(_core.approximate(_arg(fan), _arg(cond), _arg(targets), seed))


def example(name, r=0, n=0, d=0, m="", T_nonempty=True):
    return _json.loads(_core.example(name, r, n, d, _mults(m) if m else "", T_nonempty))


def snf(matrix):
    return _json.loads(_core.snf(_arg(matrix)))

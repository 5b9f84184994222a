"""Exact toolkit for the argument-shift subalgebras of gl_n.

Thin JSON wrappers over the compiled core: every function takes and returns
plain Python dicts/lists; all arithmetic inside is exact.
"""

import json

from . import _core

__all__ = ["diagram", "generators", "verify", "ss_check"]


def _as_text(problem):
    if isinstance(problem, str):
        return problem
    return json.dumps(problem)


def diagram(problem):
    """Jordan type, gamma, and the retained/excluded staircase boxes."""
    return json.loads(_core.diagram(_as_text(problem)))


def generators(problem, family="phi"):
    """One generator family (phi | psi-mm | theta-mm | varphi | psi) with symbols."""
    return json.loads(_core.generators(_as_text(problem), family))


def verify(problem, suites=(), family="phi", seed=1, negative_control=False):
    """Run verification suites; `suites` is an iterable of suite names (empty = default set)."""
    if isinstance(suites, str):
        suites_csv = suites
    else:
        suites_csv = ",".join(suites)
    return json.loads(
        _core.verify(_as_text(problem), suites_csv, family, seed, negative_control)
    )


def ss_check(n, family="phi", max_m=0):
    """Vacuum membership probes for the loop families phi | psi | theta."""
    return json.loads(_core.ss_check(n, family, max_m))

"""Cactus operad workbench."""

import json

from ._cactop import (
    betti,
    cactus_dot,
    count_cacti,
    hochschild_suite,
    hochschild_suite_json,
    normalize,
    verify_bv,
    verify_relations,
)
from . import _cactop


def enumerate_cacti(profile, framed=False):
    """Cacti of a profile such as "2:1,0" as JSON-like dicts."""
    return json.loads(_cactop.enumerate_json(profile, framed))


__all__ = [
    "betti",
    "cactus_dot",
    "count_cacti",
    "enumerate_cacti",
    "hochschild_suite",
    "hochschild_suite_json",
    "normalize",
    "verify_bv",
    "verify_relations",
]

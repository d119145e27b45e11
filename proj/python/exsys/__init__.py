"""Exterior algebras, Clifford words and Schubert derivations over symmetrized semirings."""

import json

from ._exsys import (
    ParseError,
    check_names,
    conjugate,
    contract,
    normal_form,
    pieri,
    schubert,
    wedge,
)

__all__ = [
    "ParseError",
    "check_names",
    "conjugate",
    "contract",
    "normal_form",
    "pieri",
    "schubert",
    "verify",
    "wedge",
]


def verify(semirings=("nat",), rmax=3, weight=6, zmax=8, wmax=8, pieri_max=4, checks=(), n=None, threads=0):
    """Run the identity checks and return the JSON report as a dict."""
    from ._exsys import _verify_json

    if isinstance(semirings, str):
        semirings = [semirings]
    text = _verify_json(list(semirings), rmax, weight, zmax, wmax, pieri_max, list(checks), n, threads)
    return json.loads(text)

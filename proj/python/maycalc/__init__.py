"""May spectral sequence E1/E2 engine, Ext certificates and Greek-letter bookkeeping."""

import json

from ._core import (
    MaycalcError,
    __version__,
    basis,
    beta_list,
    d1,
    eval_degree,
    ext0_list,
    ext1_bpk_list,
    multiply,
    product_nonzero,
    stem,
    stem_families,
    thom,
    verify_text,
)
from . import _core

__all__ = [
    "MaycalcError",
    "basis",
    "beta_list",
    "certificate",
    "d1",
    "e2",
    "eval_degree",
    "ext0_list",
    "ext1_bpk_list",
    "les",
    "multiply",
    "product_nonzero",
    "stem",
    "stem_families",
    "thom",
    "verify",
    "window",
]


def e2(p, s, t, reversed=False):
    return json.loads(_core.e2_json(p, s, t, reversed))


def certificate(p, s, t, with_basis=False):
    return json.loads(_core.certificate_json(p, s, t, with_basis))


def window(p, s, t, r_min=2, r_max=2):
    return json.loads(_core.window_json(p, s, t, r_min, r_max))


def les(p, spectrum, s, t, column="cohomology"):
    return json.loads(_core.les_json(p, spectrum, s, t, column))


def verify(claims, include_conjectures=False, workers=0):
    """Evaluate a claims list (or JSON text); returns (exit_code, report_text)."""
    text = claims if isinstance(claims, str) else json.dumps(claims)
    return verify_text(text, include_conjectures, workers)

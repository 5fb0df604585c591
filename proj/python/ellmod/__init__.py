"""Exact invariants of the elliptic surfaces X_c (Python front end to the C++ core)."""

import json
from fractions import Fraction

from ._core import (
    DomainError,
    InconsistentConfiguration,
    TableFormatError,
    TableUnavailable,
    Unsupported,
    abelianization_check,
    abelianization_image,
    chain_determinant,
    congruence_lookup,
    cusp_signature,
    fixed_points,
    hj_expansion,
    invariants,
    j_degree,
    jprofile,
    kodaira_dimension,
    mw_torsion_group,
    normalize_weights,
    plurigenus,
    resolve,
    run_cli,
    section_count,
)
from ._core import tower_pushforward as _tower_pushforward


def tower_pushforward(a1, a2, c, m):
    """Closed-form image of the vanishing sequence (a1, a2) at the top of the tower, as Fractions."""
    (n1, d1), (n2, d2) = _tower_pushforward(a1, a2, c, m)
    return Fraction(n1, d1), Fraction(n2, d2)


def report(*args):
    """Run a CLI subcommand with JSON output; returns (exit code, parsed report)."""
    code, out, err = run_cli(list(args) + ["--format", "json"])
    if not out:
        raise RuntimeError(err.strip())
    return code, json.loads(out)


__all__ = [name for name in dir() if not name.startswith("_")]
